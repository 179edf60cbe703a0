#pragma once

#include "cellcat/delta_poly.hpp"
#include "cellcat/laurent_poly.hpp"

#include <random>

namespace cellcat::testing {

inline constexpr unsigned kDefaultSeed = 20240611;

inline LaurentPoly random_laurent(std::mt19937& rng, int span = 4, int max_terms = 4) {
  std::uniform_int_distribution<int> exp(-span, span);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> count(0, max_terms);
  std::map<int, Integer> m;
  for (int i = count(rng); i > 0; --i) m[exp(rng)] += coeff(rng);
  return LaurentPoly::from_map(m);
}

inline DeltaPoly random_delta(std::mt19937& rng, int max_degree = 5) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> coeff(-7, 7);
  std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coeff(rng);
  return DeltaPoly(c);
}

// v + v^-1
inline LaurentPoly delta_lp() { return LaurentPoly::monomial(1) + LaurentPoly::monomial(-1); }

}  // namespace cellcat::testing
