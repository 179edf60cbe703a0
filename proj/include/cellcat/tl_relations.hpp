#pragma once

#include "cellcat/tl_diagram.hpp"

#include <json.hpp>

#include <cstdint>

namespace cellcat::tl {

struct RelationReport {
  int max_n = 0;
  std::size_t checked = 0;
  bool pass = true;
  nlohmann::ordered_json witness;  // first failing identity
};

/// e_i^2 = delta e_i, e_i e_{i+-1} e_i = e_i and e_i e_j = e_j e_i for |i - j| >= 2,
/// for every n <= max_n.
RelationReport check_relations(int max_n);

/// Associativity, star(f g) = star(g) star(f) and the interchange law on
/// `samples` random composable triples with objects <= max_n.
RelationReport check_category_laws(int max_n, std::uint64_t seed, int samples);

}  // namespace cellcat::tl
