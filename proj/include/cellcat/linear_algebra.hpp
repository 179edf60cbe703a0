#pragma once

#include "cellcat/laurent_poly.hpp"
#include "cellcat/rational_function.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace cellcat {

using LaurentVector = std::vector<LaurentPoly>;
using LaurentMatrix = std::vector<LaurentVector>;
/// Sparse coordinate vector over Z[v, v^-1]; absent keys are zero.
using SparseVector = std::map<std::uint64_t, LaurentPoly>;

void add_scaled(SparseVector& acc, const SparseVector& x, const LaurentPoly& scale);

struct Echelon {
  LaurentMatrix rows;                 // fraction-free row echelon form
  std::vector<std::size_t> pivots;    // pivot column of each nonzero row
  int sign = 1;                       // parity of row swaps
};

/// Fraction-free (Bareiss) elimination. Every intermediate entry is a minor of
/// the input, so each division is exact in Z[v, v^-1].
Echelon bareiss_echelon(LaurentMatrix m);

std::size_t rank(const LaurentMatrix& m);
LaurentPoly determinant(const LaurentMatrix& square);

/// Basis of the right kernel {x : m x = 0} over Q(v); each vector is scaled to
/// a primitive vector in Z[v, v^-1]^n.
std::vector<LaurentVector> nullspace(const LaurentMatrix& m, std::size_t columns);

/// Inverse of a square matrix over Q(v). Throws RingError when singular.
std::vector<std::vector<RationalFunction>> inverse(const LaurentMatrix& square);

/// Rank over Q(v) of a family of sparse vectors.
std::size_t sparse_rank(const std::vector<SparseVector>& family);

/// Image of a in Z/p under v -> t (t a unit mod p, p prime below 2^63).
std::uint64_t evaluate_mod(const LaurentPoly& a, std::uint64_t t, std::uint64_t p);
/// Rank after specializing v -> t modulo p. Never exceeds the rank over Q(v),
/// so it certifies independence when it equals the family size.
std::size_t specialized_rank(const std::vector<SparseVector>& family, std::uint64_t t = 1000003,
                             std::uint64_t p = 2305843009213693951ull);

/// Coordinates of vectors in the span of a fixed linearly independent family.
///
/// Picks a set of pivot coordinates on which the family restricts to an
/// invertible square matrix P and stores adj(P) together with det(P); an
/// expansion is then a sparse product followed by one exact division per
/// coefficient, and membership is confirmed on every coordinate.
class SpanExpander {
 public:
  struct Expansion {
    bool in_span = false;
    std::vector<RationalFunction> coeffs;
  };

  SpanExpander() = default;
  explicit SpanExpander(std::vector<SparseVector> family);

  std::size_t size() const { return family_.size(); }
  std::size_t rank() const { return rank_; }
  bool independent() const { return rank_ == family_.size(); }
  const LaurentPoly& pivot_determinant() const { return det_; }

  Expansion expand(const SparseVector& y) const;

 private:
  std::vector<SparseVector> family_;
  std::size_t rank_ = 0;
  std::vector<std::uint64_t> pivot_keys_;
  LaurentMatrix adjugate_;
  LaurentPoly det_;
};

}  // namespace cellcat
