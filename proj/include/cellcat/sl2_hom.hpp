#pragma once

#include "cellcat/cell_datum.hpp"
#include "cellcat/sl2.hpp"
#include "cellcat/tl_diagram.hpp"

#include <map>
#include <utility>
#include <vector>

namespace cellcat::sl2 {

/// Linear map between tensor powers, stored as a sparse matrix keyed by (out, in).
struct LinearMap {
  int source = 0;
  int target = 0;
  std::map<std::pair<WeightString, WeightString>, LaurentPoly> entries;

  TensorVector apply(const TensorVector& x) const;
  void add_entry(const WeightString& out, const WeightString& in, const LaurentPoly& c);
  friend bool operator==(const LinearMap&, const LinearMap&) = default;
};

LinearMap identity_map(int n);
/// "f first, then g".
LinearMap compose(const LinearMap& f, const LinearMap& g);
/// Reverse the strings, transpose and bar the coefficients.
LinearMap star(const LinearMap& f);
/// Commutes with E, F and K on every standard basis vector.
bool is_equivariant(const LinearMap& f);

/// The invariant of V (x) V, scaled to coefficient 1 on the order-maximal x01.
TensorVector cup_vector();
/// The pairing V (x) V -> trivial inverse to the cup under both zigzags.
LaurentPoly cap_value(int a, int b);
/// cap o cup.
LaurentPoly loop_value();

/// Basis of the joint kernel of E, F and K - 1 over Q(v). Built from weight-0
/// highest-weight vectors of the Clebsch-Gordan recursion, each checked to lie in
/// the kernel; completeness and independence are certified by ranks after
/// specializing v, with invariants_by_elimination as the fallback.
std::vector<TensorVector> invariants_basis(int n);
/// The same kernel by exact elimination (primitive vectors); slow beyond n = 8.
std::vector<TensorVector> invariants_by_elimination(int n);

struct CoinvariantData {
  int n = 0;
  std::size_t dimension = 0;       // of M / (E M + F M + (K - 1) M)
  std::size_t relation_rank = 0;   // rank of the relations inside weight 0
  std::size_t b0_count = 0;
  bool b0_basis = false;           // images of B[0] form a basis
};
CoinvariantData coinvariants(int n);

/// Cup diagram 0 -> n evaluated with one cup_vector per arc.
TensorVector diagram_to_invariant(const tl::Diagram& d);
/// diagram_to_invariant over enumerate_diagrams(0, n); throws for odd n.
std::vector<TensorVector> cup_diagram_basis(int n);

/// P(x, y) = sum x_a y_b prod_i cap(a_i, b_{N-1-i}) (nested caps).
LaurentPoly rainbow_pairing(const TensorVector& x, const TensorVector& y);

/// Invariants u_beta with P(b_gamma, u_beta) = [beta = gamma] for beta, gamma in B[0].
std::vector<std::pair<WeightString, TensorVector>> dual_canonical_invariants(int n);

struct BasisComparison {
  int n = 0;
  bool matched = false;
  std::string normalization;  // the one that matched, or ""
  nlohmann::ordered_json report;
};
/// Tries the dual canonical invariants as computed ("direct") and with v and v^-1
/// exchanged ("bar-flipped"), matching each against the cup diagram basis up to +-v^k.
BasisComparison compare_bases(int n);

/// Functional f on the (n+m)-th power bent into n -> m with cups on the right.
LinearMap bend_functional(const std::map<WeightString, LaurentPoly>& f, int n, int m);
/// Vector w of the (n+m)-th power bent into n -> m with nested caps on the left.
LinearMap bend_vector(const TensorVector& w, int n, int m);

/// Bent invariants; equivariance is checked and a failure throws.
std::vector<LinearMap> hom_space_basis(int n, int m);

/// x |-> coefficient of b_beta in x, for one beta of length N (cached per N).
const std::map<WeightString, LaurentPoly>& dual_canonical_functional(const WeightString& beta);

/// Canonical basis with default conventions, cached.
const BasedModuleData& cached_canonical_basis(int n);

struct CellFactors {
  int lambda = 0;
  WeightString first;   // in B_n[lambda]^hi
  WeightString second;  // in B_m[lambda]^hi
};
/// Block restriction of beta in B_{n+m}[0]: lo on the first n letters, hi on the
/// rest, equal labels. Throws Sl2Error with the offending string otherwise.
CellFactors block_labels(const WeightString& beta, int n, int m);

struct CountingCheck {
  int n = 0, m = 0;
  std::size_t b0_count = 0;     // |B_{n+m}[0]|
  std::size_t product_sum = 0;  // sum_mu |B_n[mu]^lo| |B_m[mu]^hi|
  bool pass = false;
};
CountingCheck counting_identity(int n, int m);

/// C(b, b') = bend of the functional of hi_to_lo(b) followed by b'.
LinearMap cell_map(const WeightString& b, const WeightString& b_prime);

std::uint64_t entry_key(const WeightString& out, const WeightString& in);
cellular::Morphism to_cell(const LinearMap& f);
LinearMap from_cell(const cellular::Morphism& f);

/// Objects 0..max_n, Lambda = {0 < 1 < ... < max_n}, K(n, l) = B_n[l]^hi.
cellular::CellDatum build_sl2_cell_datum(int max_n);

}  // namespace cellcat::sl2
