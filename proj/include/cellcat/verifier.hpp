#pragma once

#include "cellcat/cell_datum.hpp"
#include "cellcat/rational_function.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace cellcat::cellular {

using json = nlohmann::ordered_json;
using DeltaMatrix = std::vector<std::vector<DeltaPoly>>;

DeltaMatrix matrix_product(const DeltaMatrix& a, const DeltaMatrix& b);
DeltaMatrix zero_matrix(std::size_t rows, std::size_t cols);

/// Position of C^lambda(S, T) in a C-image listing: S = K(n,lambda)[s], T = K(m,lambda)[t].
struct CellLabel {
  int lambda = 0;
  std::size_t s = 0;
  std::size_t t = 0;
  friend auto operator<=>(const CellLabel&, const CellLabel&) = default;
};

struct LabeledMorphism {
  CellLabel label;
  Morphism morphism;
};

struct LabeledExpansion {
  bool in_span = false;
  std::vector<std::pair<CellLabel, RationalFunction>> terms;  // nonzero terms only
};

struct C1Report {
  int n = 0, m = 0;
  std::size_t cardinality = 0;
  std::size_t dimension = 0;
  std::size_t rank = 0;
  bool span_matches = false;
  bool pass = false;
  json witness;
};

struct C2Report {
  int n = 0, m = 0;
  std::size_t checked = 0;
  bool pass = true;
  json witness;
};

/// r_a(S', S) for one basis morphism a and one label: rows S' in K(p,lambda),
/// columns S in K(n,lambda).
struct RTable {
  std::string a;
  int lambda = 0;
  DeltaMatrix r;
};

struct C3Report {
  int p = 0, n = 0, m = 0;
  std::size_t products = 0;
  bool pass = true;
  json witness;
  std::vector<RTable> r_tables;
};

struct GramForm {
  int n = 0;
  int lambda = 0;
  std::vector<std::string> basis;
  DeltaMatrix matrix;  // <T, U>
  bool independent = true;
  bool symmetric = true;
  json witness;
};

struct CellModule {
  int n = 0;
  int lambda = 0;
  std::vector<std::string> basis;
  std::vector<RTable> action;  // one table per basis element of End(n)
  bool multiplicative = true;
  json witness;
};

struct IdealSpan {
  std::set<int> ideal;
  int n = 0, m = 0;
  std::vector<std::string> basis;
  bool two_sided = true;
  json witness;
};

struct RhoModule {
  int m = 0;
  std::vector<std::size_t> basis;          // indices into c_image(n, m)
  std::vector<std::string> basis_names;
  std::vector<DeltaMatrix> action;         // one matrix per element of c_image(n, n)
};

struct RhoFunctor {
  int n = 0;
  std::set<int> ideal;
  std::vector<RhoModule> modules;  // one per object, in datum order
  /// (m, m', index into c_image(m, m')) -> matrix of x |-> compose(x, g)
  std::map<std::tuple<int, int, std::size_t>, DeltaMatrix> maps;
  bool closed = true;      // every value lands in the ideal
  bool equivariant = true;
  bool functorial = true;
  std::size_t checked_pairs = 0;
  json witness;
};

struct NaturalityReport {
  std::size_t squares = 0;
  bool pass = true;
  json witness;
};

struct InferredOrder {
  /// (lambda, mu): some product a C^lambda(S,T) has a nonzero mu-component.
  std::vector<std::pair<int, int>> leakage;
  bool acyclic = true;
  std::vector<int> cycle;
  /// Covering pairs (lower, higher) of the inferred strict order.
  std::vector<std::pair<int, int>> covers;
  std::optional<Poset> order;

  /// Every leakage edge lambda -> mu has mu < lambda in `declared`.
  bool consistent_with(const Poset& declared) const;
};

struct FunctorReport {
  bool order_preserving = true;
  std::size_t checked = 0;
  bool pass = true;
  json witness;
};

/// Exhaustive checker for a cell datum. Caches C-images and expanders per
/// Hom-space, so one instance should be reused across checks.
class Verifier {
 public:
  explicit Verifier(CellDatum datum);

  const CellDatum& datum() const { return datum_; }
  const std::vector<std::string>& cells(int n, int lambda);
  /// Every C^lambda(S, T): n -> m with its label, ordered by (lambda, S, T).
  const std::vector<LabeledMorphism>& c_image(int n, int m);
  std::string name(int n, int m, const CellLabel& label);
  LabeledExpansion expand(int n, int m, const Morphism& x);

  C1Report verify_c1(int n, int m);
  C2Report verify_c2(int n, int m);
  C3Report verify_c3(int p, int n, int m, bool keep_tables = true);
  GramForm bilinear_form(int n, int lambda);
  CellModule cell_module(int n, int lambda);
  IdealSpan ideal_span(const std::set<int>& ideal, int n, int m);
  RhoFunctor rho_functor(int n, const std::set<int>& ideal);
  NaturalityReport rho_naturality(int n, const std::set<int>& ideal, const std::set<int>& larger);
  InferredOrder infer_cell_order();

 private:
  struct HomSpace {
    std::vector<LabeledMorphism> image;
    std::map<CellLabel, std::size_t> position;
    SpanExpander expander;
    bool expander_ready = false;
  };
  HomSpace& hom(int n, int m);
  const Morphism& cell(int n, int m, const CellLabel& label);
  /// Coefficients of x on the subfamily `basis` of c_image(n, m); nullopt when
  /// x leaves that span or a coefficient is not in Z[delta].
  std::optional<std::vector<DeltaPoly>> coordinates(int n, int m, const Morphism& x,
                                                    const std::vector<std::size_t>& basis);

  CellDatum datum_;
  std::map<std::pair<int, int>, std::vector<std::string>> cells_;
  std::map<std::pair<int, int>, HomSpace> homs_;
};

DeltaPoly gram_determinant(const GramForm& g);

/// Checks a functor between two cellular categories on the generating ideals
/// {mu : mu <= lambda}.
FunctorReport verify_cellular_functor(const std::function<int(int)>& on_objects,
                                      const std::function<Morphism(const Morphism&)>& on_morphisms,
                                      const std::function<int(int)>& on_labels, Verifier& source,
                                      Verifier& target);

/// Z[delta] value of an expansion coefficient, if it has one.
std::optional<DeltaPoly> to_delta(const RationalFunction& c);

json to_json(const C1Report& r);
json to_json(const C2Report& r);
json to_json(const C3Report& r, bool with_tables);
json to_json(const GramForm& g);
json to_json(const CellModule& c);
json to_json(const InferredOrder& o);
json to_json(const DeltaMatrix& m);

}  // namespace cellcat::cellular
