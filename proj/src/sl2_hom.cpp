#include "cellcat/sl2_hom.hpp"

#include "cellcat/linear_algebra.hpp"
#include "cellcat/rational_function.hpp"
#include "cellcat/tl_datum.hpp"

#include <algorithm>
#include <mutex>

namespace cellcat::sl2 {

using json = nlohmann::ordered_json;

namespace {

std::mutex& hom_mutex() {
  static std::mutex m;
  return m;
}

WeightString reversed_complement(const WeightString& a) {
  const std::uint32_t mask = a.size() >= 32 ? ~0u : ((1u << a.size()) - 1);
  return WeightString(~a.bits() & mask, a.size()).reversed();
}

std::vector<WeightString> weight_space(int n, int weight) {
  std::vector<WeightString> out;
  for (const auto& a : all_strings(n))
    if (a.weight() == weight) out.push_back(a);
  return out;
}

SparseVector sparse(const TensorVector& x) {
  SparseVector out;
  for (const auto& [a, c] : x.terms()) out.emplace(a.bits(), c);
  return out;
}

std::vector<WeightString> hi_cells(int n, int lambda) {
  std::vector<WeightString> out;
  for (const auto& a : all_strings(n)) {
    auto br = bracket(a);
    if (br.lambda == lambda && br.hi) out.push_back(a);
  }
  return out;
}

std::string cell_name(const WeightString& a) { return a.size() == 0 ? "()" : a.to_string(); }

}  // namespace

// ---- linear maps -------------------------------------------------------------

void LinearMap::add_entry(const WeightString& out, const WeightString& in, const LaurentPoly& c) {
  if (out.size() != target || in.size() != source) throw Sl2Error("matrix entry has the wrong shape");
  if (c.is_zero()) return;
  auto [it, inserted] = entries.emplace(std::make_pair(out, in), c);
  if (inserted) return;
  it->second = it->second + c;
  if (it->second.is_zero()) entries.erase(it);
}

TensorVector LinearMap::apply(const TensorVector& x) const {
  if (x.size() != source) throw Sl2Error("applying a map to a vector of the wrong length");
  TensorVector out(target);
  for (const auto& [key, c] : entries) {
    auto it = x.terms().find(key.second);
    if (it != x.terms().end()) out.add_term(key.first, c * it->second);
  }
  return out;
}

LinearMap identity_map(int n) {
  LinearMap f{n, n, {}};
  for (const auto& a : all_strings(n)) f.add_entry(a, a, LaurentPoly(1));
  return f;
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
  if (f.target != g.source) throw Sl2Error("composing maps with mismatched lengths");
  LinearMap out{f.source, g.target, {}};
  // f's entries are ordered by output first, so the row f(mid, .) is a contiguous range
  for (const auto& [key, e] : g.entries) {
    const WeightString& mid = key.second;
    for (auto it = f.entries.lower_bound({mid, WeightString(0, f.source)});
         it != f.entries.end() && it->first.first == mid; ++it)
      out.add_entry(key.first, it->first.second, e * it->second);
  }
  return out;
}

LinearMap star(const LinearMap& f) {
  LinearMap out{f.target, f.source, {}};
  for (const auto& [key, c] : f.entries) out.add_entry(key.second.reversed(), key.first.reversed(), c.bar());
  return out;
}

namespace {

// Matrix of E, F or K on the n-th power.
const LinearMap& generator_matrix(char which, int n) {
  static std::map<std::pair<char, int>, LinearMap> cache;
  {
    std::lock_guard<std::mutex> lock(hom_mutex());
    auto it = cache.find({which, n});
    if (it != cache.end()) return it->second;
  }
  LinearMap g{n, n, {}};
  for (const auto& a : all_strings(n)) {
    const TensorVector x = TensorVector::basis(a);
    const TensorVector y = which == 'E' ? act_E(x) : which == 'F' ? act_F(x) : act_K(x);
    for (const auto& [t, c] : y.terms()) g.add_entry(t, a, c);
  }
  std::lock_guard<std::mutex> lock(hom_mutex());
  return cache.emplace(std::make_pair(which, n), std::move(g)).first->second;
}

}  // namespace

bool is_equivariant(const LinearMap& f) {
  for (char which : {'E', 'F', 'K'})
    if (compose(generator_matrix(which, f.source), f) != compose(f, generator_matrix(which, f.target)))
      return false;
  return true;
}

// ---- cup and cap -------------------------------------------------------------

TensorVector cup_vector() {
  static const TensorVector cup = [] {
    auto inv = invariants_basis(2);
    if (inv.size() != 1) throw Sl2Error("V (x) V should have a one-dimensional invariant space");
    const auto& terms = inv[0].terms();
    auto top = std::max_element(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
      return position_key(x.first) < position_key(y.first);
    });
    const LaurentPoly lead = top->second;
    TensorVector out(2);
    for (const auto& [a, c] : terms) {
      auto q = exact_divide(c, lead);
      if (!q) throw Sl2Error("cup normalization is not integral");
      out.add_term(a, *q);
    }
    return out;
  }();
  return cup;
}

LaurentPoly cap_value(int a, int b) {
  if (a == b) return LaurentPoly();
  // cap is the inverse of the antidiagonal matrix of the cup
  const LaurentPoly g = cup_vector().coeff(WeightString(static_cast<std::uint32_t>(b << 1 | a), 2));
  auto q = exact_divide(LaurentPoly(1), g);
  if (!q) throw Sl2Error("cup coefficient is not a unit");
  return *q;
}

LaurentPoly loop_value() {
  LaurentPoly total;
  const TensorVector cup = cup_vector();
  for (const auto& [a, c] : cup.terms()) total = total + c * cap_value(a.at(0), a.at(1));
  return total;
}

// ---- invariants and coinvariants ---------------------------------------------

std::vector<TensorVector> invariants_by_elimination(int n) {
  std::vector<TensorVector> out;
  if (n == 0) {
    out.push_back(TensorVector::basis(WeightString(0, 0)));
    return out;
  }
  if (n % 2 != 0) return out;
  // K - 1 kills exactly the weight-0 space; impose E = F = 0 there
  const auto cols = weight_space(n, 0);
  std::map<WeightString, std::size_t> rows_e, rows_f;
  for (const auto& a : weight_space(n, 2)) rows_e.emplace(a, rows_e.size());
  for (const auto& a : weight_space(n, -2)) rows_f.emplace(a, rows_f.size());
  LaurentMatrix m(rows_e.size() + rows_f.size(), LaurentVector(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const TensorVector x = TensorVector::basis(cols[j]);
    const TensorVector ex = act_E(x);
    const TensorVector fx = act_F(x);
    for (const auto& [t, c] : ex.terms()) m[rows_e.at(t)][j] = c;
    for (const auto& [t, c] : fx.terms()) m[rows_e.size() + rows_f.at(t)][j] = c;
  }
  for (const auto& vec : nullspace(m, cols.size())) {
    TensorVector w(n);
    for (std::size_t j = 0; j < cols.size(); ++j) w.add_term(cols[j], vec[j]);
    out.push_back(std::move(w));
  }
  return out;
}

namespace {

TensorVector append_letter(const TensorVector& x, int letter) {
  TensorVector out(x.size() + 1);
  const WeightString tail(static_cast<std::uint32_t>(letter), 1);
  for (const auto& [a, c] : x.terms()) out.add_term(a + tail, c);
  return out;
}

// Highest-weight vectors of weight 0 in the n-th power: u (x) x0 raises the
// weight k by one, [k] u (x) x1 - v^-k F u (x) x0 lowers it.
std::vector<TensorVector> highest_weight_paths(int n) {
  std::map<int, std::vector<TensorVector>> hw{{0, {TensorVector::basis(WeightString(0, 0))}}};
  for (int step = 0; step < n; ++step) {
    const int remaining = n - step - 1;
    std::map<int, std::vector<TensorVector>> next;
    for (const auto& [k, us] : hw)
      for (const auto& u : us) {
        if (k + 1 <= remaining) next[k + 1].push_back(append_letter(u, 0));
        if (k >= 1 && k - 1 <= remaining)
          next[k - 1].push_back(quantum_int(k) * append_letter(u, 1) -
                                LaurentPoly::monomial(-k) * append_letter(act_F(u), 0));
      }
    hw = std::move(next);
  }
  return hw[0];
}

bool certified_basis(int n, const std::vector<TensorVector>& candidates) {
  for (const auto& w : candidates)
    if (!act_E(w).is_zero() || !act_F(w).is_zero()) return false;
  std::vector<SparseVector> family;
  for (const auto& w : candidates) family.push_back(sparse(w));
  if (specialized_rank(family) != candidates.size()) return false;
  // kernel dimension is at most |M_0| - rank of E on M_0
  const auto zero = weight_space(n, 0);
  std::vector<SparseVector> images;
  for (const auto& a : zero) images.push_back(sparse(act_E(TensorVector::basis(a))));
  return zero.size() - specialized_rank(images) == candidates.size();
}

}  // namespace

std::vector<TensorVector> invariants_basis(int n) {
  static std::map<int, std::vector<TensorVector>> cache;
  {
    std::lock_guard<std::mutex> lock(hom_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<TensorVector> out;
  if (n % 2 == 0) {
    out = highest_weight_paths(n);
    if (!certified_basis(n, out)) out = invariants_by_elimination(n);
  }
  std::lock_guard<std::mutex> lock(hom_mutex());
  return cache.emplace(n, std::move(out)).first->second;
}

CoinvariantData coinvariants(int n) {
  CoinvariantData out;
  out.n = n;
  // Off weight 0, K - 1 acts by the unit v^w - 1 of Q(v), so only weight 0 survives.
  const auto zero = weight_space(n, 0);
  std::vector<SparseVector> relations;
  for (const auto& a : weight_space(n, -2)) relations.push_back(sparse(act_E(TensorVector::basis(a))));
  for (const auto& a : weight_space(n, 2)) relations.push_back(sparse(act_F(TensorVector::basis(a))));
  out.relation_rank = sparse_rank(relations);
  out.dimension = zero.size() - out.relation_rank;
  const BasedModuleData& data = cached_canonical_basis(n);
  for (std::size_t i = 0; i < data.strings.size(); ++i)
    if (data.label[i] == 0) {
      relations.push_back(sparse(data.elements[i]));
      ++out.b0_count;
    }
  out.b0_basis = out.b0_count == out.dimension && sparse_rank(relations) == zero.size();
  return out;
}

TensorVector diagram_to_invariant(const tl::Diagram& d) {
  if (d.n() != 0) throw Sl2Error("diagram_to_invariant needs a cup diagram 0 -> n");
  const int m = d.m();
  std::vector<std::pair<int, int>> arcs;  // positions, left < right
  for (const auto& [a, b] : d.pairs()) {
    int i = m - a, j = m - b;
    arcs.emplace_back(std::min(i, j), std::max(i, j));
  }
  const TensorVector cup = cup_vector();
  TensorVector out(m);
  for (std::uint32_t choice = 0; choice < (1u << arcs.size()); ++choice) {
    WeightString s(0, m);
    LaurentPoly c(1);
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      const int left = (choice >> k) & 1u;
      s = s.with(arcs[k].first, left).with(arcs[k].second, 1 - left);
      c = c * cup.coeff(WeightString(static_cast<std::uint32_t>(left << 1 | (1 - left)), 2));
    }
    out.add_term(s, c);
  }
  if (!act_E(out).is_zero() || !act_F(out).is_zero())
    throw Sl2Error("diagram evaluation is not invariant");
  return out;
}

std::vector<TensorVector> cup_diagram_basis(int n) {
  if (n % 2 != 0) throw Sl2Error("cup diagrams need an even number of points");
  std::vector<TensorVector> out;
  for (const auto& d : tl::enumerate_diagrams(0, n)) out.push_back(diagram_to_invariant(d));
  return out;
}

LaurentPoly rainbow_pairing(const TensorVector& x, const TensorVector& y) {
  if (x.size() != y.size()) throw Sl2Error("pairing vectors of different lengths");
  LaurentPoly total;
  for (const auto& [a, c] : x.terms()) {
    auto it = y.terms().find(reversed_complement(a));
    if (it == y.terms().end()) continue;
    LaurentPoly k = c * it->second;
    for (int i = 0; i < a.size(); ++i) k = k * cap_value(a.at(i), 1 - a.at(i));
    total = total + k;
  }
  return total;
}

std::vector<std::pair<WeightString, TensorVector>> dual_canonical_invariants(int n) {
  if (n % 2 != 0) throw Sl2Error("dual canonical invariants need even n");
  const auto w = invariants_basis(n);
  const BasedModuleData& data = cached_canonical_basis(n);
  std::vector<WeightString> b0;
  for (std::size_t i = 0; i < data.strings.size(); ++i)
    if (data.label[i] == 0) b0.push_back(data.strings[i]);
  if (b0.size() != w.size()) throw Sl2Error("|B[0]| differs from the invariant dimension");
  const std::size_t k = w.size();
  LaurentMatrix g(k, LaurentVector(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) g[i][j] = rainbow_pairing(data.element(b0[i]), w[j]);
  if (k > 0 && determinant(g).is_zero()) throw Sl2Error("degenerate pairing between B[0] and invariants");
  const auto ginv = k > 0 ? inverse(g) : std::vector<std::vector<RationalFunction>>{};
  std::vector<std::pair<WeightString, TensorVector>> out;
  for (std::size_t i = 0; i < k; ++i) {
    std::map<WeightString, RationalFunction> acc;
    for (std::size_t j = 0; j < k; ++j) {
      if (ginv[j][i].is_zero()) continue;
      for (const auto& [a, c] : w[j].terms()) {
        auto [it, fresh] = acc.emplace(a, RationalFunction());
        it->second = it->second + ginv[j][i] * RationalFunction(c);
      }
    }
    TensorVector u(n);
    for (const auto& [a, c] : acc) {
      auto l = c.as_laurent();
      if (!l) throw Sl2Error("dual basis vector u" + b0[i].to_string() + " is not integral");
      u.add_term(a, *l);
    }
    out.emplace_back(b0[i], std::move(u));
  }
  return out;
}

BasisComparison compare_bases(int n) {
  if (n % 2 != 0 || n < 0) throw Sl2Error("compare_bases needs a non-negative even n");
  BasisComparison out;
  out.n = n;
  const auto diagrams = tl::enumerate_diagrams(0, n);
  const auto cups = cup_diagram_basis(n);
  const auto duals = dual_canonical_invariants(n);
  json attempts = json::array();
  for (const char* mode : {"direct", "bar-flipped"}) {
    const bool flip = std::string(mode) == "bar-flipped";
    json pairs = json::array();
    json mismatch;
    std::vector<bool> used(cups.size(), false);
    for (const auto& [beta, u0] : duals) {
      const TensorVector u = flip ? u0.bar_coefficients() : u0;
      bool found = false;
      for (std::size_t j = 0; j < cups.size() && !found; ++j) {
        if (used[j] || u.is_zero()) continue;
        const auto& [a, c] = *u.terms().begin();
        const LaurentPoly wa = cups[j].coeff(a);
        if (wa.is_zero()) continue;
        auto unit = exact_divide(c, wa);
        if (!unit || !unit->is_unit() || u != *unit * cups[j]) continue;
        used[j] = true;
        found = true;
        pairs.push_back({{"dual", cell_name(beta)},
                         {"diagram", cellular::diagram_name(diagrams[j])},
                         {"unit", unit->to_string()}});
      }
      if (!found) {
        mismatch = {{"dual", cell_name(beta)}, {"vector", u.to_string()}};
        break;
      }
    }
    const bool ok = mismatch.is_null();
    json entry = {{"normalization", mode}, {"matched", ok}};
    if (ok)
      entry["pairs"] = pairs;
    else
      entry["first_mismatch"] = mismatch;
    attempts.push_back(entry);
    if (ok && !out.matched) {
      out.matched = true;
      out.normalization = mode;
    }
  }
  out.report = {{"n", n},
                {"matched", out.matched},
                {"normalization", out.normalization},
                {"attempts", attempts},
                {"conventions", conventions_json()}};
  return out;
}

// ---- Hom spaces ----------------------------------------------------------------

LinearMap bend_functional(const std::map<WeightString, LaurentPoly>& f, int n, int m) {
  LinearMap out{n, m, {}};
  const TensorVector cup = cup_vector();
  for (const auto& [s, val] : f) {
    if (s.size() != n + m) throw Sl2Error("functional has the wrong length");
    const WeightString a = s.slice(0, n);
    const WeightString c = s.slice(n, m);
    LaurentPoly k = val;
    for (int i = 0; i < m; ++i)
      k = k * cup.coeff(WeightString(static_cast<std::uint32_t>(c.at(i) << 1 | (1 - c.at(i))), 2));
    out.add_entry(reversed_complement(c), a, k);
  }
  return out;
}

LinearMap bend_vector(const TensorVector& w, int n, int m) {
  if (w.size() != n + m) throw Sl2Error("vector has the wrong length");
  LinearMap out{n, m, {}};
  for (const auto& [s, val] : w.terms()) {
    const WeightString a = reversed_complement(s.slice(0, n));
    LaurentPoly k = val;
    for (int i = 0; i < n; ++i) k = k * cap_value(a.at(i), 1 - a.at(i));
    out.add_entry(s.slice(n, m), a, k);
  }
  return out;
}

std::vector<LinearMap> hom_space_basis(int n, int m) {
  std::vector<LinearMap> out;
  if ((n + m) % 2 != 0) return out;
  for (const auto& w : invariants_basis(n + m)) {
    LinearMap f = bend_vector(w, n, m);
    if (!is_equivariant(f)) throw Sl2Error("bent invariant is not a module map");
    out.push_back(std::move(f));
  }
  return out;
}

const BasedModuleData& cached_canonical_basis(int n) {
  static std::map<int, BasedModuleData> cache;
  {
    std::lock_guard<std::mutex> lock(hom_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  BasedModuleData data = canonical_basis(n);
  std::lock_guard<std::mutex> lock(hom_mutex());
  return cache.emplace(n, std::move(data)).first->second;
}

const std::map<WeightString, LaurentPoly>& dual_canonical_functional(const WeightString& beta) {
  using Table = std::map<WeightString, std::map<WeightString, LaurentPoly>>;
  static std::map<int, Table> cache;
  if (beta.weight() != 0) throw Sl2Error("functionals are tabulated on weight 0 only");
  const int n = beta.size();
  {
    std::lock_guard<std::mutex> lock(hom_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return it->second[beta];
  }
  const BasedModuleData& data = cached_canonical_basis(n);
  Table table;
  for (const auto& s : weight_space(n, 0))
    for (const auto& [t, c] : expand_in_canonical(TensorVector::basis(s), data)) table[t][s] = c;
  std::lock_guard<std::mutex> lock(hom_mutex());
  return cache.emplace(n, std::move(table)).first->second[beta];
}

CellFactors block_labels(const WeightString& beta, int n, int m) {
  auto fail = [&](const std::string& why) {
    return Sl2Error("labelling failure for " + beta.to_string() + " split " + std::to_string(n) + "+" +
                    std::to_string(m) + ": " + why);
  };
  if (beta.size() != n + m) throw fail("length mismatch");
  if (bracket(beta).lambda != 0) throw fail("not in B[0]");
  const WeightString first = beta.slice(0, n);
  const WeightString second = beta.slice(n, m);
  const BracketData b1 = bracket(first);
  const BracketData b2 = bracket(second);
  if (!b1.lo) throw fail("first block is not lo");
  if (!b2.hi) throw fail("second block is not hi");
  if (b1.lambda != b2.lambda) throw fail("block labels differ");
  CellFactors out{b1.lambda, lo_to_hi(first), second};
  const BracketData h = bracket(out.first);
  if (!h.hi || h.lambda != b1.lambda || hi_to_lo(out.first) != first) throw fail("lo/hi correspondence breaks");
  return out;
}

CountingCheck counting_identity(int n, int m) {
  CountingCheck out;
  out.n = n;
  out.m = m;
  for (const auto& beta : all_strings(n + m))
    if (bracket(beta).lambda == 0) {
      block_labels(beta, n, m);
      ++out.b0_count;
    }
  std::map<int, std::size_t> lo_n, hi_m;
  for (const auto& a : all_strings(n)) {
    auto br = bracket(a);
    if (br.lo) ++lo_n[br.lambda];
  }
  for (const auto& a : all_strings(m)) {
    auto br = bracket(a);
    if (br.hi) ++hi_m[br.lambda];
  }
  for (const auto& [mu, count] : lo_n) out.product_sum += count * hi_m[mu];
  out.pass = out.b0_count == out.product_sum;
  return out;
}

LinearMap cell_map(const WeightString& b, const WeightString& b_prime) {
  const WeightString beta = hi_to_lo(b) + b_prime;
  if (bracket(beta).lambda != 0)
    throw Sl2Error("C(" + b.to_string() + ", " + b_prime.to_string() + ") does not come from B[0]");
  return bend_functional(dual_canonical_functional(beta), b.size(), b_prime.size());
}

std::uint64_t entry_key(const WeightString& out, const WeightString& in) {
  return (static_cast<std::uint64_t>(out.bits()) << 32) | in.bits();
}

cellular::Morphism to_cell(const LinearMap& f) {
  cellular::Morphism out{f.source, f.target, {}};
  for (const auto& [key, c] : f.entries) out.coords.emplace(entry_key(key.first, key.second), c);
  return out;
}

LinearMap from_cell(const cellular::Morphism& f) {
  LinearMap out{f.source, f.target, {}};
  for (const auto& [key, c] : f.coords)
    out.add_entry(WeightString(static_cast<std::uint32_t>(key >> 32), f.target),
                  WeightString(static_cast<std::uint32_t>(key & 0xffffffffu), f.source), c);
  return out;
}

cellular::CellDatum build_sl2_cell_datum(int max_n) {
  if (max_n < 0 || 2 * max_n > WeightString::kMaxLength) throw Sl2Error("max_n out of range");
  for (int n = 0; n <= max_n; ++n)
    for (int m = 0; m <= max_n; ++m)
      if ((n + m) % 2 == 0 && !counting_identity(n, m).pass)
        throw Sl2Error("B[0] count does not factor for " + std::to_string(n) + "+" + std::to_string(m));
  cellular::CellDatum d;
  d.name = "sl2(max_n=" + std::to_string(max_n) + ")";
  std::vector<int> labels;
  for (int i = 0; i <= max_n; ++i) labels.push_back(i);
  d.objects = labels;
  d.poset = cellular::Poset::chain(labels);
  d.cells = [](int n, int lambda) {
    std::vector<std::string> names;
    for (const auto& a : hi_cells(n, lambda)) names.push_back(cell_name(a));
    return names;
  };
  d.c_map = [](int lambda, int n, std::size_t s, int m, std::size_t t) {
    return to_cell(cell_map(hi_cells(n, lambda).at(s), hi_cells(m, lambda).at(t)));
  };
  d.host.compose = [](const cellular::Morphism& f, const cellular::Morphism& g) {
    return to_cell(compose(from_cell(f), from_cell(g)));
  };
  d.host.star = [](const cellular::Morphism& f) { return to_cell(star(from_cell(f))); };
  d.host.ambient_basis = [](int n, int m) {
    std::vector<cellular::Morphism> out;
    for (const auto& f : hom_space_basis(n, m)) out.push_back(to_cell(f));
    return out;
  };
  return d;
}

}  // namespace cellcat::sl2
