#include "cellcat/verifier.hpp"

#include <algorithm>
#include <functional>

namespace cellcat::cellular {

namespace {

json label_json(int lambda, const std::string& s, const std::string& t) {
  return json{{"lambda", lambda}, {"S", s}, {"T", t}};
}

// Entry-wise comparison with absent entries read as zero, so that products
// through a zero-dimensional space compare correctly.
bool same_matrix(const DeltaMatrix& a, const DeltaMatrix& b) {
  const DeltaPoly zero;
  auto at = [&](const DeltaMatrix& x, std::size_t i, std::size_t j) -> const DeltaPoly& {
    return i < x.size() && j < x[i].size() ? x[i][j] : zero;
  };
  std::size_t rows = std::max(a.size(), b.size());
  std::size_t cols = 0;
  for (const auto& r : a) cols = std::max(cols, r.size());
  for (const auto& r : b) cols = std::max(cols, r.size());
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (at(a, i, j) != at(b, i, j)) return false;
  return true;
}

}  // namespace

DeltaMatrix zero_matrix(std::size_t rows, std::size_t cols) {
  return DeltaMatrix(rows, std::vector<DeltaPoly>(cols));
}

DeltaMatrix matrix_product(const DeltaMatrix& a, const DeltaMatrix& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b[0].size();
  DeltaMatrix out = zero_matrix(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

std::optional<DeltaPoly> to_delta(const RationalFunction& c) {
  auto l = c.as_laurent();
  if (!l) return std::nullopt;
  return try_delta_retract(*l);
}

bool InferredOrder::consistent_with(const Poset& declared) const {
  for (auto [lambda, mu] : leakage)
    if (!declared.contains(lambda) || !declared.contains(mu) || !declared.less(mu, lambda))
      return false;
  return true;
}

Verifier::Verifier(CellDatum datum) : datum_(std::move(datum)) {}

const std::vector<std::string>& Verifier::cells(int n, int lambda) {
  auto key = std::make_pair(n, lambda);
  auto it = cells_.find(key);
  if (it == cells_.end()) it = cells_.emplace(key, datum_.cells(n, lambda)).first;
  return it->second;
}

Verifier::HomSpace& Verifier::hom(int n, int m) {
  auto key = std::make_pair(n, m);
  auto it = homs_.find(key);
  if (it != homs_.end()) return it->second;
  HomSpace h;
  for (int lambda : datum_.poset.elements()) {
    const auto& ks = cells(n, lambda);
    const auto& kt = cells(m, lambda);
    for (std::size_t s = 0; s < ks.size(); ++s)
      for (std::size_t t = 0; t < kt.size(); ++t)
        h.image.push_back({{lambda, s, t}, datum_.c_map(lambda, n, s, m, t)});
  }
  for (std::size_t i = 0; i < h.image.size(); ++i) h.position.emplace(h.image[i].label, i);
  return homs_.emplace(key, std::move(h)).first->second;
}

const std::vector<LabeledMorphism>& Verifier::c_image(int n, int m) { return hom(n, m).image; }

const Morphism& Verifier::cell(int n, int m, const CellLabel& label) {
  HomSpace& h = hom(n, m);
  return h.image.at(h.position.at(label)).morphism;
}

std::string Verifier::name(int n, int m, const CellLabel& label) {
  return "C^" + std::to_string(label.lambda) + "(" + cells(n, label.lambda).at(label.s) + ", " +
         cells(m, label.lambda).at(label.t) + ")";
}

LabeledExpansion Verifier::expand(int n, int m, const Morphism& x) {
  HomSpace& h = hom(n, m);
  if (!h.expander_ready) {
    std::vector<SparseVector> family;
    family.reserve(h.image.size());
    for (const auto& lm : h.image) family.push_back(lm.morphism.coords);
    h.expander = SpanExpander(std::move(family));
    h.expander_ready = true;
  }
  LabeledExpansion out;
  if (!h.expander.independent()) return out;
  auto e = h.expander.expand(x.coords);
  out.in_span = e.in_span;
  if (!e.in_span) return out;
  for (std::size_t i = 0; i < e.coeffs.size(); ++i)
    if (!e.coeffs[i].is_zero()) out.terms.emplace_back(h.image[i].label, e.coeffs[i]);
  return out;
}

std::optional<std::vector<DeltaPoly>> Verifier::coordinates(int n, int m, const Morphism& x,
                                                            const std::vector<std::size_t>& basis) {
  auto e = expand(n, m, x);
  if (!e.in_span) return std::nullopt;
  const auto& image = c_image(n, m);
  std::vector<DeltaPoly> out(basis.size());
  for (const auto& [label, c] : e.terms) {
    auto pos = std::find_if(basis.begin(), basis.end(),
                            [&](std::size_t i) { return image[i].label == label; });
    if (pos == basis.end()) return std::nullopt;
    auto d = to_delta(c);
    if (!d) return std::nullopt;
    out[static_cast<std::size_t>(pos - basis.begin())] = std::move(*d);
  }
  return out;
}

C1Report Verifier::verify_c1(int n, int m) {
  C1Report r;
  r.n = n;
  r.m = m;
  const auto& image = c_image(n, m);
  r.cardinality = image.size();
  auto ambient = datum_.host.ambient_basis(n, m);
  r.dimension = ambient.size();
  std::vector<SparseVector> family;
  for (const auto& lm : image) family.push_back(lm.morphism.coords);
  r.rank = sparse_rank(family);
  if (r.cardinality != r.dimension) {
    r.witness = {{"reason", "cardinality differs from dimension"},
                 {"cardinality", r.cardinality},
                 {"dimension", r.dimension}};
    return r;
  }
  if (r.rank != r.cardinality) {
    r.witness = {{"reason", "C-image is linearly dependent"}, {"rank", r.rank}};
    return r;
  }
  r.span_matches = true;
  for (std::size_t i = 0; i < ambient.size(); ++i) {
    if (!expand(n, m, ambient[i]).in_span) {
      r.span_matches = false;
      r.witness = {{"reason", "ambient basis element outside the span"}, {"index", i}};
      return r;
    }
  }
  r.pass = true;
  return r;
}

C2Report Verifier::verify_c2(int n, int m) {
  C2Report r;
  r.n = n;
  r.m = m;
  for (const auto& lm : c_image(n, m)) {
    const CellLabel& l = lm.label;
    Morphism starred = datum_.host.star(lm.morphism);
    const Morphism& swapped = cell(m, n, {l.lambda, l.t, l.s});
    ++r.checked;
    if (starred.source != m || starred.target != n || starred.coords != swapped.coords) {
      r.pass = false;
      r.witness = {{"reason", "star(C(S,T)) != C(T,S)"}, {"cell", name(n, m, l)}};
      return r;
    }
  }
  return r;
}

C3Report Verifier::verify_c3(int p, int n, int m, bool keep_tables) {
  C3Report rep;
  rep.p = p;
  rep.n = n;
  rep.m = m;
  const auto& as = c_image(p, n);
  const Poset& order = datum_.poset;
  for (std::size_t ai = 0; ai < as.size(); ++ai) {
    const std::string a_name = name(p, n, as[ai].label);
    for (int lambda : order.elements()) {
      const auto& kn = cells(n, lambda);
      const auto& km = cells(m, lambda);
      const auto& kp = cells(p, lambda);
      if (kn.empty() || km.empty()) continue;
      DeltaMatrix table = zero_matrix(kp.size(), kn.size());
      for (std::size_t s = 0; s < kn.size(); ++s) {
        std::vector<DeltaPoly> first;
        for (std::size_t t = 0; t < km.size(); ++t) {
          Morphism prod = datum_.host.compose(as[ai].morphism, cell(n, m, {lambda, s, t}));
          ++rep.products;
          auto e = expand(p, m, prod);
          auto fail = [&](const std::string& condition, json extra) {
            rep.pass = false;
            rep.witness = {{"condition", condition},
                           {"a", a_name},
                           {"cell", label_json(lambda, kn[s], km[t])}};
            for (auto& [k, v] : extra.items()) rep.witness[k] = v;
          };
          if (!e.in_span) {
            fail("product not in the span of the C-image", json::object());
            return rep;
          }
          std::vector<DeltaPoly> column(kp.size());
          for (const auto& [label, coeff] : e.terms) {
            auto d = to_delta(coeff);
            if (!d) {
              fail("coefficient not in Z[delta]",
                   {{"term", name(p, m, label)}, {"coefficient", coeff.to_string()}});
              return rep;
            }
            if (label.lambda != lambda) {
              if (!order.less(label.lambda, lambda)) {
                fail("(i) term outside lower cells",
                     {{"term", name(p, m, label)}, {"coefficient", coeff.to_string()}});
                return rep;
              }
              continue;
            }
            if (label.t != t) {
              fail("(ii) second index changed",
                   {{"term", name(p, m, label)}, {"coefficient", coeff.to_string()}});
              return rep;
            }
            column[label.s] = std::move(*d);
          }
          if (t == 0) {
            first = column;
          } else if (column != first) {
            fail("(iii) coefficients depend on T", {{"T0", km[0]}});
            return rep;
          }
        }
        for (std::size_t i = 0; i < kp.size(); ++i) table[i][s] = first[i];
      }
      if (keep_tables) rep.r_tables.push_back({a_name, lambda, std::move(table)});
    }
  }
  return rep;
}

GramForm Verifier::bilinear_form(int n, int lambda) {
  GramForm g;
  g.n = n;
  g.lambda = lambda;
  g.basis = cells(n, lambda);
  const std::size_t k = g.basis.size();
  g.matrix = zero_matrix(k, k);
  std::vector<std::vector<bool>> seen(k, std::vector<bool>(k, false));
  const Poset& order = datum_.poset;
  for (int p : datum_.objects) {
    const auto& kp = cells(p, lambda);
    if (kp.empty()) continue;
    for (int m : datum_.objects) {
      const auto& km = cells(m, lambda);
      if (km.empty()) continue;
      for (std::size_t s = 0; s < kp.size(); ++s)
        for (std::size_t v = 0; v < km.size(); ++v)
          for (std::size_t t = 0; t < k; ++t)
            for (std::size_t u = 0; u < k; ++u) {
              auto e = expand(p, m, datum_.host.compose(cell(p, n, {lambda, s, t}), cell(n, m, {lambda, u, v})));
              DeltaPoly value;
              json bad;
              if (!e.in_span) bad = {{"reason", "product not in span"}};
              for (const auto& [label, coeff] : e.terms) {
                if (!bad.is_null()) break;
                if (label.lambda == lambda) {
                  if (label.s != s || label.t != v) {
                    bad = {{"reason", "lambda-term with other indices"}, {"term", name(p, m, label)}};
                  } else if (auto d = to_delta(coeff)) {
                    value = *d;
                  } else {
                    bad = {{"reason", "coefficient not in Z[delta]"}, {"term", name(p, m, label)}};
                  }
                } else if (!order.less(label.lambda, lambda)) {
                  bad = {{"reason", "term outside lower cells"}, {"term", name(p, m, label)}};
                }
              }
              if (!bad.is_null()) {
                g.independent = false;
                bad["p"] = p;
                bad["m"] = m;
                bad["S"] = kp[s];
                bad["T"] = g.basis[t];
                bad["U"] = g.basis[u];
                bad["V"] = km[v];
                g.witness = bad;
                return g;
              }
              if (!seen[t][u]) {
                seen[t][u] = true;
                g.matrix[t][u] = value;
              } else if (g.matrix[t][u] != value) {
                g.independent = false;
                g.witness = {{"reason", "value depends on S or V"},
                             {"T", g.basis[t]},
                             {"U", g.basis[u]},
                             {"p", p},
                             {"m", m},
                             {"S", kp[s]},
                             {"V", km[v]}};
                return g;
              }
            }
    }
  }
  for (std::size_t t = 0; t < k; ++t)
    for (std::size_t u = 0; u < t; ++u)
      if (g.matrix[t][u] != g.matrix[u][t]) {
        g.symmetric = false;
        if (g.witness.is_null()) g.witness = {{"reason", "not symmetric"}, {"T", g.basis[t]}, {"U", g.basis[u]}};
      }
  return g;
}

DeltaPoly gram_determinant(const GramForm& g) {
  LaurentMatrix m(g.matrix.size(), LaurentVector(g.matrix.size()));
  for (std::size_t i = 0; i < g.matrix.size(); ++i)
    for (std::size_t j = 0; j < g.matrix.size(); ++j) m[i][j] = delta_embed(g.matrix[i][j]);
  if (m.empty()) return DeltaPoly(1);
  return delta_retract(determinant(m));
}

CellModule Verifier::cell_module(int n, int lambda) {
  CellModule cm;
  cm.n = n;
  cm.lambda = lambda;
  cm.basis = cells(n, lambda);
  if (cm.basis.empty()) return cm;
  auto rep = verify_c3(n, n, n, true);
  if (!rep.pass) {
    cm.multiplicative = false;
    cm.witness = rep.witness;
    return cm;
  }
  for (auto& t : rep.r_tables)
    if (t.lambda == lambda) cm.action.push_back(std::move(t));
  const auto& image = c_image(n, n);
  for (std::size_t i = 0; i < image.size(); ++i)
    for (std::size_t j = 0; j < image.size(); ++j) {
      auto e = expand(n, n, datum_.host.compose(image[i].morphism, image[j].morphism));
      DeltaMatrix expected = zero_matrix(cm.basis.size(), cm.basis.size());
      bool ok = e.in_span;
      for (const auto& [label, coeff] : e.terms) {
        auto d = to_delta(coeff);
        if (!d) {
          ok = false;
          break;
        }
        auto k = static_cast<std::size_t>(
            std::find_if(image.begin(), image.end(), [&](const auto& x) { return x.label == label; }) -
            image.begin());
        for (std::size_t r = 0; r < expected.size(); ++r)
          for (std::size_t c = 0; c < expected.size(); ++c)
            expected[r][c] += *d * cm.action[k].r[r][c];
      }
      if (!ok || !same_matrix(expected, matrix_product(cm.action[i].r, cm.action[j].r))) {
        cm.multiplicative = false;
        cm.witness = {{"reason", "r is not multiplicative"},
                      {"a", cm.action[i].a},
                      {"b", cm.action[j].a}};
        return cm;
      }
    }
  return cm;
}

IdealSpan Verifier::ideal_span(const std::set<int>& ideal, int n, int m) {
  if (!datum_.poset.is_order_ideal(ideal)) throw PosetError("subset is not downward closed");
  IdealSpan out;
  out.ideal = ideal;
  out.n = n;
  out.m = m;
  std::set<std::size_t> member;
  const auto& image = c_image(n, m);
  for (std::size_t i = 0; i < image.size(); ++i)
    if (ideal.count(image[i].label.lambda)) {
      out.basis.push_back(name(n, m, image[i].label));
      member.insert(i);
    }
  // closure under composition on either side with every basis morphism
  auto check = [&](int a, int b, const Morphism& x) {
    auto e = expand(a, b, x);
    if (!e.in_span) return false;
    for (const auto& [label, coeff] : e.terms)
      if (!ideal.count(label.lambda)) return false;
    return true;
  };
  for (std::size_t i : member) {
    for (int p : datum_.objects) {
      for (const auto& g : c_image(p, n))
        if (!check(p, m, datum_.host.compose(g.morphism, image[i].morphism))) {
          out.two_sided = false;
          out.witness = {{"side", "left"}, {"x", name(n, m, image[i].label)}, {"g", name(p, n, g.label)}};
          return out;
        }
      for (const auto& g : c_image(m, p))
        if (!check(n, p, datum_.host.compose(image[i].morphism, g.morphism))) {
          out.two_sided = false;
          out.witness = {{"side", "right"}, {"x", name(n, m, image[i].label)}, {"g", name(m, p, g.label)}};
          return out;
        }
    }
  }
  return out;
}

RhoFunctor Verifier::rho_functor(int n, const std::set<int>& ideal) {
  if (!datum_.poset.is_order_ideal(ideal)) throw PosetError("subset is not downward closed");
  RhoFunctor rho;
  rho.n = n;
  rho.ideal = ideal;
  std::map<int, std::size_t> module_of;
  const auto& ends = c_image(n, n);
  for (int m : datum_.objects) {
    RhoModule mod;
    mod.m = m;
    const auto& image = c_image(n, m);
    for (std::size_t i = 0; i < image.size(); ++i)
      if (ideal.count(image[i].label.lambda)) {
        mod.basis.push_back(i);
        mod.basis_names.push_back(name(n, m, image[i].label));
      }
    const std::size_t k = mod.basis.size();
    for (const auto& a : ends) {
      DeltaMatrix mat = zero_matrix(k, k);
      for (std::size_t j = 0; j < k && rho.closed; ++j) {
        auto c = coordinates(n, m, datum_.host.compose(a.morphism, image[mod.basis[j]].morphism), mod.basis);
        if (!c) {
          rho.closed = false;
          rho.witness = {{"reason", "action leaves the ideal"},
                         {"a", name(n, n, a.label)},
                         {"x", mod.basis_names[j]}};
          break;
        }
        for (std::size_t i = 0; i < k; ++i) mat[i][j] = (*c)[i];
      }
      mod.action.push_back(std::move(mat));
    }
    module_of[m] = rho.modules.size();
    rho.modules.push_back(std::move(mod));
    if (!rho.closed) return rho;
  }
  // maps induced by right composition with each basis morphism g: m -> m'
  for (int m : datum_.objects)
    for (int mp : datum_.objects) {
      const RhoModule& src = rho.modules[module_of[m]];
      const RhoModule& dst = rho.modules[module_of[mp]];
      const auto& gs = c_image(m, mp);
      const auto& xs = c_image(n, m);
      for (std::size_t gi = 0; gi < gs.size(); ++gi) {
        DeltaMatrix mat = zero_matrix(dst.basis.size(), src.basis.size());
        for (std::size_t j = 0; j < src.basis.size(); ++j) {
          auto c = coordinates(n, mp, datum_.host.compose(xs[src.basis[j]].morphism, gs[gi].morphism),
                               dst.basis);
          if (!c) {
            rho.closed = false;
            rho.witness = {{"reason", "map leaves the ideal"},
                           {"g", name(m, mp, gs[gi].label)},
                           {"x", src.basis_names[j]}};
            return rho;
          }
          for (std::size_t i = 0; i < dst.basis.size(); ++i) mat[i][j] = (*c)[i];
        }
        // End(n)-equivariance: g after a equals a after g
        for (std::size_t ai = 0; ai < ends.size() && rho.equivariant; ++ai)
          if (!same_matrix(matrix_product(mat, src.action[ai]), matrix_product(dst.action[ai], mat))) {
            rho.equivariant = false;
            rho.witness = {{"reason", "map not equivariant"},
                           {"g", name(m, mp, gs[gi].label)},
                           {"a", name(n, n, ends[ai].label)}};
          }
        rho.maps.emplace(std::make_tuple(m, mp, gi), std::move(mat));
      }
    }
  // functoriality: rho(g then h) = rho(h) rho(g), with g then h expanded in the C-image
  for (int m : datum_.objects)
    for (int mp : datum_.objects)
      for (int mpp : datum_.objects) {
        const auto& gs = c_image(m, mp);
        const auto& hs = c_image(mp, mpp);
        for (std::size_t gi = 0; gi < gs.size(); ++gi)
          for (std::size_t hi = 0; hi < hs.size(); ++hi) {
            ++rho.checked_pairs;
            const DeltaMatrix lhs = matrix_product(rho.maps.at({mp, mpp, hi}), rho.maps.at({m, mp, gi}));
            auto e = expand(m, mpp, datum_.host.compose(gs[gi].morphism, hs[hi].morphism));
            DeltaMatrix rhs = zero_matrix(rho.modules[module_of[mpp]].basis.size(),
                                          rho.modules[module_of[m]].basis.size());
            bool ok = e.in_span;
            const auto& ks = c_image(m, mpp);
            for (const auto& [label, coeff] : e.terms) {
              auto d = to_delta(coeff);
              if (!d) {
                ok = false;
                break;
              }
              auto k = static_cast<std::size_t>(
                  std::find_if(ks.begin(), ks.end(), [&](const auto& x) { return x.label == label; }) -
                  ks.begin());
              const DeltaMatrix& mk = rho.maps.at({m, mpp, k});
              for (std::size_t r = 0; r < rhs.size(); ++r)
                for (std::size_t c = 0; c < rhs[r].size(); ++c) rhs[r][c] += *d * mk[r][c];
            }
            if (!ok || !same_matrix(lhs, rhs)) {
              rho.functorial = false;
              rho.witness = {{"reason", "not functorial"},
                             {"g", name(m, mp, gs[gi].label)},
                             {"h", name(mp, mpp, hs[hi].label)}};
              return rho;
            }
          }
      }
  return rho;
}

NaturalityReport Verifier::rho_naturality(int n, const std::set<int>& ideal, const std::set<int>& larger) {
  NaturalityReport rep;
  if (!std::includes(larger.begin(), larger.end(), ideal.begin(), ideal.end()))
    throw PosetError("first ideal is not contained in the second");
  RhoFunctor small = rho_functor(n, ideal);
  RhoFunctor big = rho_functor(n, larger);
  if (!small.closed || !big.closed) {
    rep.pass = false;
    rep.witness = small.closed ? big.witness : small.witness;
    return rep;
  }
  auto inclusion = [](const RhoModule& from, const RhoModule& to) {
    DeltaMatrix iota = zero_matrix(to.basis.size(), from.basis.size());
    for (std::size_t j = 0; j < from.basis.size(); ++j) {
      auto it = std::find(to.basis.begin(), to.basis.end(), from.basis[j]);
      iota[static_cast<std::size_t>(it - to.basis.begin())][j] = DeltaPoly(1);
    }
    return iota;
  };
  std::map<int, DeltaMatrix> iota;
  for (std::size_t i = 0; i < small.modules.size(); ++i)
    iota[small.modules[i].m] = inclusion(small.modules[i], big.modules[i]);
  for (const auto& [key, g_small] : small.maps) {
    auto [m, mp, gi] = key;
    ++rep.squares;
    const DeltaMatrix& g_big = big.maps.at(key);
    DeltaMatrix lhs = matrix_product(iota[mp], g_small);
    DeltaMatrix rhs = matrix_product(g_big, iota[m]);
    if (!same_matrix(lhs, rhs)) {
      rep.pass = false;
      rep.witness = {{"reason", "naturality square fails"}, {"g", name(m, mp, c_image(m, mp)[gi].label)}};
      return rep;
    }
  }
  return rep;
}

InferredOrder Verifier::infer_cell_order() {
  InferredOrder out;
  std::set<std::pair<int, int>> edges;
  for (int p : datum_.objects)
    for (int n : datum_.objects)
      for (int m : datum_.objects) {
        const auto& as = c_image(p, n);
        const auto& cs = c_image(n, m);
        for (const auto& a : as)
          for (const auto& c : cs) {
            auto e = expand(p, m, datum_.host.compose(a.morphism, c.morphism));
            if (!e.in_span) throw RingError("product outside the C-image span");
            for (const auto& [label, coeff] : e.terms)
              if (label.lambda != c.label.lambda) edges.insert({c.label.lambda, label.lambda});
          }
      }
  out.leakage.assign(edges.begin(), edges.end());
  // cycle search on the leakage digraph
  std::map<int, std::vector<int>> adj;
  for (auto [from, to] : edges) adj[from].push_back(to);
  std::map<int, int> state;
  std::vector<int> stack;
  std::function<bool(int)> dfs = [&](int x) {
    state[x] = 1;
    stack.push_back(x);
    for (int y : adj[x]) {
      if (state[y] == 1) {
        auto it = std::find(stack.begin(), stack.end(), y);
        out.cycle.assign(it, stack.end());
        out.cycle.push_back(y);
        return true;
      }
      if (state[y] == 0 && dfs(y)) return true;
    }
    state[x] = 2;
    stack.pop_back();
    return false;
  };
  for (int x : datum_.poset.elements())
    if (state[x] == 0 && dfs(x)) {
      out.acyclic = false;
      return out;
    }
  std::vector<std::pair<int, int>> less;
  for (auto [from, to] : edges) less.emplace_back(to, from);
  out.order = Poset(datum_.poset.elements(), less);
  out.covers = out.order->covers();
  return out;
}

FunctorReport verify_cellular_functor(const std::function<int(int)>& on_objects,
                                      const std::function<Morphism(const Morphism&)>& on_morphisms,
                                      const std::function<int(int)>& on_labels, Verifier& source,
                                      Verifier& target) {
  FunctorReport rep;
  const Poset& from = source.datum().poset;
  const Poset& to = target.datum().poset;
  for (int a : from.elements())
    for (int b : from.elements())
      if (from.leq(a, b) && !to.leq(on_labels(a), on_labels(b))) {
        rep.order_preserving = false;
        rep.pass = false;
        rep.witness = {{"reason", "label map not order preserving"}, {"a", a}, {"b", b}};
        return rep;
      }
  for (int lambda : from.elements()) {
    std::set<int> allowed = to.down_set(on_labels(lambda));
    for (int n : source.datum().objects)
      for (int m : source.datum().objects)
        for (const auto& c : source.c_image(n, m)) {
          if (c.label.lambda != lambda) continue;
          ++rep.checked;
          Morphism image = on_morphisms(c.morphism);
          auto e = target.expand(on_objects(n), on_objects(m), image);
          bool ok = e.in_span;
          for (const auto& [label, coeff] : e.terms)
            if (!allowed.count(label.lambda)) ok = false;
          if (!ok) {
            rep.pass = false;
            rep.witness = {{"reason", "generating ideal not mapped into the target ideal"},
                           {"cell", source.name(n, m, c.label)},
                           {"lambda", lambda}};
            return rep;
          }
        }
  }
  return rep;
}

json to_json(const DeltaMatrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.to_string());
    out.push_back(r);
  }
  return out;
}

json to_json(const C1Report& r) {
  return {{"axiom", "C-1"},
          {"n", r.n},
          {"m", r.m},
          {"status", r.pass ? "pass" : "fail"},
          {"cardinality", r.cardinality},
          {"dimension", r.dimension},
          {"rank", r.rank},
          {"witness", r.witness}};
}

json to_json(const C2Report& r) {
  return {{"axiom", "C-2"},
          {"n", r.n},
          {"m", r.m},
          {"status", r.pass ? "pass" : "fail"},
          {"checked", r.checked},
          {"witness", r.witness}};
}

json to_json(const C3Report& r, bool with_tables) {
  json out = {{"axiom", "C-3"},  {"p", r.p}, {"n", r.n}, {"m", r.m}, {"status", r.pass ? "pass" : "fail"},
              {"products", r.products}, {"witness", r.witness}};
  if (with_tables) {
    json tables = json::array();
    for (const auto& t : r.r_tables) tables.push_back({{"a", t.a}, {"lambda", t.lambda}, {"r", to_json(t.r)}});
    out["r_tables"] = tables;
  }
  return out;
}

json to_json(const GramForm& g) {
  return {{"n", g.n},
          {"lambda", g.lambda},
          {"basis", g.basis},
          {"matrix", to_json(g.matrix)},
          {"independent", g.independent},
          {"symmetric", g.symmetric},
          {"determinant", g.independent ? json(gram_determinant(g).to_string()) : json()},
          {"witness", g.witness}};
}

json to_json(const CellModule& c) {
  json actions = json::array();
  for (const auto& t : c.action) actions.push_back({{"a", t.a}, {"r", to_json(t.r)}});
  return {{"n", c.n},
          {"lambda", c.lambda},
          {"basis", c.basis},
          {"action", actions},
          {"multiplicative", c.multiplicative},
          {"witness", c.witness}};
}

json to_json(const InferredOrder& o) {
  json out = {{"acyclic", o.acyclic}, {"leakage", o.leakage}, {"covers", o.covers}, {"cycle", o.cycle}};
  if (o.order) out["order"] = o.order->describe();
  return out;
}

}  // namespace cellcat::cellular
