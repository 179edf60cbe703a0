#include "cellcat/tl_diagram.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace cellcat::tl {

namespace {

// A boundary point addressed by side and 0-based position from the left.
struct Endpoint {
  bool top;
  int pos;
};

Endpoint endpoint_of(int n, int m, int label) {
  if (label <= n) return {false, label - 1};
  return {true, n + m - label};
}

int label_of(int n, int m, Endpoint e) { return e.top ? n + m - e.pos : e.pos + 1; }

std::vector<Diagram::Pair> normalized(std::vector<Diagram::Pair> pairs) {
  for (auto& p : pairs)
    if (p.first > p.second) std::swap(p.first, p.second);
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

Diagram from_endpoints(int n, int m, const std::vector<std::pair<Endpoint, Endpoint>>& links) {
  std::vector<Diagram::Pair> pairs;
  pairs.reserve(links.size());
  for (const auto& [a, b] : links) pairs.emplace_back(label_of(n, m, a), label_of(n, m, b));
  return Diagram(n, m, std::move(pairs));
}

}  // namespace

Diagram::Diagram(int n, int m, std::vector<Pair> pairs) : n_(n), m_(m), pairs_(normalized(std::move(pairs))) {
  if (n < 0 || m < 0) throw DiagramError("negative point count");
  const int total = n + m;
  if (total % 2 != 0) throw DiagramError("odd number of boundary points");
  if (static_cast<int>(pairs_.size()) * 2 != total) throw DiagramError("wrong number of pairs");
  std::vector<int> seen(static_cast<std::size_t>(total) + 1, 0);
  for (const auto& [a, b] : pairs_) {
    if (a < 1 || b > total || a == b) throw DiagramError("pair label out of range");
    if (seen[a]++ || seen[b]++) throw DiagramError("point used twice");
  }
  // Non-crossing in the cyclic order: (a,b) and (c,d) interleave iff a<c<b<d.
  for (std::size_t i = 0; i < pairs_.size(); ++i)
    for (std::size_t j = i + 1; j < pairs_.size(); ++j) {
      const auto [a, b] = pairs_[i];
      const auto [c, d] = pairs_[j];
      if (a < c && c < b && b < d) throw DiagramError("crossing pairs");
    }
}

Diagram Diagram::identity(int n) {
  std::vector<Pair> pairs;
  for (int i = 1; i <= n; ++i) pairs.emplace_back(i, 2 * n + 1 - i);
  return Diagram(n, n, std::move(pairs));
}

std::vector<int> Diagram::partners() const {
  std::vector<int> p(static_cast<std::size_t>(n_ + m_) + 1, 0);
  for (const auto& [a, b] : pairs_) {
    p[a] = b;
    p[b] = a;
  }
  return p;
}

Morphism::Morphism(const Diagram& d, const DeltaPoly& coeff) : n_(d.n()), m_(d.m()) { add_term(d, coeff); }

DeltaPoly Morphism::coeff(const Diagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? DeltaPoly{} : it->second;
}

void Morphism::add_term(const Diagram& d, const DeltaPoly& coeff) {
  if (d.n() != n_ || d.m() != m_) throw DiagramError("diagram does not match morphism objects");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(d, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

Morphism& Morphism::operator+=(const Morphism& other) {
  if (other.n_ != n_ || other.m_ != m_) throw DiagramError("adding morphisms with different objects");
  for (const auto& [d, c] : other.terms_) add_term(d, c);
  return *this;
}

Morphism operator*(const DeltaPoly& c, const Morphism& f) {
  Morphism out(f.n(), f.m());
  for (const auto& [d, x] : f.terms()) out.add_term(d, c * x);
  return out;
}

std::vector<Diagram> enumerate_diagrams(int n, int m) {
  std::vector<Diagram> out;
  if (n < 0 || m < 0 || (n + m) % 2 != 0) return out;
  std::vector<Diagram::Pair> current;
  // match labels in [lo, hi] (inclusive), appending the result of `k` to out
  std::function<void(int, int, const std::function<void()>&)> match = [&](int lo, int hi,
                                                                           const std::function<void()>& k) {
    if (lo > hi) {
      k();
      return;
    }
    for (int partner = lo + 1; partner <= hi; partner += 2) {
      current.emplace_back(lo, partner);
      match(lo + 1, partner - 1, [&, partner] { match(partner + 1, hi, k); });
      current.pop_back();
    }
  };
  match(1, n + m, [&] { out.emplace_back(n, m, current); });
  return out;
}

Stacked stack(const Diagram& f, const Diagram& g) {
  if (f.m() != g.n()) throw DiagramError("object mismatch in composition");
  const int n = f.n();
  const int mid = f.m();
  const int p = g.m();
  // Nodes: f-bottom 0..n-1, middle n..n+mid-1, g-top n+mid..n+mid+p-1.
  const int total = n + mid + p;
  // Every node has at most one f-edge and one g-edge; middle nodes have both.
  std::vector<int> via_f(static_cast<std::size_t>(total), -1);
  std::vector<int> via_g(static_cast<std::size_t>(total), -1);
  auto f_node = [&](int label) {
    Endpoint e = endpoint_of(n, mid, label);
    return e.top ? n + e.pos : e.pos;
  };
  auto g_node = [&](int label) {
    Endpoint e = endpoint_of(mid, p, label);
    return e.top ? n + mid + e.pos : n + e.pos;
  };
  for (const auto& [a, b] : f.pairs()) {
    via_f[f_node(a)] = f_node(b);
    via_f[f_node(b)] = f_node(a);
  }
  for (const auto& [a, b] : g.pairs()) {
    via_g[g_node(a)] = g_node(b);
    via_g[g_node(b)] = g_node(a);
  }
  auto is_boundary = [&](int node) { return node < n || node >= n + mid; };
  auto to_endpoint = [&](int node) { return node < n ? Endpoint{false, node} : Endpoint{true, node - n - mid}; };
  std::vector<bool> seen(static_cast<std::size_t>(total), false);
  std::vector<std::pair<Endpoint, Endpoint>> links;
  for (int start = 0; start < total; ++start) {
    if (!is_boundary(start) || seen[start]) continue;
    seen[start] = true;
    bool use_f = start < n;
    int cur = use_f ? via_f[start] : via_g[start];
    while (!is_boundary(cur)) {
      seen[cur] = true;
      use_f = !use_f;
      cur = use_f ? via_f[cur] : via_g[cur];
    }
    seen[cur] = true;
    links.emplace_back(to_endpoint(start), to_endpoint(cur));
  }
  int loops = 0;
  for (int node = n; node < n + mid; ++node) {
    if (seen[node]) continue;
    ++loops;
    int cur = node;
    bool use_f = true;
    while (!seen[cur]) {
      seen[cur] = true;
      cur = use_f ? via_f[cur] : via_g[cur];
      use_f = !use_f;
    }
  }
  Stacked out;
  out.diagram = from_endpoints(n, p, links);
  out.loops = loops;
  return out;
}

Morphism compose(const Morphism& f, const Morphism& g) {
  if (f.m() != g.n()) throw DiagramError("object mismatch in composition");
  Morphism out(f.n(), g.m());
  for (const auto& [df, cf] : f.terms())
    for (const auto& [dg, cg] : g.terms()) {
      Stacked s = stack(df, dg);
      DeltaPoly c = cf * cg;
      for (int i = 0; i < s.loops; ++i) c *= DeltaPoly::delta();
      out.add_term(s.diagram, c);
    }
  return out;
}

Diagram tensor(const Diagram& f, const Diagram& g) {
  const int n = f.n() + g.n();
  const int m = f.m() + g.m();
  std::vector<std::pair<Endpoint, Endpoint>> links;
  auto shift = [](Endpoint e, int bottom, int top) {
    e.pos += e.top ? top : bottom;
    return e;
  };
  for (const auto& [a, b] : f.pairs())
    links.emplace_back(endpoint_of(f.n(), f.m(), a), endpoint_of(f.n(), f.m(), b));
  for (const auto& [a, b] : g.pairs())
    links.emplace_back(shift(endpoint_of(g.n(), g.m(), a), f.n(), f.m()),
                       shift(endpoint_of(g.n(), g.m(), b), f.n(), f.m()));
  return from_endpoints(n, m, links);
}

Morphism tensor(const Morphism& f, const Morphism& g) {
  Morphism out(f.n() + g.n(), f.m() + g.m());
  for (const auto& [df, cf] : f.terms())
    for (const auto& [dg, cg] : g.terms()) out.add_term(tensor(df, dg), cf * cg);
  return out;
}

Diagram star(const Diagram& d) {
  std::vector<std::pair<Endpoint, Endpoint>> links;
  for (const auto& [a, b] : d.pairs()) {
    Endpoint x = endpoint_of(d.n(), d.m(), a);
    Endpoint y = endpoint_of(d.n(), d.m(), b);
    x.top = !x.top;
    y.top = !y.top;
    links.emplace_back(x, y);
  }
  return from_endpoints(d.m(), d.n(), links);
}

Morphism star(const Morphism& f) {
  Morphism out(f.m(), f.n());
  for (const auto& [d, c] : f.terms()) out.add_term(star(d), c);
  return out;
}

Diagram generator_e_diagram(int n, int i) {
  if (i < 1 || i > n - 1) throw DiagramError("generator index out of range: e_" + std::to_string(i) + " in End(" +
                                             std::to_string(n) + ")");
  std::vector<std::pair<Endpoint, Endpoint>> links;
  for (int pos = 0; pos < n; ++pos) {
    if (pos == i - 1 || pos == i) continue;
    links.emplace_back(Endpoint{false, pos}, Endpoint{true, pos});
  }
  links.emplace_back(Endpoint{false, i - 1}, Endpoint{false, i});
  links.emplace_back(Endpoint{true, i - 1}, Endpoint{true, i});
  return from_endpoints(n, n, links);
}

Morphism generator_e(int n, int i) { return Morphism(generator_e_diagram(n, i)); }

int through_strands(const Diagram& d) {
  int t = 0;
  for (const auto& [a, b] : d.pairs())
    if (a <= d.n() && b > d.n()) ++t;
  return t;
}

bool is_half_diagram(const Diagram& d) { return through_strands(d) == d.m(); }

Factorization factor_through(const Diagram& d) {
  const int n = d.n();
  const int m = d.m();
  const int t = through_strands(d);
  std::vector<std::pair<Endpoint, Endpoint>> first_links;
  std::vector<std::pair<Endpoint, Endpoint>> second_links;
  std::vector<std::pair<int, int>> through;  // (bottom pos, top pos)
  for (const auto& [a, b] : d.pairs()) {
    Endpoint x = endpoint_of(n, m, a);
    Endpoint y = endpoint_of(n, m, b);
    if (!x.top && !y.top) {
      first_links.emplace_back(x, y);
    } else if (x.top && y.top) {
      // a top cap of d becomes a bottom cap of the second half
      second_links.emplace_back(Endpoint{false, x.pos}, Endpoint{false, y.pos});
    } else {
      through.emplace_back(x.top ? y.pos : x.pos, x.top ? x.pos : y.pos);
    }
  }
  std::sort(through.begin(), through.end());
  for (int k = 0; k < t; ++k) {
    first_links.emplace_back(Endpoint{false, through[k].first}, Endpoint{true, k});
    second_links.emplace_back(Endpoint{false, through[k].second}, Endpoint{true, k});
  }
  return {from_endpoints(n, t, first_links), from_endpoints(m, t, second_links)};
}

std::vector<Diagram> half_diagrams(int n, int t) {
  std::vector<Diagram> out;
  for (auto& d : enumerate_diagrams(n, t))
    if (is_half_diagram(d)) out.push_back(std::move(d));
  return out;
}

}  // namespace cellcat::tl
