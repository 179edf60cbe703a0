#include "cellcat/tl_datum.hpp"

namespace cellcat::cellular {

TLCoordinates::Entry& TLCoordinates::entry(int n, int m) {
  auto key = std::make_pair(n, m);
  auto it = entries_.find(key);
  if (it != entries_.end()) return it->second;
  Entry e;
  e.list = tl::enumerate_diagrams(n, m);
  for (std::size_t i = 0; i < e.list.size(); ++i) e.index.emplace(e.list[i], i);
  return entries_.emplace(key, std::move(e)).first->second;
}

const std::vector<tl::Diagram>& TLCoordinates::diagrams(int n, int m) { return entry(n, m).list; }

std::uint64_t TLCoordinates::index(const tl::Diagram& d) { return entry(d.n(), d.m()).index.at(d); }

Morphism TLCoordinates::to_cell(const tl::Morphism& f) {
  Morphism out{f.n(), f.m(), {}};
  for (const auto& [d, c] : f.terms()) out.coords.emplace(index(d), delta_embed(c));
  return out;
}

tl::Morphism TLCoordinates::to_tl(const Morphism& f) {
  tl::Morphism out(f.source, f.target);
  const auto& list = diagrams(f.source, f.target);
  for (const auto& [k, c] : f.coords) out.add_term(list.at(k), delta_retract(c));
  return out;
}

std::string diagram_name(const tl::Diagram& d) {
  if (d.pairs().empty()) return "()";
  std::string out;
  for (const auto& [a, b] : d.pairs()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(a) + "-" + std::to_string(b);
  }
  return out;
}

CellDatum tl_cell_datum(int max_n, std::shared_ptr<TLCoordinates> coords) {
  if (max_n < 0) throw std::invalid_argument("max_n must be non-negative");
  if (!coords) coords = std::make_shared<TLCoordinates>();
  CellDatum d;
  d.name = "TL(max_n=" + std::to_string(max_n) + ")";
  std::vector<int> labels;
  for (int i = 0; i <= max_n; ++i) labels.push_back(i);
  d.objects = labels;
  d.poset = Poset::chain(labels);
  d.cells = [](int n, int t) {
    std::vector<std::string> names;
    for (const auto& h : tl::half_diagrams(n, t)) names.push_back(diagram_name(h));
    return names;
  };
  d.c_map = [coords](int t, int n, std::size_t s, int m, std::size_t u) {
    const auto left = tl::half_diagrams(n, t).at(s);
    const auto right = tl::half_diagrams(m, t).at(u);
    return coords->to_cell(tl::compose(left, tl::star(tl::Morphism(right))));
  };
  d.host.compose = [coords](const Morphism& f, const Morphism& g) {
    return coords->to_cell(tl::compose(coords->to_tl(f), coords->to_tl(g)));
  };
  d.host.star = [coords](const Morphism& f) { return coords->to_cell(tl::star(coords->to_tl(f))); };
  d.host.ambient_basis = [coords](int n, int m) {
    std::vector<Morphism> out;
    for (const auto& diag : coords->diagrams(n, m)) out.push_back(coords->to_cell(tl::Morphism(diag)));
    return out;
  };
  return d;
}

}  // namespace cellcat::cellular
