#include "cellcat/poset.hpp"

#include <algorithm>
#include <sstream>

namespace cellcat::cellular {

Poset::Poset(std::vector<int> elements, const std::vector<std::pair<int, int>>& less_than)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
    throw PosetError("duplicate poset element");
  const std::size_t n = elements_.size();
  leq_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq_[i][i] = true;
  for (const auto& [a, b] : less_than) leq_[index(a)][index(b)] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq_[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq_[k][j]) leq_[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq_[i][j] && leq_[j][i])
        throw PosetError("relation is not antisymmetric: " + std::to_string(elements_[i]) + " and " +
                         std::to_string(elements_[j]) + " lie on a cycle");
}

Poset Poset::chain(std::vector<int> ascending) {
  std::vector<std::pair<int, int>> rel;
  for (std::size_t i = 1; i < ascending.size(); ++i) rel.emplace_back(ascending[i - 1], ascending[i]);
  return Poset(std::move(ascending), rel);
}

Poset Poset::discrete(std::vector<int> elements) { return Poset(std::move(elements), {}); }

Poset Poset::reversed() const {
  std::vector<std::pair<int, int>> rel;
  for (const auto& [a, b] : covers()) rel.emplace_back(b, a);
  return Poset(elements_, rel);
}

std::size_t Poset::index(int x) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
  if (it == elements_.end() || *it != x) throw PosetError("not a poset element: " + std::to_string(x));
  return static_cast<std::size_t>(it - elements_.begin());
}

bool Poset::contains(int x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

bool Poset::leq(int a, int b) const { return leq_[index(a)][index(b)]; }

bool Poset::is_order_ideal(const std::set<int>& subset) const {
  for (int x : subset) {
    if (!contains(x)) return false;
    for (int y : elements_)
      if (leq(y, x) && !subset.count(y)) return false;
  }
  return true;
}

std::set<int> Poset::down_set(int lambda) const {
  std::set<int> out;
  for (int y : elements_)
    if (leq(y, lambda)) out.insert(y);
  return out;
}

std::set<int> Poset::down_closure(const std::set<int>& subset) const {
  std::set<int> out;
  for (int x : subset) {
    auto d = down_set(x);
    out.insert(d.begin(), d.end());
  }
  return out;
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int a : elements_)
    for (int b : elements_) {
      if (!less(a, b)) continue;
      bool between = false;
      for (int c : elements_)
        if (less(a, c) && less(c, b)) {
          between = true;
          break;
        }
      if (!between) out.emplace_back(a, b);
    }
  return out;
}

std::string Poset::describe() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, b] : covers()) {
    if (!first) os << ", ";
    first = false;
    os << a << "<" << b;
  }
  return os.str();
}

}  // namespace cellcat::cellular
