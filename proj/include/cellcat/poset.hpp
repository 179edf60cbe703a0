#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cellcat::cellular {

class PosetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite partial order on integer labels; the reflexive-transitive closure of
/// the generating relations is stored. Construction fails on cycles.
class Poset {
 public:
  Poset() = default;
  /// `less_than` holds generating pairs (a, b) meaning a < b.
  Poset(std::vector<int> elements, const std::vector<std::pair<int, int>>& less_than);

  /// 0 < 1 < ... in the given order.
  static Poset chain(std::vector<int> ascending);
  static Poset discrete(std::vector<int> elements);
  Poset reversed() const;

  const std::vector<int>& elements() const { return elements_; }
  bool contains(int x) const;
  bool leq(int a, int b) const;
  bool less(int a, int b) const { return a != b && leq(a, b); }

  bool is_order_ideal(const std::set<int>& subset) const;
  /// {mu : mu <= lambda}
  std::set<int> down_set(int lambda) const;
  std::set<int> down_closure(const std::set<int>& subset) const;
  /// Covering pairs (a, b), a < b with nothing strictly between.
  std::vector<std::pair<int, int>> covers() const;

  /// e.g. "0<1, 1<2"
  std::string describe() const;

 private:
  std::size_t index(int x) const;
  std::vector<int> elements_;
  std::vector<std::vector<bool>> leq_;
};

}  // namespace cellcat::cellular
