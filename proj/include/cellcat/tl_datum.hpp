#pragma once

#include "cellcat/cell_datum.hpp"
#include "cellcat/tl_diagram.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace cellcat::cellular {

/// Diagram <-> coordinate translation; the coordinate of a diagram is its index
/// in enumerate_diagrams(n, m).
class TLCoordinates {
 public:
  const std::vector<tl::Diagram>& diagrams(int n, int m);
  std::uint64_t index(const tl::Diagram& d);
  Morphism to_cell(const tl::Morphism& f);
  tl::Morphism to_tl(const Morphism& f);

 private:
  struct Entry {
    std::vector<tl::Diagram> list;
    std::map<tl::Diagram, std::uint64_t> index;
  };
  Entry& entry(int n, int m);
  std::map<std::pair<int, int>, Entry> entries_;
};

/// Compact diagram name, e.g. "1-4 2-3"; "()" for the empty diagram.
std::string diagram_name(const tl::Diagram& d);

/// The through-strand datum on objects 0..max_n: Lambda = {0 < 1 < ... < max_n},
/// K(n, t) = half diagrams n -> t, C^t(S, T) = compose(S, star(T)).
CellDatum tl_cell_datum(int max_n, std::shared_ptr<TLCoordinates> coords = nullptr);

}  // namespace cellcat::cellular
