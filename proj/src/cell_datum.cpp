#include "cellcat/cell_datum.hpp"

namespace cellcat::cellular {

CellDatum with_order(CellDatum datum, Poset order) {
  datum.poset = std::move(order);
  return datum;
}

CellDatum restrict_to_object(CellDatum datum, int n) {
  datum.objects = {n};
  datum.name += "|End(" + std::to_string(n) + ")";
  return datum;
}

}  // namespace cellcat::cellular
