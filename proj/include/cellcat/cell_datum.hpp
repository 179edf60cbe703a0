#pragma once

#include "cellcat/delta_poly.hpp"
#include "cellcat/linear_algebra.hpp"
#include "cellcat/poset.hpp"

#include <functional>
#include <string>
#include <vector>

namespace cellcat::cellular {

/// A morphism source -> target of a host category, written in the host's own
/// coordinate system (diagram indices, matrix entries, ...).
struct Morphism {
  int source = 0;
  int target = 0;
  SparseVector coords;

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

/// The linear category the cell datum lives in.
struct HostCategory {
  /// "f first, then g": f: n -> m, g: m -> p gives n -> p.
  std::function<Morphism(const Morphism& f, const Morphism& g)> compose;
  /// Anti-involution n -> m  to  m -> n.
  std::function<Morphism(const Morphism&)> star;
  /// An independent basis of Hom(n, m), used only as the C-1 reference.
  std::function<std::vector<Morphism>(int n, int m)> ambient_basis;
};

/// (Lambda, K, C, *) over a finite list of objects.
struct CellDatum {
  std::string name;
  std::vector<int> objects;
  Poset poset;
  /// Names of the elements of K(n, lambda), in a fixed order; may be empty.
  std::function<std::vector<std::string>(int n, int lambda)> cells;
  /// C^lambda(S, T): n -> m for S = K(n, lambda)[s], T = K(m, lambda)[t].
  std::function<Morphism(int lambda, int n, std::size_t s, int m, std::size_t t)> c_map;
  HostCategory host;
};

/// Copy of `datum` with a different order on Lambda.
CellDatum with_order(CellDatum datum, Poset order);
/// Copy of `datum` restricted to the single object n (the algebra End(n)).
CellDatum restrict_to_object(CellDatum datum, int n);

}  // namespace cellcat::cellular
