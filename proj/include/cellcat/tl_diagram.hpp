#pragma once

#include "cellcat/delta_poly.hpp"

#include <compare>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cellcat::tl {

class DiagramError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A planar perfect matching between n bottom and m top boundary points.
///
/// Labels: bottom points are 1..n left to right; top points are n+1..n+m
/// right to left, so that 1..n+m runs once around the boundary. Pairs are
/// stored as (a, b) with a < b, sorted by a.
class Diagram {
 public:
  using Pair = std::pair<int, int>;

  Diagram() = default;
  /// Validates perfect matching and planarity; throws DiagramError otherwise.
  Diagram(int n, int m, std::vector<Pair> pairs);

  static Diagram identity(int n);

  int n() const { return n_; }
  int m() const { return m_; }
  const std::vector<Pair>& pairs() const { return pairs_; }

  /// Label of the bottom point at position pos (0-based from the left).
  int bottom_label(int pos) const { return pos + 1; }
  /// Label of the top point at position pos (0-based from the left).
  int top_label(int pos) const { return n_ + m_ - pos; }
  /// Partner label of each label (index 0 unused).
  std::vector<int> partners() const;

  friend auto operator<=>(const Diagram&, const Diagram&) = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<Pair> pairs_;
};

/// Finite Z[delta]-combination of diagrams sharing the same (n, m).
class Morphism {
 public:
  Morphism(int n, int m) : n_(n), m_(m) {}
  Morphism(const Diagram& d, const DeltaPoly& coeff = 1);  // NOLINT

  int n() const { return n_; }
  int m() const { return m_; }
  const std::map<Diagram, DeltaPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  DeltaPoly coeff(const Diagram& d) const;

  void add_term(const Diagram& d, const DeltaPoly& coeff);
  Morphism& operator+=(const Morphism& other);
  friend Morphism operator+(Morphism a, const Morphism& b) { return a += b; }
  friend Morphism operator*(const DeltaPoly& c, const Morphism& f);

  friend bool operator==(const Morphism&, const Morphism&) = default;

 private:
  int n_;
  int m_;
  std::map<Diagram, DeltaPoly> terms_;
};

/// Catalan((n+m)/2) planar matchings in a fixed order; empty when n+m is odd.
std::vector<Diagram> enumerate_diagrams(int n, int m);

/// Diagram stacking result: the glued diagram and the number of closed loops.
struct Stacked {
  Diagram diagram;
  int loops = 0;
};
/// Glue f: n -> m below g: m -> p ("f first, then g").
Stacked stack(const Diagram& f, const Diagram& g);

/// Bilinear composition "f first, then g"; each closed loop contributes delta.
Morphism compose(const Morphism& f, const Morphism& g);
/// Horizontal juxtaposition with f on the left.
Morphism tensor(const Morphism& f, const Morphism& g);
Diagram tensor(const Diagram& f, const Diagram& g);
/// Top-to-bottom reflection.
Morphism star(const Morphism& f);
Diagram star(const Diagram& d);

/// e_i in End(n): bottom i, i+1 capped, top i, i+1 cupped (1-based i).
Morphism generator_e(int n, int i);
Diagram generator_e_diagram(int n, int i);

int through_strands(const Diagram& d);
bool is_half_diagram(const Diagram& d);

/// d = compose(first, star(second)), with both halves having t top points.
struct Factorization {
  Diagram first;   // n -> t
  Diagram second;  // m -> t
};
Factorization factor_through(const Diagram& d);

/// Half diagrams n -> t, i.e. the TL cell index set K(n, t).
std::vector<Diagram> half_diagrams(int n, int t);

}  // namespace cellcat::tl
