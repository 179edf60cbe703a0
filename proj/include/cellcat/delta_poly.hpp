#pragma once

#include "cellcat/laurent_poly.hpp"

#include <string>
#include <vector>

namespace cellcat {

/// Element of Z[delta], delta = v + v^-1. Index k holds the coefficient of
/// delta^k; the highest stored coefficient is nonzero.
class DeltaPoly {
 public:
  DeltaPoly() = default;
  DeltaPoly(long constant);  // NOLINT
  explicit DeltaPoly(std::vector<Integer> coeffs);

  static DeltaPoly delta() { return DeltaPoly(std::vector<Integer>{0, 1}); }

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Integer evaluate(const Integer& delta_value) const;

  DeltaPoly& operator+=(const DeltaPoly& other);
  DeltaPoly& operator-=(const DeltaPoly& other);
  friend DeltaPoly operator+(DeltaPoly a, const DeltaPoly& b) { return a += b; }
  friend DeltaPoly operator-(DeltaPoly a, const DeltaPoly& b) { return a -= b; }
  friend DeltaPoly operator*(const DeltaPoly& a, const DeltaPoly& b);
  DeltaPoly& operator*=(const DeltaPoly& other) { return *this = *this * other; }
  DeltaPoly operator-() const;

  friend bool operator==(const DeltaPoly& a, const DeltaPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const DeltaPoly& a, const DeltaPoly& b) { return !(a == b); }

  /// e.g. "δ^2 - 1"
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Substitutes delta = v + v^-1.
LaurentPoly delta_embed(const DeltaPoly& d);

/// Inverse of delta_embed. Throws RingError when `a` is not bar-symmetric or
/// not an integral polynomial in delta.
DeltaPoly delta_retract(const LaurentPoly& a);

/// Non-throwing variant of delta_retract.
std::optional<DeltaPoly> try_delta_retract(const LaurentPoly& a);

}  // namespace cellcat
