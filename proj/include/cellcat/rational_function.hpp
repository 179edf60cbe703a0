#pragma once

#include "cellcat/laurent_poly.hpp"

#include <optional>
#include <string>

namespace cellcat {

/// Element of Q(v) as a reduced quotient of Laurent polynomials.
///
/// Canonical form: gcd(num, den) = 1, den has lowest exponent 0 and a
/// positive leading coefficient, zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const LaurentPoly& num);  // NOLINT
  RationalFunction(long constant) : RationalFunction(LaurentPoly(constant)) {}  // NOLINT
  RationalFunction(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// The Laurent polynomial this equals, if the denominator is a unit.
  std::optional<LaurentPoly> as_laurent() const;

  RationalFunction inverse() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction operator-() const;
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  void reduce();
  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace cellcat
