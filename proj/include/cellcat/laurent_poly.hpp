#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cellcat {

using Integer = mpz_class;

class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element of Z[v, v^-1].
///
/// Stored as exponent-sorted (exponent, coefficient) pairs with no zero
/// coefficients, so the zero polynomial is the empty sequence and equality
/// is structural.
class LaurentPoly {
 public:
  using Term = std::pair<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT: implicit integer constants read naturally
  LaurentPoly(const Integer& constant);  // NOLINT

  static LaurentPoly monomial(int exponent, const Integer& coeff = 1);
  static LaurentPoly v() { return monomial(1); }
  static LaurentPoly from_map(const std::map<int, Integer>& coeffs);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int min_exponent() const;
  int max_exponent() const;
  Integer coeff(int exponent) const;
  /// True when the polynomial is ±v^k.
  bool is_unit() const;
  bool is_monomial() const { return terms_.size() == 1; }

  LaurentPoly bar() const;
  bool is_bar_symmetric() const;
  /// Shifts every exponent by `k` (multiplication by v^k).
  LaurentPoly shifted(int k) const;
  /// Terms with exponent > 0, == 0 or < 0 respectively.
  LaurentPoly positive_part() const;
  LaurentPoly negative_part() const;
  Integer content() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
  /// Arbitrary but fixed total order, used for deterministic containers.
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

  /// Human readable form, e.g. "v^2 + 2 + v^-2".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_bar(const LaurentPoly& a);
bool lp_is_bar_symmetric(const LaurentPoly& a);

/// a / b when b divides a in Z[v, v^-1]; nullopt otherwise. Throws on b == 0.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b);

/// Greatest common divisor in Z[v, v^-1], normalized to have lowest exponent 0
/// and positive leading coefficient. gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// (v^n - v^-n) / (v - v^-1).
LaurentPoly quantum_int(int n);

}  // namespace cellcat
