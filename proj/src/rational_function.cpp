#include "cellcat/rational_function.hpp"

namespace cellcat {

RationalFunction::RationalFunction(const LaurentPoly& num) : num_(num), den_(1) {}

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw RingError("rational function with zero denominator");
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  const LaurentPoly g = gcd(num_, den_);
  num_ = *exact_divide(num_, g);
  den_ = *exact_divide(den_, g);
  LaurentPoly unit = LaurentPoly::monomial(den_.min_exponent(), den_.terms().back().second < 0 ? -1 : 1);
  num_ = *exact_divide(num_, unit);
  den_ = *exact_divide(den_, unit);
}

std::optional<LaurentPoly> RationalFunction::as_laurent() const {
  if (den_ == LaurentPoly(1)) return num_;
  return std::nullopt;
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw RingError("inverse of zero");
  return RationalFunction(den_, num_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

std::string RationalFunction::to_string() const {
  if (den_ == LaurentPoly(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace cellcat
