#include "cellcat/delta_poly.hpp"

#include <sstream>

namespace cellcat {

DeltaPoly::DeltaPoly(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

DeltaPoly::DeltaPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void DeltaPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer DeltaPoly::evaluate(const Integer& delta_value) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * delta_value + *it;
  return acc;
}

DeltaPoly& DeltaPoly::operator+=(const DeltaPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

DeltaPoly& DeltaPoly::operator-=(const DeltaPoly& other) { return *this += -other; }

DeltaPoly DeltaPoly::operator-() const {
  DeltaPoly d = *this;
  for (auto& c : d.coeffs_) c = -c;
  return d;
}

DeltaPoly operator*(const DeltaPoly& a, const DeltaPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return DeltaPoly(std::move(out));
}

std::string DeltaPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << "δ";
    if (k != 1) os << "^" << k;
  }
  return os.str();
}

LaurentPoly delta_embed(const DeltaPoly& d) {
  const LaurentPoly delta = LaurentPoly::monomial(1) + LaurentPoly::monomial(-1);
  LaurentPoly acc;
  for (std::size_t k = d.coeffs().size(); k-- > 0;) acc = acc * delta + LaurentPoly(d.coeffs()[k]);
  return acc;
}

std::optional<DeltaPoly> try_delta_retract(const LaurentPoly& a) {
  if (!a.is_bar_symmetric()) return std::nullopt;
  if (a.is_zero()) return DeltaPoly{};
  // Peel the top symmetric term: c v^k + ... + c v^-k is c delta^k + lower.
  LaurentPoly rest = a;
  std::vector<Integer> coeffs(static_cast<std::size_t>(a.max_exponent()) + 1, Integer(0));
  const LaurentPoly delta = LaurentPoly::monomial(1) + LaurentPoly::monomial(-1);
  while (!rest.is_zero()) {
    const int k = rest.max_exponent();
    if (k < 0) return std::nullopt;
    const Integer c = rest.coeff(k);
    coeffs[static_cast<std::size_t>(k)] = c;
    LaurentPoly power = 1;
    for (int i = 0; i < k; ++i) power *= delta;
    rest -= LaurentPoly(c) * power;
  }
  return DeltaPoly(std::move(coeffs));
}

DeltaPoly delta_retract(const LaurentPoly& a) {
  if (!a.is_bar_symmetric()) throw RingError("not bar-symmetric: " + a.to_string());
  auto d = try_delta_retract(a);
  if (!d) throw RingError("not in Z[delta]: " + a.to_string());
  return *d;
}

}  // namespace cellcat
