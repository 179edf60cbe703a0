#include "cellcat/laurent_poly.hpp"

#include <algorithm>
#include <sstream>

namespace cellcat {

namespace {

// Dense polynomial with index = exponent, used internally for division and gcd.
using Dense = std::vector<Integer>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense to_dense(const LaurentPoly& a) {
  Dense out;
  if (a.is_zero()) return out;
  const int low = a.min_exponent();
  out.assign(static_cast<std::size_t>(a.max_exponent() - low + 1), Integer(0));
  for (const auto& [e, c] : a.terms()) out[static_cast<std::size_t>(e - low)] = c;
  return out;
}

LaurentPoly from_dense(const Dense& p, int shift) {
  std::map<int, Integer> m;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) m.emplace(static_cast<int>(i) + shift, p[i]);
  return LaurentPoly::from_map(m);
}

Integer dense_content(const Dense& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(Dense& p) {
  trim(p);
  if (p.empty()) return;
  Integer g = dense_content(p);
  if (p.back() < 0) g = -g;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Remainder of a by b up to a scalar factor; the primitive part of the result
// is what the gcd loop consumes.
Dense pseudo_remainder(Dense a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  trim(a);
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const Integer la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

}  // namespace

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace_back(0, Integer(constant));
}

LaurentPoly::LaurentPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace_back(0, constant);
}

LaurentPoly LaurentPoly::monomial(int exponent, const Integer& coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace_back(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::from_map(const std::map<int, Integer>& coeffs) {
  LaurentPoly p;
  for (const auto& [e, c] : coeffs)
    if (c != 0) p.terms_.emplace_back(e, c);
  return p;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw RingError("min_exponent of zero polynomial");
  return terms_.front().first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw RingError("max_exponent of zero polynomial");
  return terms_.back().first;
}

Integer LaurentPoly::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_[0].second == 1 || terms_[0].second == -1);
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) p.terms_.emplace_back(-it->first, it->second);
  return p;
}

bool LaurentPoly::is_bar_symmetric() const {
  const std::size_t n = terms_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = terms_[i];
    const auto& b = terms_[n - 1 - i];
    if (a.first != -b.first || a.second != b.second) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.first += k;
  return p;
}

LaurentPoly LaurentPoly::positive_part() const {
  LaurentPoly p;
  for (const auto& t : terms_)
    if (t.first > 0) p.terms_.push_back(t);
  return p;
}

LaurentPoly LaurentPoly::negative_part() const {
  LaurentPoly p;
  for (const auto& t : terms_)
    if (t.first < 0) p.terms_.push_back(t);
  return p;
}

Integer LaurentPoly::content() const {
  Integer g = 0;
  for (const auto& t : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_mpz_t());
  return g;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = other.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Integer s = a->second + b->second;
      if (s != 0) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const auto& single = a.terms_.size() == 1 ? a : b;
    const auto& other = a.terms_.size() == 1 ? b : a;
    LaurentPoly p = other;
    const auto& [e, c] = single.terms_[0];
    for (auto& t : p.terms_) {
      t.first += e;
      t.second *= c;
    }
    return p;
  }
  const int low = a.min_exponent() + b.min_exponent();
  Dense acc(static_cast<std::size_t>(a.max_exponent() + b.max_exponent() - low + 1), Integer(0));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      auto& slot = acc[static_cast<std::size_t>(ea + eb - low)];
      mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  return from_dense(acc, low);
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.terms_[i].first != b.terms_[i].first) return a.terms_[i].first < b.terms_[i].first;
    if (a.terms_[i].second != b.terms_[i].second) return a.terms_[i].second < b.terms_[i].second;
  }
  return a.terms_.size() < b.terms_.size();
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << "v";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
LaurentPoly lp_bar(const LaurentPoly& a) { return a.bar(); }
bool lp_is_bar_symmetric(const LaurentPoly& a) { return a.is_bar_symmetric(); }

std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw RingError("division by zero Laurent polynomial");
  if (a.is_zero()) return LaurentPoly{};
  if (b.is_monomial()) {
    const auto& [eb, cb] = b.terms()[0];
    std::map<int, Integer> m;
    for (const auto& [e, c] : a.terms()) {
      if (!mpz_divisible_p(c.get_mpz_t(), cb.get_mpz_t())) return std::nullopt;
      Integer q;
      mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), cb.get_mpz_t());
      m.emplace(e - eb, q);
    }
    return LaurentPoly::from_map(m);
  }
  Dense num = to_dense(a);
  const Dense den = to_dense(b);
  if (num.size() < den.size()) return std::nullopt;
  const std::size_t dd = den.size() - 1;
  Dense quot(num.size() - dd, Integer(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer& top = num[k + dd];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), den.back().get_mpz_t())) return std::nullopt;
    Integer q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), den.back().get_mpz_t());
    for (std::size_t i = 0; i <= dd; ++i) mpz_submul(num[k + i].get_mpz_t(), q.get_mpz_t(), den[i].get_mpz_t());
    quot[k] = std::move(q);
  }
  for (const auto& c : num)
    if (c != 0) return std::nullopt;
  return from_dense(quot, a.min_exponent() - b.min_exponent());
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  Dense p = to_dense(a);
  Dense q = to_dense(b);
  if (p.empty()) std::swap(p, q);
  Integer cont = dense_content(p);
  if (!q.empty()) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), dense_content(q).get_mpz_t());
  make_primitive(p);
  make_primitive(q);
  if (p.size() < q.size()) std::swap(p, q);
  while (!q.empty()) {
    Dense r = pseudo_remainder(p, q);
    make_primitive(r);
    p = std::move(q);
    q = std::move(r);
  }
  // strip powers of v: they are units in the Laurent ring
  std::size_t low = 0;
  while (low < p.size() && p[low] == 0) ++low;
  p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(low));
  for (auto& c : p) c *= cont;
  return from_dense(p, 0);
}

LaurentPoly quantum_int(int n) {
  if (n < 0) return -quantum_int(-n);
  std::map<int, Integer> m;
  for (int k = -(n - 1); k <= n - 1; k += 2) m.emplace(k, 1);
  return LaurentPoly::from_map(m);
}

}  // namespace cellcat
