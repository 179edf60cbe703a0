#include "cellcat/sl2.hpp"

#include "cellcat/json_io.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <set>

namespace cellcat::sl2 {

using json = nlohmann::ordered_json;

// ---- WeightString ----------------------------------------------------------

WeightString::WeightString(std::uint32_t bits, int n) : bits_(bits), n_(n) {
  if (n < 0 || n > kMaxLength) throw Sl2Error("tensor length out of range: " + std::to_string(n));
  if (n < 32 && (bits >> n) != 0) throw Sl2Error("bits exceed the string length");
}

WeightString WeightString::parse(std::string_view letters) {
  if (letters.size() > static_cast<std::size_t>(kMaxLength)) throw Sl2Error("weight string too long");
  std::uint32_t bits = 0;
  for (char ch : letters) {
    if (ch != '0' && ch != '1') throw Sl2Error("weight string may only contain 0 and 1");
    bits = (bits << 1) | static_cast<std::uint32_t>(ch - '0');
  }
  return WeightString(bits, static_cast<int>(letters.size()));
}

int WeightString::ones() const { return std::popcount(bits_); }

WeightString WeightString::with(int pos, int letter) const {
  const std::uint32_t mask = 1u << (n_ - 1 - pos);
  return WeightString(letter ? (bits_ | mask) : (bits_ & ~mask), n_);
}

WeightString WeightString::reversed() const {
  std::uint32_t out = 0;
  for (int i = 0; i < n_; ++i) out |= static_cast<std::uint32_t>(at(i)) << i;
  return WeightString(out, n_);
}

WeightString WeightString::slice(int pos, int len) const {
  if (pos < 0 || len < 0 || pos + len > n_) throw Sl2Error("slice out of range");
  if (len == 0) return WeightString(0, 0);
  const std::uint32_t mask = len >= 32 ? ~0u : ((1u << len) - 1);
  return WeightString((bits_ >> (n_ - pos - len)) & mask, len);
}

WeightString WeightString::operator+(const WeightString& tail) const {
  if (n_ + tail.n_ > kMaxLength) throw Sl2Error("tensor length out of range");
  const std::uint32_t head = tail.n_ >= 32 ? 0 : (bits_ << tail.n_);
  return WeightString(head | tail.bits_, n_ + tail.n_);
}

std::string WeightString::to_string() const {
  std::string s;
  for (int i = 0; i < n_; ++i) s += static_cast<char>('0' + at(i));
  return s;
}

std::vector<WeightString> all_strings(int n) {
  if (n < 0 || n > WeightString::kMaxLength) throw Sl2Error("tensor length out of range");
  std::vector<WeightString> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t b = 0; b < (1u << n); ++b) out.emplace_back(b, n);
  return out;
}

int position_key(const WeightString& a) {
  int k = 0;
  for (int i = 0; i < a.size(); ++i)
    if (a.at(i)) k += i;
  return k;
}

// ---- TensorVector ----------------------------------------------------------

TensorVector TensorVector::basis(const WeightString& a) {
  TensorVector x(a.size());
  x.terms_.emplace(a, LaurentPoly(1));
  return x;
}

LaurentPoly TensorVector::coeff(const WeightString& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void TensorVector::add_term(const WeightString& a, const LaurentPoly& c) {
  if (a.size() != n_) throw Sl2Error("tensor length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(a, c);
  if (inserted) return;
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

TensorVector& TensorVector::operator+=(const TensorVector& other) {
  if (other.n_ != n_) throw Sl2Error("tensor length mismatch");
  for (const auto& [a, c] : other.terms_) add_term(a, c);
  return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& other) {
  if (other.n_ != n_) throw Sl2Error("tensor length mismatch");
  for (const auto& [a, c] : other.terms_) add_term(a, -c);
  return *this;
}

TensorVector operator*(const LaurentPoly& c, const TensorVector& x) {
  TensorVector out(x.n_);
  if (c.is_zero()) return out;
  for (const auto& [a, k] : x.terms_) out.terms_.emplace(a, c * k);
  return out;
}

TensorVector TensorVector::bar_coefficients() const {
  TensorVector out(n_);
  for (const auto& [a, c] : terms_) out.terms_.emplace(a, c.bar());
  return out;
}

std::string TensorVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [a, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*x" + a.to_string();
  }
  return out;
}

// ---- action ------------------------------------------------------------------

TensorVector act_E(const TensorVector& x) {
  TensorVector out(x.size());
  for (const auto& [a, c] : x.terms()) {
    int prefix = 0;
    for (int i = 0; i < a.size(); ++i) {
      if (a.at(i)) {
        out.add_term(a.with(i, 0), c.shifted(-prefix));
        --prefix;
      } else {
        ++prefix;
      }
    }
  }
  return out;
}

TensorVector act_F(const TensorVector& x) {
  TensorVector out(x.size());
  for (const auto& [a, c] : x.terms()) {
    int suffix = a.weight();
    for (int i = 0; i < a.size(); ++i) {
      suffix -= a.at(i) ? -1 : 1;
      if (!a.at(i)) out.add_term(a.with(i, 1), c.shifted(suffix));
    }
  }
  return out;
}

TensorVector act_K(const TensorVector& x) {
  TensorVector out(x.size());
  for (const auto& [a, c] : x.terms()) out.add_term(a, c.shifted(a.weight()));
  return out;
}

TensorVector act_K_inverse(const TensorVector& x) {
  TensorVector out(x.size());
  for (const auto& [a, c] : x.terms()) out.add_term(a, c.shifted(-a.weight()));
  return out;
}

// ---- bar involution ----------------------------------------------------------

namespace {

TensorVector append_letter(const TensorVector& x, int letter) {
  TensorVector out(x.size() + 1);
  const WeightString tail(static_cast<std::uint32_t>(letter), 1);
  for (const auto& [a, c] : x.terms()) out.add_term(a + tail, c);
  return out;
}

// Theta_c (y (x) x_last) for the two-letter candidate Theta = 1 + c F (x) E.
TensorVector theta_append(const TensorVector& y, int last, const LaurentPoly& c) {
  TensorVector out = append_letter(y, last);
  if (last == 1) out += c * append_letter(act_F(y), 0);
  return out;
}

TensorVector psi_pair(const TensorVector& x, const LaurentPoly& c) {
  TensorVector out(2);
  for (const auto& [a, k] : x.terms())
    out += k.bar() * theta_append(TensorVector::basis(a.slice(0, 1)), a.at(1), c);
  return out;
}

LaurentPoly derive_quasi_r() {
  // E Psi(x11) = Psi(E x11) pins down c; the residual is affine in c.
  const TensorVector x11 = TensorVector::basis(WeightString::parse("11"));
  auto residual = [&](const LaurentPoly& c) { return act_E(psi_pair(x11, c)) - psi_pair(act_E(x11), c); };
  const TensorVector r0 = residual(LaurentPoly(0));
  const TensorVector slope = residual(LaurentPoly(1)) - r0;
  for (const auto& [a, s] : slope.terms()) {
    auto c = exact_divide(-r0.coeff(a), s);
    if (!c) continue;
    if (residual(*c).is_zero()) return *c;
  }
  throw Sl2Error("no quasi-R-matrix coefficient makes Psi commute with E");
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

LaurentPoly quasi_r_coefficient() {
  static const LaurentPoly c = derive_quasi_r();
  return c;
}

const TensorVector& bar_of_basis(const WeightString& a) {
  static std::map<WeightString, TensorVector> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache.find(a);
    if (it != cache.end()) return it->second;
  }
  TensorVector value(a.size());
  if (a.size() <= 1) {
    value = TensorVector::basis(a);
  } else {
    const TensorVector& head = bar_of_basis(a.slice(0, a.size() - 1));
    value = theta_append(head, a.at(a.size() - 1), quasi_r_coefficient());
  }
  std::lock_guard<std::mutex> lock(cache_mutex());
  return cache.emplace(a, std::move(value)).first->second;
}

TensorVector bar_involution(const TensorVector& x) {
  TensorVector out(x.size());
  for (const auto& [a, c] : x.terms()) out += c.bar() * bar_of_basis(a);
  return out;
}

// ---- bracketing --------------------------------------------------------------

std::string to_string(HalfLattice h) { return h == HalfLattice::kPositive ? "vZ[v]" : "v^-1Z[v^-1]"; }

std::string to_string(Bracketing b) {
  return b == Bracketing::kOneZero ? "1 then 0 cancels" : "0 then 1 cancels";
}

BracketData bracket(const WeightString& a, Bracketing orientation) {
  const int first = orientation == Bracketing::kOneZero ? 1 : 0;
  BracketData out;
  for (int i = 0; i < a.size(); ++i) {
    if (!out.uncancelled.empty() && a.at(out.uncancelled.back()) == first && a.at(i) == 1 - first)
      out.uncancelled.pop_back();
    else
      out.uncancelled.push_back(i);
  }
  out.lambda = static_cast<int>(out.uncancelled.size());
  out.hi = std::all_of(out.uncancelled.begin(), out.uncancelled.end(), [&](int i) { return a.at(i) == 0; });
  out.lo = std::all_of(out.uncancelled.begin(), out.uncancelled.end(), [&](int i) { return a.at(i) == 1; });
  return out;
}

WeightString hi_to_lo(const WeightString& a, Bracketing orientation) {
  WeightString out = a;
  for (int i : bracket(a, orientation).uncancelled) out = out.with(i, 1);
  return out;
}

WeightString lo_to_hi(const WeightString& a, Bracketing orientation) {
  WeightString out = a;
  for (int i : bracket(a, orientation).uncancelled) out = out.with(i, 0);
  return out;
}

// ---- canonical basis ---------------------------------------------------------

std::map<int, std::size_t> BasedModuleData::partition_sizes() const {
  std::map<int, std::size_t> out;
  for (int l : label) ++out[l];
  return out;
}

std::vector<WeightString> BasedModuleData::cells(int lambda, bool want_hi) const {
  std::vector<WeightString> out;
  for (std::size_t i = 0; i < strings.size(); ++i)
    if (label[i] == lambda && (want_hi ? hi[i] : lo[i])) out.push_back(strings[i]);
  return out;
}

namespace {

bool key_less(const WeightString& a, const WeightString& b) {
  return std::make_pair(position_key(a), a) < std::make_pair(position_key(b), b);
}

// Peel off the key-maximal term against unitriangular elements.
std::map<WeightString, LaurentPoly> greedy_expand(TensorVector rem, const std::vector<TensorVector>& elements) {
  std::map<WeightString, LaurentPoly> out;
  while (!rem.is_zero()) {
    auto top = std::max_element(rem.terms().begin(), rem.terms().end(),
                                [](const auto& x, const auto& y) { return key_less(x.first, y.first); });
    const WeightString t = top->first;
    const LaurentPoly c = top->second;
    const TensorVector& b = elements.at(t.bits());
    if (b.coeff(t) != LaurentPoly(1)) throw Sl2Error("expansion against a non-unitriangular element");
    out.emplace(t, c);
    rem -= c * b;
  }
  return out;
}

bool in_half(const LaurentPoly& p, HalfLattice h) {
  for (const auto& [e, c] : p.terms())
    if (h == HalfLattice::kPositive ? e <= 0 : e >= 0) return false;
  return true;
}

}  // namespace

BasedModuleData canonical_basis(int n, Conventions conventions) {
  BasedModuleData data;
  data.n = n;
  data.conventions = conventions;
  data.strings = all_strings(n);
  data.elements.assign(data.strings.size(), TensorVector(n));
  std::vector<WeightString> order = data.strings;
  std::sort(order.begin(), order.end(), [](const WeightString& a, const WeightString& b) {
    return std::make_pair(a.weight(), std::make_pair(position_key(a), a)) <
           std::make_pair(b.weight(), std::make_pair(position_key(b), b));
  });
  for (const WeightString& a : order) {
    TensorVector lower = bar_of_basis(a) - TensorVector::basis(a);
    for (const auto& [t, c] : lower.terms())
      if (t.weight() != a.weight() || position_key(t) >= position_key(a))
        throw Sl2Error("bar involution is not unitriangular: Psi(x" + a.to_string() + ") has a term at x" +
                       t.to_string());
    TensorVector b = TensorVector::basis(a);
    for (const auto& [t, s] : greedy_expand(lower, data.elements)) {
      if (!(s + s.bar()).is_zero())
        throw Sl2Error("triangular solve failed at x" + a.to_string() + ": coefficient " + s.to_string() +
                       " on b" + t.to_string() + " is not bar-antisymmetric");
      LaurentPoly p = conventions.half == HalfLattice::kPositive ? s.positive_part() : s.negative_part();
      b += p * data.elements[t.bits()];
    }
    for (const auto& [t, c] : b.terms())
      if (t != a && !in_half(c, conventions.half))
        throw Sl2Error("canonical element b" + a.to_string() + " leaves the half lattice at x" + t.to_string());
    if (bar_involution(b) != b) throw Sl2Error("canonical element b" + a.to_string() + " is not bar-fixed");
    data.elements[a.bits()] = std::move(b);
  }
  partition_B(data);
  return data;
}

void partition_B(BasedModuleData& data) {
  data.label.assign(data.strings.size(), 0);
  data.hi.assign(data.strings.size(), false);
  data.lo.assign(data.strings.size(), false);
  for (std::size_t i = 0; i < data.strings.size(); ++i) {
    BracketData br = bracket(data.strings[i], data.conventions.bracketing);
    data.label[i] = br.lambda;
    data.hi[i] = br.hi;
    data.lo[i] = br.lo;
  }
}

std::map<WeightString, LaurentPoly> expand_in_canonical(const TensorVector& x, const BasedModuleData& data) {
  if (x.size() != data.n) throw Sl2Error("tensor length mismatch");
  return greedy_expand(x, data.elements);
}

std::map<WeightString, std::vector<WeightString>> bar_order(int n) {
  std::map<WeightString, std::set<WeightString>> direct;
  for (const auto& a : all_strings(n))
    for (const auto& [t, c] : bar_of_basis(a).terms())
      if (t != a) direct[a].insert(t);
  std::map<WeightString, std::vector<WeightString>> out;
  for (const auto& a : all_strings(n)) {
    std::set<WeightString> seen;
    std::vector<WeightString> stack(direct[a].begin(), direct[a].end());
    while (!stack.empty()) {
      WeightString t = stack.back();
      stack.pop_back();
      if (!seen.insert(t).second) continue;
      for (const auto& u : direct[t]) stack.push_back(u);
    }
    out[a].assign(seen.begin(), seen.end());
  }
  return out;
}

PropertyCheck filtration_property(const BasedModuleData& data) {
  PropertyCheck out;
  const std::pair<const char*, TensorVector (*)(const TensorVector&)> ops[] = {
      {"E", act_E}, {"F", act_F}, {"K", act_K}};
  for (std::size_t i = 0; i < data.strings.size(); ++i)
    for (const auto& [name, op] : ops)
      for (const auto& [t, c] : expand_in_canonical(op(data.elements[i]), data))
        if (data.label[t.bits()] < data.label[i]) {
          out.pass = false;
          out.witness = {{"element", data.strings[i].to_string()},
                         {"operator", name},
                         {"term", t.to_string()},
                         {"lambda", data.label[i]},
                         {"term_lambda", data.label[t.bits()]}};
          return out;
        }
  return out;
}

PropertyCheck hi_property(const BasedModuleData& data) {
  PropertyCheck out;
  for (std::size_t i = 0; i < data.strings.size(); ++i) {
    if (!data.hi[i]) continue;
    for (const auto& [t, c] : expand_in_canonical(act_E(data.elements[i]), data))
      if (data.label[t.bits()] <= data.label[i]) {
        out.pass = false;
        out.witness = {{"element", data.strings[i].to_string()}, {"term", t.to_string()}};
        return out;
      }
  }
  return out;
}

json element_json(const BasedModuleData& data, std::size_t index) {
  const TensorVector& b = data.elements.at(index);
  std::vector<WeightString> support;
  for (const auto& [t, c] : b.terms()) support.push_back(t);
  std::sort(support.begin(), support.end(), [](const auto& x, const auto& y) { return key_less(y, x); });
  json terms = json::object();
  for (const auto& t : support) terms[t.to_string()] = io::to_json(b.coeff(t));
  return {{"leading", data.strings[index].to_string()},
          {"terms", terms},
          {"lambda", data.label[index]},
          {"hi", static_cast<bool>(data.hi[index])},
          {"lo", static_cast<bool>(data.lo[index])}};
}

json conventions_json(const Conventions& c) {
  return {{"coproduct", "Delta(E) = E(x)1 + K^-1(x)E, Delta(F) = F(x)K + 1(x)F, Delta(K) = K(x)K"},
          {"quasi_r_matrix", "Theta = 1 + (" + quasi_r_coefficient().to_string() + ") F(x)E"},
          {"half_lattice", to_string(c.half)},
          {"bracketing", to_string(c.bracketing)},
          {"cup_normalization", "coefficient 1 on x01: x01 - v^-1 x10"},
          {"cap", "x01 -> -v, x10 -> 1"},
          {"order_key", "sum of positions of 1s"}};
}

}  // namespace cellcat::sl2
