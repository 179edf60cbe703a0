#include "cellcat/linear_algebra.hpp"

#include <map>
#include <optional>
#include <set>

namespace cellcat {

namespace {

LaurentPoly divide_or_throw(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = exact_divide(a, b);
  if (!q) throw RingError("inexact Bareiss division: " + a.to_string() + " / " + b.to_string());
  return std::move(*q);
}

}  // namespace

void add_scaled(SparseVector& acc, const SparseVector& x, const LaurentPoly& scale) {
  if (scale.is_zero()) return;
  for (const auto& [k, c] : x) {
    auto it = acc.find(k);
    if (it == acc.end()) {
      acc.emplace(k, c * scale);
      continue;
    }
    it->second += c * scale;
    if (it->second.is_zero()) acc.erase(it);
  }
}

Echelon bareiss_echelon(LaurentMatrix m) {
  Echelon out;
  const std::size_t nrows = m.size();
  const std::size_t ncols = nrows ? m[0].size() : 0;
  LaurentPoly prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t p = r;
    // prefer the shortest pivot to keep entries small
    std::optional<std::size_t> best;
    for (; p < nrows; ++p)
      if (!m[p][c].is_zero() && (!best || m[p][c].size() < m[*best][c].size())) best = p;
    if (!best) continue;
    if (*best != r) {
      std::swap(m[*best], m[r]);
      out.sign = -out.sign;
    }
    const bool unit_prev = prev == LaurentPoly(1);
    for (std::size_t i = r + 1; i < nrows; ++i) {
      const bool zero_lead = m[i][c].is_zero();
      for (std::size_t j = c + 1; j < ncols; ++j) {
        LaurentPoly val = m[i][j].is_zero() ? LaurentPoly{} : m[r][c] * m[i][j];
        if (!zero_lead && !m[r][j].is_zero()) val -= m[i][c] * m[r][j];
        if (val.is_zero()) {
          m[i][j] = LaurentPoly{};
          continue;
        }
        m[i][j] = unit_prev ? std::move(val) : divide_or_throw(val, prev);
      }
      m[i][c] = LaurentPoly{};
    }
    prev = m[r][c];
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const LaurentMatrix& m) { return bareiss_echelon(m).pivots.size(); }

LaurentPoly determinant(const LaurentMatrix& square) {
  const std::size_t n = square.size();
  if (n == 0) return 1;
  for (const auto& row : square)
    if (row.size() != n) throw RingError("determinant of non-square matrix");
  Echelon e = bareiss_echelon(square);
  if (e.pivots.size() < n) return {};
  LaurentPoly d = e.rows[n - 1][n - 1];
  return e.sign < 0 ? -d : d;
}

namespace {

LaurentVector primitive_vector(const std::vector<RationalFunction>& x) {
  LaurentPoly common = 1;
  for (const auto& c : x) {
    if (c.is_zero()) continue;
    const LaurentPoly g = gcd(common, c.den());
    common = *exact_divide(common * c.den(), g);
  }
  LaurentVector out;
  out.reserve(x.size());
  LaurentPoly content;
  for (const auto& c : x) {
    out.push_back(c.is_zero() ? LaurentPoly{} : *exact_divide(c.num() * common, c.den()));
    content = gcd(content, out.back());
  }
  if (!content.is_zero() && content != LaurentPoly(1))
    for (auto& c : out) c = *exact_divide(c, content);
  // sign: first nonzero entry has positive top coefficient
  for (auto& c : out) {
    if (c.is_zero()) continue;
    if (c.terms().back().second < 0)
      for (auto& d : out) d = -d;
    break;
  }
  return out;
}

}  // namespace

namespace {

// Gauss-Jordan that only ever pivots on units, so every step is exact and
// entries do not grow; nullopt as soon as a column offers only non-unit pivots.
std::optional<std::vector<LaurentVector>> unit_pivot_nullspace(const LaurentMatrix& m, std::size_t columns) {
  using Row = std::map<std::size_t, LaurentPoly>;
  std::vector<Row> rows;
  rows.reserve(m.size());
  for (const auto& r : m) {
    Row row;
    for (std::size_t j = 0; j < r.size(); ++j)
      if (!r[j].is_zero()) row.emplace(j, r[j]);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  std::vector<bool> used(rows.size(), false);
  std::map<std::size_t, std::size_t> pivot_row;  // column -> row
  for (std::size_t c = 0; c < columns; ++c) {
    std::size_t best = rows.size();
    bool blocked = false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (used[i]) continue;
      auto it = rows[i].find(c);
      if (it == rows[i].end()) continue;
      if (!it->second.is_unit()) {
        blocked = true;
      } else if (best == rows.size() || rows[i].size() < rows[best].size()) {
        best = i;
      }
    }
    if (best == rows.size()) {
      if (blocked) return std::nullopt;
      continue;
    }
    const LaurentPoly inv = *exact_divide(LaurentPoly(1), rows[best].at(c));
    for (auto& [j, x] : rows[best]) x = x * inv;
    const Row& pivot = rows[best];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == best) continue;
      auto it = rows[i].find(c);
      if (it == rows[i].end()) continue;
      const LaurentPoly f = it->second;
      for (const auto& [j, x] : pivot) {
        auto [slot, fresh] = rows[i].emplace(j, LaurentPoly());
        slot->second = slot->second - f * x;
        if (slot->second.is_zero()) rows[i].erase(slot);
      }
    }
    used[best] = true;
    pivot_row.emplace(c, best);
  }
  std::vector<LaurentVector> basis;
  for (std::size_t f = 0; f < columns; ++f) {
    if (pivot_row.count(f)) continue;
    std::vector<RationalFunction> x(columns);
    x[f] = 1;
    for (const auto& [p, r] : pivot_row) {
      auto it = rows[r].find(f);
      if (it != rows[r].end()) x[p] = RationalFunction(-it->second);
    }
    basis.push_back(primitive_vector(x));
  }
  return basis;
}

}  // namespace

std::vector<LaurentVector> nullspace(const LaurentMatrix& m, std::size_t columns) {
  if (auto fast = unit_pivot_nullspace(m, columns)) return *fast;
  Echelon e = bareiss_echelon(m);
  std::vector<bool> is_pivot(columns, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<LaurentVector> basis;
  for (std::size_t f = 0; f < columns; ++f) {
    if (is_pivot[f]) continue;
    std::vector<RationalFunction> x(columns);
    x[f] = 1;
    for (std::size_t i = e.pivots.size(); i-- > 0;) {
      const std::size_t p = e.pivots[i];
      RationalFunction acc;
      for (std::size_t j = p + 1; j < columns; ++j)
        if (!e.rows[i][j].is_zero() && !x[j].is_zero()) acc = acc + RationalFunction(e.rows[i][j]) * x[j];
      x[p] = -acc / RationalFunction(e.rows[i][p]);
    }
    basis.push_back(primitive_vector(x));
  }
  return basis;
}

std::vector<std::vector<RationalFunction>> inverse(const LaurentMatrix& square) {
  const std::size_t n = square.size();
  std::vector<std::vector<RationalFunction>> a(n, std::vector<RationalFunction>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = square[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) throw RingError("singular matrix");
    std::swap(a[p], a[c]);
    const RationalFunction inv = a[c][c].inverse();
    for (auto& x : a[c])
      if (!x.is_zero()) x = x * inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      const RationalFunction f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j)
        if (!a[c][j].is_zero()) a[i][j] = a[i][j] - f * a[c][j];
    }
  }
  std::vector<std::vector<RationalFunction>> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i].assign(a[i].begin() + static_cast<std::ptrdiff_t>(n), a[i].end());
  return out;
}

namespace {

LaurentMatrix densify(const std::vector<SparseVector>& family, std::vector<std::uint64_t>& keys) {
  std::set<std::uint64_t> all;
  for (const auto& x : family)
    for (const auto& kv : x) all.insert(kv.first);
  keys.assign(all.begin(), all.end());
  std::map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < keys.size(); ++i) index.emplace(keys[i], i);
  LaurentMatrix m(family.size(), LaurentVector(keys.size()));
  for (std::size_t r = 0; r < family.size(); ++r)
    for (const auto& [k, c] : family[r]) m[r][index.at(k)] = c;
  return m;
}

}  // namespace

std::size_t sparse_rank(const std::vector<SparseVector>& family) {
  std::vector<std::uint64_t> keys;
  return rank(densify(family, keys));
}

SpanExpander::SpanExpander(std::vector<SparseVector> family) : family_(std::move(family)) {
  std::vector<std::uint64_t> keys;
  LaurentMatrix m = densify(family_, keys);
  Echelon e = bareiss_echelon(m);
  rank_ = e.pivots.size();
  if (!independent()) return;
  const std::size_t k = family_.size();
  for (auto p : e.pivots) pivot_keys_.push_back(keys[p]);
  LaurentMatrix square(k, LaurentVector(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto it = family_[j].find(pivot_keys_[i]);
      if (it != family_[j].end()) square[i][j] = it->second;
    }
  det_ = determinant(square);
  const auto inv = inverse(square);
  adjugate_.assign(k, LaurentVector(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (inv[i][j].is_zero()) continue;
      auto a = exact_divide(inv[i][j].num() * det_, inv[i][j].den());
      if (!a) throw RingError("adjugate entry not integral");
      adjugate_[i][j] = std::move(*a);
    }
}

SpanExpander::Expansion SpanExpander::expand(const SparseVector& y) const {
  if (!independent()) throw RingError("expansion in a dependent family");
  const std::size_t k = family_.size();
  Expansion out;
  LaurentVector scaled(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto it = y.find(pivot_keys_[i]);
    if (it == y.end()) continue;
    for (std::size_t j = 0; j < k; ++j)
      if (!adjugate_[j][i].is_zero()) scaled[j] += adjugate_[j][i] * it->second;
  }
  // det * y must equal sum_j scaled_j * family_j on every coordinate
  SparseVector check;
  for (std::size_t j = 0; j < k; ++j) add_scaled(check, family_[j], scaled[j]);
  add_scaled(check, y, -det_);
  out.in_span = check.empty();
  if (!out.in_span) return out;
  out.coeffs.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    if (scaled[j].is_zero()) {
      out.coeffs.emplace_back();
      continue;
    }
    if (auto q = exact_divide(scaled[j], det_)) {
      out.coeffs.emplace_back(std::move(*q));
    } else {
      out.coeffs.emplace_back(scaled[j], det_);
    }
  }
  return out;
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  for (base %= p; e; e >>= 1, base = mul_mod(base, base, p))
    if (e & 1) r = mul_mod(r, base, p);
  return r;
}

}  // namespace

std::uint64_t evaluate_mod(const LaurentPoly& a, std::uint64_t t, std::uint64_t p) {
  const std::uint64_t t_inv = pow_mod(t, p - 2, p);
  std::uint64_t total = 0;
  for (const auto& [e, c] : a.terms()) {
    mpz_class r = c % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    const std::uint64_t term = mul_mod(r.get_ui(), e >= 0 ? pow_mod(t, e, p) : pow_mod(t_inv, -e, p), p);
    total = (total + term) % p;
  }
  return total;
}

std::size_t specialized_rank(const std::vector<SparseVector>& family, std::uint64_t t, std::uint64_t p) {
  if (t % p == 0) throw RingError("specialization point must be a unit");
  std::vector<std::map<std::uint64_t, std::uint64_t>> rows;
  for (const auto& x : family) {
    std::map<std::uint64_t, std::uint64_t> r;
    for (const auto& [k, c] : x)
      if (auto e = evaluate_mod(c, t, p)) r.emplace(k, e);
    if (!r.empty()) rows.push_back(std::move(r));
  }
  // sparse elimination keyed on the leading coordinate
  std::map<std::uint64_t, std::map<std::uint64_t, std::uint64_t>> pivots;
  for (auto& r : rows) {
    while (!r.empty()) {
      const auto [lead, f] = *r.begin();
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        const std::uint64_t inv = pow_mod(f, p - 2, p);
        for (auto& [k, c] : r) c = mul_mod(c, inv, p);
        pivots.emplace(lead, std::move(r));
        break;
      }
      for (const auto& [k, c] : it->second) {
        auto [slot, fresh] = r.emplace(k, 0);
        slot->second = (slot->second + p - mul_mod(f, c, p)) % p;
        if (slot->second == 0) r.erase(slot);
      }
    }
  }
  return pivots.size();
}

}  // namespace cellcat
