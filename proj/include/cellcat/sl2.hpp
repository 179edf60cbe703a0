#pragma once

#include "cellcat/laurent_poly.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace cellcat::sl2 {

class Sl2Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Standard basis index of the n-th tensor power of V: letter 0 is the
/// highest-weight vector x0, letter 1 the lowest x1. Position 0 is stored in
/// the most significant of the n bits, so the default ordering is lexicographic.
class WeightString {
 public:
  static constexpr int kMaxLength = 24;

  WeightString() = default;
  WeightString(std::uint32_t bits, int n);
  /// From "0110"; throws Sl2Error on other characters or excessive length.
  static WeightString parse(std::string_view letters);

  int size() const { return n_; }
  std::uint32_t bits() const { return bits_; }
  int at(int pos) const { return static_cast<int>((bits_ >> (n_ - 1 - pos)) & 1u); }
  int ones() const;
  int weight() const { return n_ - 2 * ones(); }

  WeightString with(int pos, int letter) const;
  WeightString reversed() const;
  WeightString slice(int pos, int len) const;
  WeightString operator+(const WeightString& tail) const;

  std::string to_string() const;

  friend auto operator<=>(const WeightString&, const WeightString&) = default;

 private:
  std::uint32_t bits_ = 0;
  int n_ = 0;
};

/// All 2^n strings of length n, in lexicographic order.
std::vector<WeightString> all_strings(int n);

/// Sum of the positions holding a 1. Strictly increases along the order the
/// bar involution produces, so it serves as a linear extension of it.
int position_key(const WeightString& a);

/// Finite Z[v, v^-1]-combination of standard basis vectors of one tensor power.
class TensorVector {
 public:
  using Terms = std::map<WeightString, LaurentPoly>;

  explicit TensorVector(int n = 0) : n_(n) {}
  static TensorVector basis(const WeightString& a);

  int size() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const WeightString& a) const;

  void add_term(const WeightString& a, const LaurentPoly& c);
  TensorVector& operator+=(const TensorVector& other);
  TensorVector& operator-=(const TensorVector& other);
  friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
  friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }
  friend TensorVector operator*(const LaurentPoly& c, const TensorVector& x);
  /// Coefficient-wise bar, no Theta correction.
  TensorVector bar_coefficients() const;

  friend bool operator==(const TensorVector&, const TensorVector&) = default;

  std::string to_string() const;

 private:
  int n_;
  Terms terms_;
};

// Action through the iterated coproduct
//   Delta(E) = E (x) 1 + K^-1 (x) E,  Delta(F) = F (x) K + 1 (x) F,  Delta(K) = K (x) K.
TensorVector act_E(const TensorVector& x);
TensorVector act_F(const TensorVector& x);
TensorVector act_K(const TensorVector& x);
TensorVector act_K_inverse(const TensorVector& x);

/// Coefficient c in Theta = 1 + c F (x) E, derived from the requirement that the
/// bar involution of V (x) V commutes with E. Higher terms vanish on V since E^2 = 0.
LaurentPoly quasi_r_coefficient();

/// Psi = Theta o (coefficient bar), built one tensor factor at a time.
TensorVector bar_involution(const TensorVector& x);
/// Psi(x_a), memoized.
const TensorVector& bar_of_basis(const WeightString& a);

enum class HalfLattice { kPositive, kNegative };  // v Z[v] or v^-1 Z[v^-1]
enum class Bracketing { kOneZero, kZeroOne };      // which adjacent pair cancels

struct Conventions {
  HalfLattice half = HalfLattice::kPositive;
  Bracketing bracketing = Bracketing::kOneZero;
};

std::string to_string(HalfLattice h);
std::string to_string(Bracketing b);

/// Bracket cancellation: lambda = number of uncancelled letters; hi when they
/// are all 0, lo when they are all 1.
struct BracketData {
  int lambda = 0;
  bool hi = false;
  bool lo = false;
  std::vector<int> uncancelled;  // positions
};
BracketData bracket(const WeightString& a, Bracketing orientation = Bracketing::kOneZero);

/// Flip every uncancelled letter: maps B[lambda]^hi onto B[lambda]^lo.
WeightString hi_to_lo(const WeightString& a, Bracketing orientation = Bracketing::kOneZero);
WeightString lo_to_hi(const WeightString& a, Bracketing orientation = Bracketing::kOneZero);

struct BasedModuleData {
  int n = 0;
  Conventions conventions;
  std::vector<WeightString> strings;     // all_strings(n); indices below refer to this order
  std::vector<TensorVector> elements;    // b_a
  std::vector<int> label;                // lambda(a)
  std::vector<bool> hi;
  std::vector<bool> lo;

  const TensorVector& element(const WeightString& a) const { return elements.at(a.bits()); }
  std::map<int, std::size_t> partition_sizes() const;
  std::vector<WeightString> cells(int lambda, bool want_hi) const;
};

/// Canonical basis by triangular solve, one weight space at a time. Throws
/// Sl2Error with the offending strings if a triangularity check fails.
BasedModuleData canonical_basis(int n, Conventions conventions = {});
/// Fills label/hi/lo from the bracketing rule.
void partition_B(BasedModuleData& data);

/// Coordinates of x in the canonical basis (exact, unitriangular back-substitution).
std::map<WeightString, LaurentPoly> expand_in_canonical(const TensorVector& x, const BasedModuleData& data);

/// The order generated by supports of Psi(x_a) - x_a: result[a] = {a' : a' strictly below a}.
std::map<WeightString, std::vector<WeightString>> bar_order(int n);

struct PropertyCheck {
  bool pass = true;
  nlohmann::ordered_json witness;
};
/// span{b : lambda(b) >= l} is stable under E, F, K for every l.
PropertyCheck filtration_property(const BasedModuleData& data);
/// E b lies in span{b' : lambda(b') > lambda(b)} for hi elements b.
PropertyCheck hi_property(const BasedModuleData& data);

nlohmann::ordered_json element_json(const BasedModuleData& data, std::size_t index);
nlohmann::ordered_json conventions_json(const Conventions& c = {});

}  // namespace cellcat::sl2
