#include <doctest.h>

#include "cellcat/linear_algebra.hpp"
#include "cellcat/sl2_hom.hpp"
#include "cellcat/verifier.hpp"
#include "test_support.hpp"

#include <random>

using namespace cellcat;
using namespace cellcat::sl2;

namespace {

const LaurentPoly v = LaurentPoly::v();
const LaurentPoly v_inv = LaurentPoly::monomial(-1);

TensorVector x(const char* letters) { return TensorVector::basis(WeightString::parse(letters)); }

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Multiplicity of V_lambda in the n-th power from weight multiplicities:
// dim M_lambda - dim M_{lambda+2}, with dim M_w = binomial(n, (n - w) / 2).
long long multiplicity(int n, int lambda) {
  auto dim = [n](int w) { return (n - w) % 2 || w > n ? 0LL : binomial(n, (n - w) / 2); };
  return dim(lambda) - dim(lambda + 2);
}

long long catalan(int k) {
  std::vector<long long> c(static_cast<std::size_t>(k) + 1, 0);
  c[0] = 1;
  for (int j = 1; j <= k; ++j)
    for (int i = 0; i < j; ++i) c[j] += c[i] * c[j - 1 - i];
  return c[k];
}

TensorVector random_vector(std::mt19937& rng, int n) {
  TensorVector out(n);
  std::uniform_int_distribution<int> pick(0, (1 << n) - 1);
  for (int i = 0; i < 4; ++i)
    out.add_term(WeightString(static_cast<std::uint32_t>(pick(rng)), n), testing::random_laurent(rng, 3, 3));
  return out;
}

SparseVector as_sparse(const TensorVector& t) {
  SparseVector out;
  for (const auto& [a, c] : t.terms()) out.emplace(a.bits(), c);
  return out;
}

}  // namespace

TEST_CASE("weight strings") {
  WeightString a = WeightString::parse("0110");
  CHECK(a.to_string() == "0110");
  CHECK(a.weight() == 0);
  CHECK(a.at(1) == 1);
  CHECK(a.reversed().to_string() == "0110");
  CHECK(WeightString::parse("001").reversed().to_string() == "100");
  CHECK((WeightString::parse("01") + WeightString::parse("1")).to_string() == "011");
  CHECK(a.slice(1, 2).to_string() == "11");
  CHECK(WeightString::parse("").size() == 0);
  CHECK_THROWS_AS(WeightString::parse("012"), Sl2Error);
  CHECK(WeightString::parse("01") < WeightString::parse("10"));
}

TEST_CASE("action on small tensors") {
  CHECK(act_E(x("1")) == x("0"));
  CHECK(act_E(x("00")).is_zero());
  CHECK(act_F(x("0")) == x("1"));
  CHECK(act_K(x("01")) == x("01"));
  CHECK(act_K(x("0")) == v * x("0"));
  // E x11 = x01 + v x10 under the coproduct E (x) 1 + K^-1 (x) E
  CHECK(act_E(x("11")) == x("01") + v * x("10"));
  CHECK(act_F(x("00")) == v * x("10") + x("01"));
}

TEST_CASE("representation relations up to n = 6") {
  const LaurentPoly c = v - v_inv;
  for (int n = 0; n <= 6; ++n)
    for (const auto& a : all_strings(n)) {
      const TensorVector y = TensorVector::basis(a);
      CHECK(act_K(act_E(y)) == LaurentPoly::monomial(2) * act_E(act_K(y)));
      CHECK(act_K(act_F(y)) == LaurentPoly::monomial(-2) * act_F(act_K(y)));
      CHECK(c * (act_E(act_F(y)) - act_F(act_E(y))) == act_K(y) - act_K_inverse(y));
    }
}

TEST_CASE("bar involution") {
  CHECK(quasi_r_coefficient() == v - v_inv);
  CHECK(bar_involution(x("000")) == x("000"));
  CHECK(bar_involution(x("01")) == x("01") + (v - v_inv) * x("10"));
  for (int n = 0; n <= 6; ++n)
    for (const auto& a : all_strings(n)) {
      const TensorVector y = TensorVector::basis(a);
      CHECK(bar_involution(bar_involution(y)) == y);
      // Psi intertwines E and F (both bar-invariant generators)
      CHECK(bar_involution(act_E(y)) == act_E(bar_involution(y)));
      CHECK(bar_involution(act_F(y)) == act_F(bar_involution(y)));
    }
  std::mt19937 rng(testing::kDefaultSeed);
  for (int trial = 0; trial < 50; ++trial) {
    const TensorVector y = random_vector(rng, 5);
    const LaurentPoly f = testing::random_laurent(rng);
    CHECK(bar_involution(f * y) == f.bar() * bar_involution(y));
    CHECK(bar_involution(bar_involution(y)) == y);
  }
}

TEST_CASE("canonical basis small cases") {
  auto one = canonical_basis(1);
  CHECK(one.element(WeightString::parse("0")) == x("0"));
  CHECK(one.element(WeightString::parse("1")) == x("1"));

  auto two = canonical_basis(2);
  int two_point = 0;
  for (const auto& b : two.elements) {
    if (b.terms().size() == 2) {
      ++two_point;
      CHECK(b.terms().count(WeightString::parse("01")));
      CHECK(b.terms().count(WeightString::parse("10")));
    } else {
      CHECK(b.terms().size() == 1);
    }
  }
  CHECK(two_point == 1);
  CHECK(two.element(WeightString::parse("01")) == x("01") + v * x("10"));

  auto zero = canonical_basis(0);
  REQUIRE(zero.elements.size() == 1);
  CHECK(zero.label[0] == 0);
  CHECK(zero.hi[0]);
  CHECK(zero.lo[0]);
}

TEST_CASE("canonical basis is bar-fixed and unitriangular up to n = 6") {
  for (int n = 0; n <= 6; ++n) {
    auto data = canonical_basis(n);
    auto below = bar_order(n);
    for (std::size_t i = 0; i < data.strings.size(); ++i) {
      const WeightString& a = data.strings[i];
      const TensorVector& b = data.elements[i];
      CHECK(bar_involution(b) == b);
      CHECK(b.coeff(a) == LaurentPoly(1));
      const auto& lower = below[a];
      for (const auto& [t, c] : b.terms()) {
        if (t == a) continue;
        CHECK(std::find(lower.begin(), lower.end(), t) != lower.end());
        CHECK(c.min_exponent() > 0);
        CHECK(position_key(t) < position_key(a));
      }
    }
  }
  auto four = canonical_basis(4);
  int weight_zero = 0;
  for (const auto& a : four.strings) weight_zero += a.weight() == 0;
  CHECK(weight_zero == 6);
}

TEST_CASE("partition against the character oracle up to n = 8") {
  for (int n = 0; n <= 8; ++n) {
    auto data = canonical_basis(n);
    auto sizes = data.partition_sizes();
    long long accounted = 0;
    for (int lambda = n % 2; lambda <= n; lambda += 2) {
      const long long mult = multiplicity(n, lambda);
      CHECK(static_cast<long long>(sizes[lambda]) == mult * (lambda + 1));
      const auto hi = data.cells(lambda, true);
      const auto lo = data.cells(lambda, false);
      CHECK(static_cast<long long>(hi.size()) == mult);
      CHECK(static_cast<long long>(lo.size()) == mult);
      accounted += static_cast<long long>(hi.size()) * (lambda + 1);
    }
    CHECK(accounted == (1LL << n));
    for (std::size_t i = 0; i < data.strings.size(); ++i)
      if (data.label[i] == 0) CHECK((data.hi[i] && data.lo[i]));
    CHECK(data.label[0] == n);  // all-zero string
    CHECK(data.hi[0]);
  }
  auto four = canonical_basis(4).partition_sizes();
  CHECK(four[4] == 5);
  CHECK(four[2] == 9);
  CHECK(four[0] == 2);
}

TEST_CASE("filtration and hi properties select the conventions") {
  for (int n = 1; n <= 6; ++n) {
    auto data = canonical_basis(n);
    CHECK(filtration_property(data).pass);
    CHECK(hi_property(data).pass);
  }
  for (Conventions c : {Conventions{HalfLattice::kPositive, Bracketing::kZeroOne},
                        Conventions{HalfLattice::kNegative, Bracketing::kOneZero},
                        Conventions{HalfLattice::kNegative, Bracketing::kZeroOne}}) {
    bool some_failure = false;
    for (int n = 2; n <= 4; ++n) some_failure |= !filtration_property(canonical_basis(n, c)).pass;
    CHECK(some_failure);
  }
}

TEST_CASE("hi and lo correspondence") {
  for (int n = 0; n <= 8; ++n)
    for (const auto& a : all_strings(n)) {
      auto br = bracket(a);
      if (!br.hi) continue;
      const WeightString lo = hi_to_lo(a);
      auto bl = bracket(lo);
      CHECK(bl.lo);
      CHECK(bl.lambda == br.lambda);
      CHECK(lo_to_hi(lo) == a);
    }
}

TEST_CASE("invariants and coinvariants") {
  CHECK(invariants_basis(2).size() == 1);
  CHECK(invariants_basis(3).empty());
  CHECK(invariants_basis(6).size() == 5);
  CHECK(invariants_basis(0).size() == 1);
  for (int n = 0; n <= 8; ++n) {
    auto inv = invariants_basis(n);
    auto coinv = coinvariants(n);
    const long long expected = n % 2 ? 0 : catalan(n / 2);
    CHECK(static_cast<long long>(inv.size()) == expected);
    CHECK(static_cast<long long>(coinv.dimension) == expected);
    CHECK(coinv.b0_basis);
    for (const auto& w : inv) {
      CHECK(act_E(w).is_zero());
      CHECK(act_F(w).is_zero());
      CHECK(act_K(w) == w);
    }
  }
  // the elimination route spans the same space
  for (int n = 2; n <= 6; n += 2) {
    auto a = invariants_basis(n);
    auto b = invariants_by_elimination(n);
    REQUIRE(a.size() == b.size());
    std::vector<SparseVector> both;
    for (const auto& w : a) both.push_back(as_sparse(w));
    for (const auto& w : b) both.push_back(as_sparse(w));
    CHECK(sparse_rank(both) == a.size());
  }
}

TEST_CASE("cup, cap and diagram invariants") {
  const TensorVector cup = cup_vector();
  CHECK(cup == x("01") - v_inv * x("10"));
  auto inv = invariants_basis(2);
  std::vector<SparseVector> pair{as_sparse(cup), as_sparse(inv[0])};
  CHECK(sparse_rank(pair) == 1);
  // zigzags: sum_q cup(p, q) cap(q, b) = [p = b] and sum_q cap(b, q) cup(q, p) = [p = b]
  for (int p = 0; p <= 1; ++p)
    for (int b = 0; b <= 1; ++b) {
      LaurentPoly left, right;
      for (int q = 0; q <= 1; ++q) {
        const LaurentPoly cpq = cup.coeff(WeightString(static_cast<std::uint32_t>(p << 1 | q), 2));
        const LaurentPoly cqp = cup.coeff(WeightString(static_cast<std::uint32_t>(q << 1 | p), 2));
        left = left + cpq * cap_value(q, b);
        right = right + cap_value(b, q) * cqp;
      }
      CHECK(left == LaurentPoly(p == b ? 1 : 0));
      CHECK(right == LaurentPoly(p == b ? 1 : 0));
    }
  CHECK(loop_value() == -(v + v_inv));

  CHECK(diagram_to_invariant(tl::Diagram(0, 2, {{1, 2}})) == cup);
  auto four = cup_diagram_basis(4);
  REQUIRE(four.size() == 2);
  CHECK(sparse_rank({as_sparse(four[0]), as_sparse(four[1])}) == 2);
  CHECK_THROWS_AS(cup_diagram_basis(3), Sl2Error);
  CHECK_THROWS_AS(diagram_to_invariant(tl::Diagram(2, 0, {{1, 2}})), Sl2Error);
  for (int n = 0; n <= 8; n += 2)
    CHECK(static_cast<long long>(cup_diagram_basis(n).size()) == catalan(n / 2));
}

TEST_CASE("dual canonical invariants and the basis comparison") {
  for (int n = 0; n <= 6; n += 2) {
    auto duals = dual_canonical_invariants(n);
    const auto& data = cached_canonical_basis(n);
    for (const auto& [beta, u] : duals) {
      CHECK(act_E(u).is_zero());
      CHECK(act_F(u).is_zero());
      for (const auto& [gamma, w] : duals)
        CHECK(rainbow_pairing(data.element(gamma), u) == LaurentPoly(beta == gamma ? 1 : 0));
    }
    // the pairing kills the relations, so it descends to coinvariants
    for (const auto& [beta, u] : duals)
      for (const auto& a : all_strings(n)) {
        CHECK(rainbow_pairing(act_E(TensorVector::basis(a)), u).is_zero());
        CHECK(rainbow_pairing(act_F(TensorVector::basis(a)), u).is_zero());
      }
  }
  CHECK(dual_canonical_invariants(0).size() == 1);
  for (int n : {2, 4, 6}) {
    auto cmp = compare_bases(n);
    CHECK(cmp.matched);
    CHECK(cmp.normalization == "direct");
    const auto& pairs = cmp.report["attempts"][0]["pairs"];
    CHECK(static_cast<long long>(pairs.size()) == catalan(n / 2));
  }
  CHECK_THROWS_AS(compare_bases(3), Sl2Error);
}

TEST_CASE("Hom spaces") {
  auto id = hom_space_basis(1, 1);
  REQUIRE(id.size() == 1);
  const auto c = id[0].entries.find({WeightString::parse("0"), WeightString::parse("0")});
  REQUIRE(c != id[0].entries.end());
  CHECK(c->second.is_unit());
  LinearMap scaled{1, 1, {}};
  for (const auto& a : all_strings(1)) scaled.add_entry(a, a, c->second);
  CHECK(scaled == id[0]);
  CHECK(hom_space_basis(2, 2).size() == 2);
  auto scalar = hom_space_basis(0, 0);
  REQUIRE(scalar.size() == 1);
  CHECK(scalar[0] == identity_map(0));
  for (int a = 0; a <= 12; ++a)
    for (int b = 0; a + b <= 12; ++b) {
      const auto basis = hom_space_basis(a, b);
      CHECK(basis.size() == tl::enumerate_diagrams(a, b).size());
    }
  CHECK(is_equivariant(identity_map(3)));
  auto f = hom_space_basis(2, 2)[0];
  CHECK(compose(f, identity_map(2)) == f);
  CHECK(star(star(f)) == f);
}

TEST_CASE("sl2 cell datum") {
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m) {
      if ((n + m) % 2) continue;
      auto c = counting_identity(n, m);
      CHECK(c.pass);
      CHECK(c.b0_count == static_cast<std::size_t>(catalan((n + m) / 2)));
    }
  auto c22 = counting_identity(2, 2);
  CHECK(c22.b0_count == 2);
  CHECK(c22.product_sum == 2);

  cellular::Verifier ver(build_sl2_cell_datum(3));
  CHECK(ver.cells(2, 0) == std::vector<std::string>{"10"});
  CHECK(ver.cells(2, 2) == std::vector<std::string>{"00"});
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) {
      CHECK(ver.verify_c1(n, m).pass);
      CHECK(ver.verify_c2(n, m).pass);
      for (int p = 0; p <= 3; ++p) CHECK(ver.verify_c3(p, n, m, false).pass);
    }
  // the C-images are module maps
  for (const auto& lm : ver.c_image(2, 2)) CHECK(is_equivariant(from_cell(lm.morphism)));

  cellular::Verifier reversed(
      cellular::with_order(build_sl2_cell_datum(2), cellular::Poset::chain({0, 1, 2}).reversed()));
  bool failed = false;
  for (int p = 0; p <= 2; ++p)
    for (int n = 0; n <= 2; ++n)
      for (int m = 0; m <= 2; ++m) failed |= !reversed.verify_c3(p, n, m, false).pass;
  CHECK(failed);

  auto order = ver.infer_cell_order();
  CHECK(order.acyclic);
  CHECK(order.consistent_with(cellular::Poset::chain({0, 1, 2, 3})));
  CHECK_THROWS_AS(block_labels(WeightString::parse("0011"), 2, 2), Sl2Error);
  auto f = block_labels(WeightString::parse("1100"), 2, 2);
  CHECK(f.lambda == 2);
  CHECK(f.first.to_string() == "00");
  CHECK(f.second.to_string() == "00");
}

TEST_CASE("JSON element format") {
  auto data = canonical_basis(2);
  auto j = element_json(data, WeightString::parse("01").bits());
  CHECK(j.dump() == R"({"leading":"01","terms":{"01":{"0":1},"10":{"1":1}},"lambda":2,"hi":false,"lo":false})");
  auto meta = conventions_json();
  CHECK(meta["half_lattice"] == "vZ[v]");
  CHECK(meta.contains("coproduct"));
}
