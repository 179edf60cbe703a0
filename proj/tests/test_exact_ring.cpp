#include <doctest.h>

#include "cellcat/delta_poly.hpp"
#include "cellcat/laurent_poly.hpp"
#include "cellcat/linear_algebra.hpp"
#include "cellcat/rational_function.hpp"
#include "test_support.hpp"

using namespace cellcat;
using cellcat::testing::delta_lp;

namespace {
LaurentPoly v(int k = 1, long c = 1) { return LaurentPoly::monomial(k, c); }
}  // namespace

TEST_CASE("lp_add") {
  CHECK(lp_add(v(1), v(-1)).to_string() == "v + v^-1");
  LaurentPoly p = v(3, 2) - v(-2);
  CHECK(lp_add(p, LaurentPoly{}) == p);
  CHECK(lp_add(v(1) - LaurentPoly(1), LaurentPoly(1) - v(1)).is_zero());
  CHECK(lp_add(v(1) - LaurentPoly(1), LaurentPoly(1) - v(1)).terms().empty());
}

TEST_CASE("lp_mul") {
  CHECK(lp_mul(delta_lp(), delta_lp()) == v(2) + LaurentPoly(2) + v(-2));
  LaurentPoly p = v(3, 2) - v(-2) + LaurentPoly(7);
  CHECK(lp_mul(p, 1) == p);
  CHECK(lp_mul(v(1) - v(-1), delta_lp()) == v(2) - v(-2));
}

TEST_CASE("lp_bar and bar symmetry") {
  CHECK(lp_bar(v(1)) == v(-1));
  CHECK(lp_bar(delta_lp()) == delta_lp());
  CHECK(lp_bar(v(2, 3) - v(-1)) == v(-2, 3) - v(1));
  CHECK(lp_is_bar_symmetric(delta_lp()));
  CHECK_FALSE(lp_is_bar_symmetric(v(1)));
  CHECK(lp_is_bar_symmetric(LaurentPoly{}));
}

TEST_CASE("delta_embed and delta_retract") {
  CHECK(delta_embed(DeltaPoly::delta()) == delta_lp());
  CHECK(delta_embed(DeltaPoly(1)) == LaurentPoly(1));
  CHECK(delta_embed(DeltaPoly::delta() * DeltaPoly::delta()) == v(2) + LaurentPoly(2) + v(-2));
  CHECK(delta_retract(delta_lp()) == DeltaPoly::delta());
  CHECK(delta_retract(v(2) + LaurentPoly(1) + v(-2)) == DeltaPoly::delta() * DeltaPoly::delta() - DeltaPoly(1));
  CHECK_THROWS_AS(delta_retract(v(1)), RingError);
  CHECK(delta_retract(LaurentPoly{}).is_zero());
  CHECK((DeltaPoly::delta() * DeltaPoly::delta() - DeltaPoly(1)).to_string() == "δ^2 - 1");
}

TEST_CASE("quantum_int") {
  CHECK(quantum_int(1) == LaurentPoly(1));
  CHECK(quantum_int(2) == delta_lp());
  CHECK(quantum_int(0).is_zero());
  CHECK(quantum_int(-3) == -quantum_int(3));
  // (v - v^-1) [n] = v^n - v^-n, an independent check of the closed form
  for (int n = -6; n <= 6; ++n) CHECK((v(1) - v(-1)) * quantum_int(n) == v(n) - v(-n));
  for (int m = 1; m <= 20; ++m) CHECK(quantum_int(m + 1) == delta_lp() * quantum_int(m) - quantum_int(m - 1));
}

TEST_CASE("ring properties on random inputs") {
  std::mt19937 rng(cellcat::testing::kDefaultSeed);
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentPoly a = cellcat::testing::random_laurent(rng);
    const LaurentPoly b = cellcat::testing::random_laurent(rng);
    CHECK(lp_bar(lp_bar(a)) == a);
    CHECK(lp_bar(a * b) == lp_bar(a) * lp_bar(b));
    CHECK(a * b == b * a);
    const DeltaPoly d = cellcat::testing::random_delta(rng);
    CHECK(delta_retract(delta_embed(d)) == d);
    CHECK(lp_is_bar_symmetric(delta_embed(d)));
    // symmetric combinations of v^k + v^-k and 1 round-trip
    const LaurentPoly sym = a + lp_bar(a);
    CHECK(delta_embed(delta_retract(sym)) == sym);
    if (!b.is_zero()) {
      auto q = exact_divide(a * b, b);
      REQUIRE(q);
      CHECK(*q == a);
    }
  }
}

TEST_CASE("exact division and gcd") {
  CHECK_FALSE(exact_divide(v(1) + LaurentPoly(1), v(1) - LaurentPoly(1)));
  CHECK(*exact_divide(v(2) - v(-2), v(1) - v(-1)) == delta_lp());
  CHECK_THROWS_AS(exact_divide(v(1), LaurentPoly{}), RingError);
  const LaurentPoly g = gcd((v(1) + LaurentPoly(1)) * (v(2) - LaurentPoly(3)) * LaurentPoly(6),
                            (v(1) + LaurentPoly(1)) * v(-4, 4));
  CHECK(g == (v(1) + LaurentPoly(1)) * LaurentPoly(2));
}

TEST_CASE("rational functions reduce") {
  RationalFunction r(v(2) - v(-2), (v(1) - v(-1)) * v(3));
  REQUIRE(r.as_laurent());
  CHECK(*r.as_laurent() == delta_lp().shifted(-3));
  RationalFunction half(LaurentPoly(1), LaurentPoly(2));
  CHECK_FALSE(half.as_laurent());
  CHECK((half + half) == RationalFunction(1));
  CHECK((RationalFunction(delta_lp()) / RationalFunction(delta_lp())) == RationalFunction(1));
}

TEST_CASE("Bareiss rank, determinant and nullspace") {
  const LaurentPoly d = delta_lp();
  LaurentMatrix gram = {{d, 1}, {1, d}};
  CHECK(determinant(gram) == d * d - LaurentPoly(1));
  LaurentMatrix singular = {{v(1), v(2)}, {LaurentPoly(1), v(1)}};
  CHECK(rank(singular) == 1);
  CHECK(determinant(singular).is_zero());
  auto ker = nullspace(singular, 2);
  REQUIRE(ker.size() == 1);
  CHECK(singular[0][0] * ker[0][0] + singular[0][1] * ker[0][1] == LaurentPoly{});
  LaurentMatrix three = {{d, 1, 0}, {1, d, 1}, {0, 1, d}};
  CHECK(determinant(three) == d * d * d - d - d);
}

TEST_CASE("SpanExpander recovers coordinates") {
  const LaurentPoly d = delta_lp();
  SparseVector a{{0, d}, {1, 1}};
  SparseVector b{{0, 1}, {1, d}, {5, v(2)}};
  SpanExpander ex({a, b});
  REQUIRE(ex.independent());
  SparseVector y;
  add_scaled(y, a, v(3));
  add_scaled(y, b, LaurentPoly(-2));
  auto e = ex.expand(y);
  REQUIRE(e.in_span);
  CHECK(e.coeffs[0] == RationalFunction(v(3)));
  CHECK(e.coeffs[1] == RationalFunction(-2));
  SparseVector outside{{7, 1}};
  CHECK_FALSE(ex.expand(outside).in_span);
}
