#include <doctest.h>

#include "cellcat/tl_datum.hpp"
#include "cellcat/verifier.hpp"

using namespace cellcat;
using namespace cellcat::cellular;

namespace {

const DeltaPoly kDelta = DeltaPoly::delta();

// Commutative toy host: End(0) with coordinate-wise product, one label per coordinate.
CellDatum diagonal_datum(std::vector<int> labels, Poset order) {
  CellDatum d;
  d.name = "diagonal";
  d.objects = {0};
  d.poset = std::move(order);
  d.cells = [](int, int) { return std::vector<std::string>{"*"}; };
  d.c_map = [](int lambda, int, std::size_t, int, std::size_t) {
    return Morphism{0, 0, {{static_cast<std::uint64_t>(lambda), LaurentPoly(1)}}};
  };
  d.host.compose = [](const Morphism& f, const Morphism& g) {
    Morphism out{0, 0, {}};
    for (const auto& [k, c] : f.coords) {
      auto it = g.coords.find(k);
      if (it != g.coords.end()) out.coords.emplace(k, c * it->second);
    }
    return out;
  };
  d.host.star = [](const Morphism& f) { return f; };
  d.host.ambient_basis = [labels](int, int) {
    std::vector<Morphism> out;
    for (int l : labels) out.push_back(Morphism{0, 0, {{static_cast<std::uint64_t>(l), LaurentPoly(1)}}});
    return out;
  };
  return d;
}

// Gram value computed straight from diagrams: star(T) then U is a multiple of
// the identity on lambda strands, plus terms with fewer strands.
DeltaPoly gram_by_diagrams(const tl::Diagram& t, const tl::Diagram& u) {
  auto prod = tl::compose(tl::star(tl::Morphism(t)), tl::Morphism(u));
  return prod.coeff(tl::Diagram::identity(t.m()));
}

}  // namespace

TEST_CASE("poset basics") {
  Poset chain = Poset::chain({0, 1, 2, 3});
  CHECK(chain.less(0, 3));
  CHECK_FALSE(chain.less(2, 2));
  CHECK(chain.is_order_ideal({0, 1}));
  CHECK_FALSE(chain.is_order_ideal({1}));
  CHECK(chain.down_closure({2}) == std::set<int>{0, 1, 2});
  CHECK(chain.covers().size() == 3);
  CHECK(chain.reversed().less(3, 0));
  CHECK_THROWS_AS(Poset({0, 1}, {{0, 1}, {1, 0}}), PosetError);
  Poset two_chains({0, 1, 2, 3, 4}, {{0, 2}, {2, 4}, {1, 3}});
  CHECK(two_chains.less(0, 4));
  CHECK_FALSE(two_chains.leq(1, 2));
  CHECK(two_chains.describe() == "0<2, 1<3, 2<4");
}

TEST_CASE("TL datum satisfies C-1, C-2, C-3 for objects up to 3") {
  Verifier ver(tl_cell_datum(3));
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) {
      auto c1 = ver.verify_c1(n, m);
      CHECK(c1.pass);
      CHECK(c1.cardinality == c1.dimension);
      CHECK(ver.verify_c2(n, m).pass);
      for (int p = 0; p <= 3; ++p) CHECK(ver.verify_c3(p, n, m, false).pass);
    }
}

TEST_CASE("reversed order on TL produces a C-3 witness") {
  Verifier ver(with_order(tl_cell_datum(2), Poset::chain({0, 1, 2}).reversed()));
  bool failed = false;
  json witness;
  for (int p = 0; p <= 2 && !failed; ++p)
    for (int n = 0; n <= 2 && !failed; ++n)
      for (int m = 0; m <= 2 && !failed; ++m) {
        auto r = ver.verify_c3(p, n, m, false);
        if (!r.pass) {
          failed = true;
          witness = r.witness;
        }
      }
  REQUIRE(failed);
  CHECK(witness["condition"].get<std::string>().rfind("(i)", 0) == 0);
}

TEST_CASE("identity in place of star fails C-2") {
  CellDatum d = tl_cell_datum(3);
  d.host.star = [](const Morphism& f) { return Morphism{f.target, f.source, f.coords}; };
  Verifier ver(d);
  CHECK(ver.verify_c2(2, 2).pass);  // every cell of End(2) has S = T
  auto r = ver.verify_c2(3, 3);
  CHECK_FALSE(r.pass);
  CHECK(r.witness.contains("cell"));
}

TEST_CASE("trivial and semisimple toy data") {
  Verifier trivial(diagonal_datum({0}, Poset::chain({0})));
  CHECK(trivial.verify_c1(0, 0).pass);
  CHECK(trivial.verify_c2(0, 0).pass);
  CHECK(trivial.verify_c3(0, 0, 0).pass);

  Verifier split(diagonal_datum({0, 1, 2}, Poset::discrete({0, 1, 2})));
  CHECK(split.verify_c3(0, 0, 0).pass);
  auto order = split.infer_cell_order();
  CHECK(order.acyclic);
  CHECK(order.leakage.empty());
  CHECK(order.covers.empty());
}

TEST_CASE("Gram form of TL") {
  Verifier ver(tl_cell_datum(4));
  auto g = ver.bilinear_form(3, 1);
  CHECK(g.independent);
  CHECK(g.symmetric);
  REQUIRE(g.matrix.size() == 2);
  CHECK(g.matrix[0][0] == kDelta);
  CHECK(g.matrix[0][1] == DeltaPoly(1));
  CHECK(g.matrix[1][0] == DeltaPoly(1));
  CHECK(g.matrix[1][1] == kDelta);
  DeltaPoly det = gram_determinant(g);
  CHECK(det == kDelta * kDelta - DeltaPoly(1));
  CHECK(det.evaluate(1) == 0);

  for (int n = 0; n <= 4; ++n)
    for (int lambda = n % 2; lambda <= n; lambda += 2) {
      auto form = ver.bilinear_form(n, lambda);
      auto halves = tl::half_diagrams(n, lambda);
      REQUIRE(form.matrix.size() == halves.size());
      for (std::size_t i = 0; i < halves.size(); ++i)
        for (std::size_t j = 0; j < halves.size(); ++j)
          CHECK(form.matrix[i][j] == gram_by_diagrams(halves[i], halves[j]));
    }
}

TEST_CASE("cell modules and ideals of TL") {
  Verifier ver(tl_cell_datum(4));
  for (int n = 0; n <= 4; ++n)
    for (int lambda = n % 2; lambda <= n; lambda += 2) {
      auto cm = ver.cell_module(n, lambda);
      CHECK(cm.multiplicative);
      CHECK(cm.action.size() == ver.c_image(n, n).size());
    }
  auto ideal = ver.ideal_span({0, 1}, 2, 2);
  CHECK(ideal.two_sided);
  CHECK(ideal.basis.size() == 1);
  CHECK_THROWS_AS(ver.ideal_span({2}, 2, 2), PosetError);
}

TEST_CASE("inferred TL order") {
  Verifier ver(tl_cell_datum(4));
  auto order = ver.infer_cell_order();
  CHECK(order.acyclic);
  for (auto [from, to] : order.leakage) {
    CHECK(from > to);
    CHECK((from - to) % 2 == 0);
  }
  CHECK(order.consistent_with(Poset::chain({0, 1, 2, 3, 4})));
  CHECK_FALSE(order.consistent_with(Poset::chain({0, 1, 2, 3, 4}).reversed()));
  REQUIRE(order.order);
  CHECK(order.order->describe() == "0<2, 1<3, 2<4");
}

TEST_CASE("rho functor on TL") {
  Verifier ver(tl_cell_datum(4));
  auto rho = ver.rho_functor(2, {0});
  CHECK(rho.closed);
  CHECK(rho.equivariant);
  CHECK(rho.functorial);
  const RhoModule& at2 = rho.modules[2];
  REQUIRE(at2.basis.size() == 1);
  const auto& ends = ver.c_image(2, 2);
  for (std::size_t a = 0; a < ends.size(); ++a) {
    // e_1 = C^0(cap, cap) acts by delta, the identity by 1
    DeltaPoly expected = ends[a].label.lambda == 0 ? kDelta : DeltaPoly(1);
    CHECK(at2.action[a][0][0] == expected);
  }
  for (int n = 0; n <= 4; ++n) {
    std::vector<std::set<int>> ideals;
    std::set<int> acc;
    for (int l = 0; l <= 4; ++l) ideals.push_back(acc = (acc.insert(l), acc));
    for (std::size_t i = 0; i + 1 < ideals.size(); ++i) CHECK(ver.rho_naturality(n, ideals[i], ideals[i + 1]).pass);
  }
}

TEST_CASE("tensoring with one strand is a cellular functor") {
  auto coords = std::make_shared<TLCoordinates>();
  Verifier source(tl_cell_datum(3, coords));
  Verifier target(tl_cell_datum(4, coords));
  auto on_morphisms = [coords](const Morphism& f) {
    return coords->to_cell(tl::tensor(coords->to_tl(f), tl::Morphism(tl::Diagram::identity(1))));
  };
  auto report = verify_cellular_functor([](int n) { return n + 1; }, on_morphisms,
                                        [](int l) { return l + 1; }, source, target);
  CHECK(report.pass);
  CHECK(report.checked > 0);
  auto collapsed = verify_cellular_functor([](int n) { return n + 1; }, on_morphisms,
                                           [](int) { return 0; }, source, target);
  CHECK_FALSE(collapsed.pass);
}
