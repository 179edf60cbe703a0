#include <doctest.h>

#include "cellcat/tl_diagram.hpp"
#include "test_support.hpp"

#include <random>
#include <set>

using namespace cellcat;
using namespace cellcat::tl;

namespace {

// Independent oracle: C_{k+1} = sum_{i=0}^{k} C_i C_{k-i}.
long long catalan_recurrence(int k) {
  std::vector<long long> c(static_cast<std::size_t>(k) + 1, 0);
  c[0] = 1;
  for (int j = 1; j <= k; ++j)
    for (int i = 0; i < j; ++i) c[j] += c[i] * c[j - 1 - i];
  return c[k];
}

const DeltaPoly kDelta = DeltaPoly::delta();

Diagram cup() { return Diagram(0, 2, {{1, 2}}); }
Diagram cap() { return Diagram(2, 0, {{1, 2}}); }

Diagram random_diagram(std::mt19937& rng, int n, int m) {
  auto all = enumerate_diagrams(n, m);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

}  // namespace

TEST_CASE("diagram validation") {
  CHECK_THROWS_AS(Diagram(2, 2, {{1, 3}, {2, 4}}), DiagramError);  // crossing
  CHECK_THROWS_AS(Diagram(1, 2, {{1, 2}}), DiagramError);          // odd
  CHECK_THROWS_AS(Diagram(2, 0, {{1, 1}}), DiagramError);
  CHECK_NOTHROW(Diagram(2, 2, {{1, 4}, {2, 3}}));
  CHECK(Diagram::identity(2) == Diagram(2, 2, {{1, 4}, {2, 3}}));
}

TEST_CASE("enumerate_diagrams") {
  CHECK(enumerate_diagrams(0, 0).size() == 1);
  auto end2 = enumerate_diagrams(2, 2);
  REQUIRE(end2.size() == 2);
  CHECK(std::set<Diagram>(end2.begin(), end2.end()) ==
        std::set<Diagram>{Diagram::identity(2), generator_e_diagram(2, 1)});
  CHECK(enumerate_diagrams(3, 2).empty());
  for (int n = 0; n <= 12; ++n)
    for (int m = 0; n + m <= 12; ++m) {
      auto ds = enumerate_diagrams(n, m);
      std::set<Diagram> unique(ds.begin(), ds.end());
      CHECK(unique.size() == ds.size());
      const long long expected = (n + m) % 2 ? 0 : catalan_recurrence((n + m) / 2);
      CHECK(static_cast<long long>(ds.size()) == expected);
    }
}

TEST_CASE("compose examples") {
  const Morphism e1 = generator_e(2, 1);
  CHECK(compose(e1, e1) == kDelta * e1);
  auto d = enumerate_diagrams(3, 5)[3];
  CHECK(compose(Morphism(Diagram::identity(3)), Morphism(d)) == Morphism(d));
  CHECK(compose(Morphism(d), Morphism(Diagram::identity(5))) == Morphism(d));
  CHECK(compose(Morphism(cup()), Morphism(cap())) == kDelta * Morphism(Diagram(0, 0, {})));
  CHECK_THROWS_AS(compose(Morphism(cup()), Morphism(cup())), DiagramError);
}

TEST_CASE("tensor examples") {
  CHECK(tensor(Morphism(Diagram::identity(1)), Morphism(Diagram::identity(1))) == Morphism(Diagram::identity(2)));
  auto d = enumerate_diagrams(2, 4)[1];
  CHECK(tensor(Morphism(Diagram(0, 0, {})), Morphism(d)) == Morphism(d));
  CHECK(tensor(cup(), cup()) == Diagram(0, 4, {{1, 2}, {3, 4}}));
}

TEST_CASE("star examples") {
  CHECK(star(generator_e(2, 1)) == generator_e(2, 1));
  CHECK(star(cup()) == cap());
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m)
      for (const auto& d : enumerate_diagrams(n, m)) CHECK(star(star(d)) == d);
}

TEST_CASE("generator_e") {
  CHECK(generator_e_diagram(2, 1) == Diagram(2, 2, {{1, 2}, {3, 4}}));
  CHECK(generator_e_diagram(3, 2) == Diagram(3, 3, {{1, 6}, {2, 3}, {4, 5}}));
  CHECK_THROWS_AS(generator_e(2, 2), DiagramError);
  CHECK_THROWS_AS(generator_e(2, 0), DiagramError);
}

TEST_CASE("through_strands") {
  for (int n = 0; n <= 5; ++n) CHECK(through_strands(Diagram::identity(n)) == n);
  CHECK(through_strands(generator_e_diagram(2, 1)) == 0);
  CHECK(through_strands(cup()) == 0);
  for (int n = 0; n <= 5; ++n)
    for (int m = 0; m <= 5; ++m)
      for (const auto& d : enumerate_diagrams(n, m)) {
        CHECK(through_strands(d) % 2 == n % 2);
        CHECK(through_strands(d) % 2 == m % 2);
      }
}

TEST_CASE("factor_through") {
  auto f = factor_through(Diagram::identity(2));
  CHECK(f.first == Diagram::identity(2));
  CHECK(f.second == Diagram::identity(2));
  auto g = factor_through(generator_e_diagram(2, 1));
  CHECK(g.first == cap());
  CHECK(g.second == cap());
  const Diagram d(4, 2, {{1, 6}, {2, 3}, {4, 5}});
  auto h = factor_through(d);
  CHECK(h.first == d);
  CHECK(h.second == Diagram::identity(2));

  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m <= 6; ++m) {
      std::size_t count = 0;
      for (int t = 0; t <= std::min(n, m); ++t) count += half_diagrams(n, t).size() * half_diagrams(m, t).size();
      CHECK(count == enumerate_diagrams(n, m).size());
      for (const auto& x : enumerate_diagrams(n, m)) {
        auto fac = factor_through(x);
        CHECK(is_half_diagram(fac.first));
        CHECK(is_half_diagram(fac.second));
        CHECK(compose(Morphism(fac.first), star(Morphism(fac.second))) == Morphism(x));
      }
    }
}

TEST_CASE("Temperley-Lieb relations for n <= 6") {
  for (int n = 2; n <= 6; ++n)
    for (int i = 1; i < n; ++i) {
      const Morphism ei = generator_e(n, i);
      CHECK(compose(ei, ei) == kDelta * ei);
      for (int j = 1; j < n; ++j) {
        const Morphism ej = generator_e(n, j);
        if (std::abs(i - j) == 1) CHECK(compose(compose(ei, ej), ei) == ei);
        if (std::abs(i - j) >= 2) CHECK(compose(ei, ej) == compose(ej, ei));
      }
    }
}

TEST_CASE("category laws on random diagrams") {
  std::mt19937 rng(cellcat::testing::kDefaultSeed);
  std::uniform_int_distribution<int> obj(0, 5);
  int checked = 0;
  while (checked < 200) {
    const int n = obj(rng), m = obj(rng), p = obj(rng), q = obj(rng);
    if ((n + m) % 2 || (m + p) % 2 || (p + q) % 2) continue;
    ++checked;
    const Morphism f(random_diagram(rng, n, m));
    const Morphism g(random_diagram(rng, m, p));
    const Morphism h(random_diagram(rng, p, q));
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    CHECK(star(compose(f, g)) == compose(star(g), star(f)));
    // interchange law with a second column
    const int n2 = obj(rng) % 3, m2 = (n2 % 2) + 2 * (obj(rng) % 2), p2 = n2 % 2;
    const Morphism f2(random_diagram(rng, n2, m2));
    const Morphism g2(random_diagram(rng, m2, p2));
    CHECK(compose(tensor(f, f2), tensor(g, g2)) == tensor(compose(f, g), compose(f2, g2)));
  }
}

TEST_CASE("half_diagrams counts") {
  CHECK(half_diagrams(2, 0).size() == 1);
  CHECK(half_diagrams(4, 0).size() == 2);
  CHECK(half_diagrams(3, 1).size() == 2);
  for (int n = 0; n <= 6; ++n) {
    auto k = half_diagrams(n, n);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == Diagram::identity(n));
  }
}
