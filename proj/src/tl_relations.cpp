#include "cellcat/tl_relations.hpp"

#include "cellcat/json_io.hpp"

#include <cstdlib>
#include <random>
#include <string>

namespace cellcat::tl {

namespace {

const DeltaPoly kDelta = DeltaPoly::delta();

void record(RelationReport& r, bool ok, const std::string& identity, int n, const Morphism& lhs,
            const Morphism& rhs) {
  ++r.checked;
  if (ok || !r.pass) return;
  r.pass = false;
  r.witness = {{"identity", identity}, {"n", n}, {"lhs", io::to_json(lhs)}, {"rhs", io::to_json(rhs)}};
}

Diagram pick(std::mt19937_64& rng, int n, int m) {
  const auto all = enumerate_diagrams(n, m);
  std::uniform_int_distribution<std::size_t> d(0, all.size() - 1);
  return all[d(rng)];
}

}  // namespace

RelationReport check_relations(int max_n) {
  RelationReport r;
  r.max_n = max_n;
  for (int n = 2; n <= max_n; ++n)
    for (int i = 1; i < n; ++i) {
      const Morphism ei = generator_e(n, i);
      const Morphism sq = compose(ei, ei), rhs = kDelta * ei;
      record(r, sq == rhs, "e" + std::to_string(i) + "^2 = delta e" + std::to_string(i), n, sq, rhs);
      for (int j = 1; j < n; ++j) {
        const Morphism ej = generator_e(n, j);
        const std::string si = "e" + std::to_string(i), sj = "e" + std::to_string(j);
        if (std::abs(i - j) == 1) {
          const Morphism l = compose(compose(ei, ej), ei);
          record(r, l == ei, si + " " + sj + " " + si + " = " + si, n, l, ei);
        } else if (std::abs(i - j) >= 2) {
          const Morphism l = compose(ei, ej), rr = compose(ej, ei);
          record(r, l == rr, si + " " + sj + " = " + sj + " " + si, n, l, rr);
        }
      }
    }
  return r;
}

RelationReport check_category_laws(int max_n, std::uint64_t seed, int samples) {
  RelationReport r;
  r.max_n = max_n;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> obj(0, max_n);
  for (int done = 0; done < samples;) {
    const int n = obj(rng), m = obj(rng), p = obj(rng), q = obj(rng);
    if ((n + m) % 2 || (m + p) % 2 || (p + q) % 2) continue;
    ++done;
    const Morphism f(pick(rng, n, m)), g(pick(rng, m, p)), h(pick(rng, p, q));
    const Morphism a = compose(compose(f, g), h), b = compose(f, compose(g, h));
    record(r, a == b, "(f g) h = f (g h)", n, a, b);
    const Morphism s = star(compose(f, g)), t = compose(star(g), star(f));
    record(r, s == t, "star(f g) = star(g) star(f)", n, s, t);
    const int n2 = obj(rng) % 3, m2 = n2 % 2 + 2 * (obj(rng) % 2), p2 = n2 % 2;
    const Morphism f2(pick(rng, n2, m2)), g2(pick(rng, m2, p2));
    const Morphism x = compose(tensor(f, f2), tensor(g, g2)), y = tensor(compose(f, g), compose(f2, g2));
    record(r, x == y, "(f (x) f2)(g (x) g2) = (f g) (x) (f2 g2)", n, x, y);
  }
  return r;
}

}  // namespace cellcat::tl
