#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "camonoid/errors.hpp"
#include "camonoid/instance.hpp"
#include "oracles.hpp"

using namespace camonoid;

TEST_CASE("action") {
  const ConfigSpace klein(parse_group_spec("cyclic:2xcyclic:2"), 2);
  CHECK(klein.size() == 16);
  for (Code x = 0; x < klein.size(); ++x) CHECK(klein.act(x, 0) == x);
  for (unsigned k = 0; k < 2; ++k) {
    for (Element g = 0; g < 4; ++g) {
      CHECK(klein.act(klein.constant(k), g) == klein.constant(k));
    }
  }
  // Columns (1 0 / 1 0) and (0 1 / 0 1) swap under (0, 1).
  CHECK(klein.act(5, 1) == 10);
  CHECK(klein.act(10, 1) == 5);
  CHECK(klein.render_matrix(5) == "1 0\n1 0");
  CHECK(klein.render(5) == "1010");

  const ConfigSpace c3(parse_group_spec("cyclic:3"), 3);
  CHECK(c3.digit(5, 0) == 2);
  CHECK(c3.digit(5, 1) == 1);
  CHECK(c3.with_digit(5, 2, 2) == 23);
  CHECK(c3.render(5) == "210");
}

TEST_CASE("stabilizers") {
  const auto g = parse_group_spec("cyclic:2xcyclic:2");
  const ConfigSpace s(g, 2);
  CHECK(s.stabilizer(0) == g.whole());
  CHECK(s.stabilizer(15) == g.whole());
  // The indicator of H has stabilizer H.
  for (const auto& h : enumerate_subgroups(g)) {
    Code x = 0;
    for (Element e : h.members()) x = s.with_digit(x, e, 1);
    CHECK(s.stabilizer(x) == h);
  }
  CHECK(s.stabilizer(1) == g.trivial());
  CHECK(s.stabilizer(7) == g.trivial());
}

TEST_CASE("fix counts") {
  const auto g = parse_group_spec("cyclic:2xcyclic:2");
  const ConfigSpace s(g, 2);
  CHECK(s.fix_count(g.whole()) == 2);
  CHECK(s.fix_count(g.trivial()) == 16);
  for (const auto& h : enumerate_subgroups(g)) {
    const auto fixed = s.fixed_codes(h);
    CHECK(fixed.size() == s.fix_count(h));
    std::size_t direct = 0;
    for (Code x = 0; x < s.size(); ++x) {
      direct += h.is_subset_of(s.stabilizer(x));
    }
    CHECK(direct == s.fix_count(h));
    if (h.order() == 2) CHECK(s.fix_count(h) == 4);
  }
}

TEST_CASE("orbit tables") {
  const Instance klein(parse_group_spec("cyclic:2xcyclic:2"), 2);
  const auto& t = klein.orbits;
  CHECK(t.orbit_count() == 7);
  CHECK(t.sorted_sizes() == std::vector<std::size_t>{1, 1, 2, 2, 2, 4, 4});
  CHECK(t.alpha == std::vector<std::size_t>{2, 1, 1, 1, 2});
  CHECK(t.reps == std::vector<Code>{0, 1, 3, 5, 6, 7, 15});
  CHECK(orbit_of(klein.space, 5) == std::vector<Code>{5, 10});

  const Instance c2(parse_group_spec("cyclic:2"), 2);
  CHECK(c2.orbits.orbit_count() == 3);
  const Instance c3(parse_group_spec("cyclic:3"), 2);
  CHECK(c3.orbits.orbit_count() == 4);
  CHECK(c3.orbits.alpha == std::vector<std::size_t>{2, 2});
}

TEST_CASE("space guard") {
  const auto g = parse_group_spec("cyclic:17");
  CHECK_THROWS_AS(ConfigSpace(g, 2), SpaceTooLarge);
  CHECK_THROWS_AS(ConfigSpace(parse_group_spec("cyclic:2"), 0), InputError);
  CHECK_NOTHROW(ConfigSpace(parse_group_spec("cyclic:16"), 2));
}

TEST_CASE("orbits against direct enumeration on the corpus") {
  for (const auto& name : oracle::corpus()) {
    for (unsigned q : {2u, 3u}) {
      CAPTURE(name);
      CAPTURE(q);
      const auto g = oracle::corpus_group(name);
      if (oracle::space_size(g.order(), q) > 65536 ||
          oracle::space_size(g.order(), q) == 0) {
        continue;
      }
      const Instance inst(g, q);
      const auto& s = inst.space;
      const auto& t = inst.orbits;
      // Action table against the definition, sampled on every code.
      for (Code x = 0; x < s.size(); x += 1 + s.size() / 512) {
        for (Element a = 0; a < g.order(); ++a) {
          REQUIRE(s.act(x, a) == oracle::act(g, q, x, a));
        }
        CHECK(s.stabilizer(x).bits() == oracle::stabilizer(g, q, x));
        for (Element a = 0; a < g.order(); ++a) {
          CHECK(s.stabilizer(s.act(x, a)) == g.conjugate(s.stabilizer(x), a));
        }
      }
      const auto direct = oracle::orbits(g, q);
      REQUIRE(direct.size() == t.orbit_count());
      std::uint64_t product = 1;
      std::size_t covered = 0;
      for (std::size_t o = 0; o < direct.size(); ++o) {
        CHECK(direct[o].front() == t.reps[o]);
        CHECK(direct[o].size() == t.orbit_size[o]);
        CHECK(t.orbit_size[o] * t.stab[o].order() == g.order());
        for (Code y : direct[o]) CHECK(t.orbit_id[y] == o);
        product *= s.fix_count(t.stab[o]);
        covered += direct[o].size();
      }
      CHECK(covered == s.size());
      CHECK(t.alpha[0] == q);

      std::size_t total = 0;
      for (std::size_t i = 0; i < inst.lattice.size(); ++i) {
        const auto& h = inst.lattice.classes[i].rep;
        total += t.alpha[i] * (g.order() / h.order());
        if (g.is_abelian()) {
          std::size_t exact = 0;
          for (Code x = 0; x < s.size(); ++x) exact += s.stabilizer(x) == h;
          CHECK(g.order() * t.alpha[i] == h.order() * exact);
        }
      }
      CHECK(total == s.size());
      // prod fix_count = q^(q^n), checked when it fits.
      if (s.size() * std::log2(q) < 63) {
        std::uint64_t expect = 1;
        for (std::size_t i = 0; i < s.size(); ++i) expect *= q;
        CHECK(product == expect);
      }
    }
  }
}
