#include <doctest.h>

#include "camonoid/ca_engine.hpp"
#include "camonoid/closure_oracle.hpp"
#include "camonoid/ica_structure.hpp"
#include "oracles.hpp"

using namespace camonoid;

TEST_CASE("Klein decomposition") {
  const Instance inst(parse_group_spec("cyclic:2xcyclic:2"), 2);
  const auto d = ica_decomposition(inst);
  REQUIRE(d.factors.size() == 5);
  CHECK(d.factors[0].centralizer_order == 1);
  CHECK(d.factors[0].alpha == 2);
  for (std::size_t i = 1; i <= 3; ++i) {
    CHECK(d.factors[i].centralizer_order == 2);
    CHECK(d.factors[i].alpha == 1);
    CHECK(d.factors[i].centralizer_label == "Z2");
  }
  CHECK(d.factors[4].centralizer_order == 4);
  CHECK(d.factors[4].centralizer_label == "Z2xZ2");
  CHECK(d.total_order == 512);
  CHECK(d.structure() == "(1 wr S2) x (Z2 wr S1)^3 x (Z2xZ2 wr S2)");
  CHECK(d.simplified() == "(Z2)^4 x (Z2xZ2 wr S2)");
}

TEST_CASE("small decompositions") {
  const Instance c2(parse_group_spec("cyclic:2"), 2);
  const auto d2 = ica_decomposition(c2);
  CHECK(d2.total_order == 4);
  CHECK(d2.simplified() == "(Z2)^2");

  const Instance c3(parse_group_spec("cyclic:3"), 2);
  CHECK(ica_decomposition(c3).total_order == 36);
  CHECK(ica_decomposition(c3).simplified() == "Z2 x (Z3 wr S2)");

  const Instance c2q3(parse_group_spec("cyclic:2"), 3);
  CHECK(ica_decomposition(c2q3).simplified() == "S3 x (Z2 wr S3)");

  const Instance trivial(parse_group_spec("cyclic:1"), 3);
  CHECK(ica_decomposition(trivial).total_order == 6);
}

TEST_CASE("orbit centralizers") {
  const Instance klein(parse_group_spec("cyclic:2xcyclic:2"), 2);
  CHECK(orbit_centralizer(klein, 0).order == 1);
  for (std::size_t o = 0; o < klein.orbits.orbit_count(); ++o) {
    const auto c = orbit_centralizer(klein, o);
    CHECK(c.order == 4 / klein.orbits.stab[o].order());
    CHECK(c.order == c.normalizer_quotient);
    // Abelian: every point of the orbit has the same stabilizer.
    CHECK(c.pointwise_stab == klein.orbits.stab[o]);
  }

  const Instance s3(oracle::corpus_group("s3"), 2);
  for (std::size_t o = 0; o < s3.orbits.orbit_count(); ++o) {
    const auto c = orbit_centralizer(s3, o);
    CHECK(c.order == c.normalizer_quotient);
    if (s3.orbits.stab[o].order() == 1) CHECK(c.order == 6);
    if (s3.orbits.stab[o].order() == 2) {
      CHECK(c.order == 1);
      CHECK(c.pointwise_stab.order() == 1);
    }
  }
}

TEST_CASE("quotient invariants") {
  const auto g = parse_group_spec("cyclic:2xcyclic:4");
  const auto inv = normalizer_quotient_invariants(g, g.trivial());
  REQUIRE(inv);
  CHECK(*inv == std::vector<std::size_t>{2, 4});
  CHECK(abelian_label(*inv) == "Z2xZ4");

  const auto c6 = parse_group_spec("cyclic:6");
  CHECK(*normalizer_quotient_invariants(c6, c6.trivial()) ==
        std::vector<std::size_t>{6});
  CHECK(normalizer_quotient_invariants(c6, c6.whole())->empty());

  const auto c3c3 = parse_group_spec("cyclic:3xcyclic:3");
  CHECK(*normalizer_quotient_invariants(c3c3, c3c3.trivial()) ==
        std::vector<std::size_t>{3, 3});

  const auto s3 = oracle::corpus_group("s3");
  CHECK_FALSE(normalizer_quotient_invariants(s3, s3.trivial()));
  const Element rot[] = {3};
  const auto a3 = s3.generated(rot);
  CHECK(a3.order() == 3);
  CHECK(*normalizer_quotient_invariants(s3, a3) == std::vector<std::size_t>{2});
  CHECK(abelian_label({}) == "1");
}

TEST_CASE("ICA order against brute force") {
  for (const auto& name : oracle::corpus()) {
    for (unsigned q : {2u, 3u}) {
      const auto g = oracle::corpus_group(name);
      const auto total = ca_cardinality(q, g.order());
      if (!total || *total > kDefaultEnumerateGuard) continue;
      CAPTURE(name);
      CAPTURE(q);
      const Instance inst(g, q);
      const auto ica = enumerate_ica(inst);
      CHECK(BigInt(ica.size()) == ica_decomposition(inst).total_order);

      // ICA-orbits on A^G are the blocks: x and y are linked by an
      // invertible CA iff their stabilizers are conjugate.
      const auto& t = inst.orbits;
      for (std::size_t a = 0; a < t.orbit_count(); ++a) {
        std::vector<char> reach(t.orbit_count(), 0);
        for (std::size_t e = 0; e < ica.size(); ++e) {
          reach[t.orbit_id[ica.element(e)[t.reps[a]]]] = 1;
        }
        for (std::size_t b = 0; b < t.orbit_count(); ++b) {
          CHECK(static_cast<bool>(reach[b]) == (t.block_of[a] == t.block_of[b]));
        }
      }
    }
  }
}
