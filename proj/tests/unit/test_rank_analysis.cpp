#include <doctest.h>

#include "camonoid/ca_engine.hpp"
#include "camonoid/closure_oracle.hpp"
#include "camonoid/errors.hpp"
#include "camonoid/rank_analysis.hpp"
#include "oracles.hpp"

using namespace camonoid;

namespace {

// Recomputes the bounds from alpha, r, |E_G| and m without the library.
long long tight_by_hand(long long m, long long r, long long edges, unsigned q,
                        const std::vector<std::size_t>& alpha) {
  long long sum = 0;
  for (std::size_t i = 1; i < alpha.size(); ++i) {
    const long long a = static_cast<long long>(alpha[i]);
    sum += m * a - (a == 1 ? 3 : 0) - (a == 2 ? 1 : 0);
  }
  return sum + 2 * r + edges - (q == 2 ? 1 : 0);
}

}  // namespace

TEST_CASE("relative rank values") {
  const Instance klein(parse_group_spec("cyclic:2xcyclic:2"), 2);
  CHECK(relative_rank(klein) == 9);
  const Instance c2(parse_group_spec("cyclic:2"), 2);
  CHECK(relative_rank(c2) == 2);
  const Instance c2q3(parse_group_spec("cyclic:2"), 3);
  CHECK(relative_rank(c2q3) == 3);
  CHECK(relative_rank(c2q3) == c2q3.lattice.edges.size());

  const Instance s3(oracle::corpus_group("s3"), 2);
  CHECK_THROWS_AS(relative_rank(s3), NotAbelian);
  CHECK_THROWS_AS(generating_set_U(s3), NotAbelian);
  CHECK_THROWS_AS(rank_upper_bound(s3), NotAbelian);
}

TEST_CASE("generating set U") {
  const Instance klein(parse_group_spec("cyclic:2xcyclic:2"), 2);
  const auto U = generating_set_U(klein);
  CHECK(U.size() == 9);
  std::size_t loops = 0;
  for (const auto& u : U) {
    CHECK(is_equivariant(u.map, klein.space));
    CHECK_FALSE(is_invertible(u.map));
    CHECK(compose(u.map, u.map) == u.map);
    loops += u.is_loop();
  }
  CHECK(loops == 2);
  CHECK(U.front().provenance == "edge 2->1");
  CHECK(U.back().provenance == "loop 5");

  const Instance c2(parse_group_spec("cyclic:2"), 2);
  const auto u2 = generating_set_U(c2);
  REQUIRE(u2.size() == 2);
  // One free-orbit collapse onto a constant, one constant-to-constant.
  CHECK(u2[0].map == tau_xy(c2.space, 1, 0));
  CHECK(u2[1].map == tau_xy(c2.space, 0, 3));

  const Instance c3(parse_group_spec("cyclic:3"), 2);
  CHECK(generating_set_U(c3).size() == 3);
}

TEST_CASE("rank bounds") {
  const Instance klein(parse_group_spec("cyclic:2xcyclic:2"), 2);
  const auto b = rank_upper_bound(klein, 9);
  CHECK(b.group_rank == 2);
  CHECK(b.tight == 21);
  CHECK(b.coarse == 45);
  CHECK(b.with_ica_rank == 18);
  CHECK(b.tight == tight_by_hand(2, 5, 12, 2, {2, 1, 1, 1, 2}));

  const Instance c2(parse_group_spec("cyclic:2"), 2);
  CHECK(rank_upper_bound(c2).tight == 4);
  CHECK(rank_upper_bound(c2).tight == tight_by_hand(1, 2, 3, 2, {2, 1}));
  CHECK_FALSE(rank_upper_bound(c2).with_ica_rank);

  const auto report = rank_report(klein, 9);
  CHECK(report.relative_rank == 9);
  CHECK(report.U.size() == report.relative_rank);
  CHECK(report.alpha_one_classes == std::vector<std::size_t>{2, 3, 4});
  CHECK(report.relative_rank == report.edge_count - report.alpha_one_classes.size());
}

TEST_CASE("alpha-one certificates") {
  const Instance klein2(parse_group_spec("cyclic:2xcyclic:2"), 2);
  const auto c = alpha_one_certificates(klein2);
  CHECK(c.violations == 0);
  for (std::size_t i = 1; i <= 3; ++i) {
    CHECK(c.entries[i].index == 2);
    CHECK(c.entries[i].alpha == 1);
  }
  const Instance klein3(parse_group_spec("cyclic:2xcyclic:2"), 3);
  for (std::size_t i = 1; i <= 3; ++i) {
    CHECK(klein3.orbits.alpha[i] >= 2);
  }
  CHECK(alpha_one_certificates(klein3).violations == 0);
  const Instance c4(parse_group_spec("cyclic:4"), 3);
  for (std::size_t i = 1; i < c4.orbits.alpha.size(); ++i) {
    CHECK(c4.orbits.alpha[i] != 1);
  }
}

TEST_CASE("pairing kernels") {
  const Instance klein(parse_group_spec("cyclic:2xcyclic:2"), 2);
  CHECK(pairs_orbits(tau_xy(klein.space, 1, 7), klein.space, 1, 7));
  CHECK(pairs_orbits(tau_xy(klein.space, 0, 15), klein.space, 0, 15));
  CHECK_FALSE(pairs_orbits(tau_xy(klein.space, 1, 5), klein.space, 1, 7));
  CHECK_FALSE(pairs_orbits(Transformation::identity(16), klein.space, 1, 7));
}

TEST_CASE("small memory and necessity on cyclic:2") {
  const Instance c2(parse_group_spec("cyclic:2"), 2);
  const auto r = small_memory_closure_check(c2);
  CHECK(r.closure_size < 16);
  CHECK(r.holds());
  CHECK(r.local_rules == 2 + 4 + 4);
  for (const auto& w : necessity_witnesses(c2)) CHECK(w.holds());

  const Instance c5(parse_group_spec("cyclic:5"), 2);
  CHECK_THROWS_AS(small_memory_closure_check(c5), SpaceTooLarge);
}
