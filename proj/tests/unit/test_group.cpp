#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "camonoid/errors.hpp"
#include "camonoid/group.hpp"
#include "oracles.hpp"

using namespace camonoid;

namespace {

std::vector<std::vector<Element>> cyclic_table(std::size_t n) {
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Element>((a + b) % n);
  }
  return t;
}

}  // namespace

TEST_CASE("group specs") {
  const auto trivial = parse_group_spec("cyclic:1");
  CHECK(trivial.order() == 1);
  CHECK(trivial.is_abelian());

  const auto klein = parse_group_spec("cyclic:2xcyclic:2");
  CHECK(klein.order() == 4);
  CHECK(klein.is_abelian());
  for (Element g = 0; g < 4; ++g) CHECK(klein.inv(g) == g);
  CHECK(klein.factor_orders() == std::vector<std::size_t>{2, 2});
  // (a, b) -> 2a + b
  CHECK(klein.mul(1, 2) == 3);

  const auto c6 = parse_group_spec("cyclic:6");
  CHECK(c6.element_order(1) == 6);
  CHECK(c6.power(1, 4) == 4);

  for (const char* bad : {"", "cyclic:", "cyclic:0", "dihedral:4", "cyclic:2x",
                          "cyclic:2xx cyclic:3", "cyclic:-2", "cyclic:3a"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_group_spec(bad), MalformedSpec);
  }
  CHECK_THROWS_AS(parse_group_spec("cyclic:65"), GuardError);
}

TEST_CASE("symmetric group table") {
  const auto s3 = oracle::corpus_group("s3");
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  int triples = 0;
  for (Element a = 0; a < 6; ++a) {
    for (Element b = 0; b < 6; ++b) {
      for (Element c = 0; c < 6; ++c) {
        CHECK(s3.mul(s3.mul(a, b), c) == s3.mul(a, s3.mul(b, c)));
        ++triples;
      }
    }
  }
  CHECK(triples == 216);
  CHECK(group_rank(s3) == 2);
}

TEST_CASE("table validation") {
  CHECK_NOTHROW(FiniteGroup::from_table(cyclic_table(5), "z5"));

  auto not_latin = cyclic_table(3);
  not_latin[1][2] = 1;
  CHECK_THROWS_AS(FiniteGroup::from_table(not_latin, "x"), NotAGroup);

  auto out_of_range = cyclic_table(3);
  out_of_range[2][2] = 7;
  CHECK_THROWS_AS(FiniteGroup::from_table(out_of_range, "x"), NotAGroup);

  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1}}, "x"), NotAGroup);

  // A Latin square with identity 0 that is not associative (a loop of
  // order 5).
  const std::vector<std::vector<Element>> loop{{0, 1, 2, 3, 4},
                                               {1, 0, 3, 4, 2},
                                               {2, 4, 0, 1, 3},
                                               {3, 2, 4, 0, 1},
                                               {4, 3, 1, 2, 0}};
  try {
    FiniteGroup::from_table(loop, "loop");
    FAIL("expected NotAGroup");
  } catch (const NotAGroup& e) {
    CHECK(std::string(e.what()).find("associativ") != std::string::npos);
  }

  // Z3 with the identity stored at index 2 is re-indexed.
  std::vector<std::vector<Element>> shifted(3, std::vector<Element>(3));
  for (Element a = 0; a < 3; ++a) {
    for (Element b = 0; b < 3; ++b) shifted[a][b] = (a + b + 2) % 3;
  }
  const auto z3 = FiniteGroup::from_table(shifted, "z3");
  for (Element g = 0; g < 3; ++g) {
    CHECK(z3.mul(0, g) == g);
    CHECK(z3.mul(g, 0) == g);
  }
}

TEST_CASE("cayley table document") {
  std::istringstream good("# comment\n3\n0 1 2\n1 2 0\n\n2 0 1\n");
  CHECK(read_cayley_table(good, "z3").order() == 3);
  std::istringstream short_rows("3\n0 1 2\n1 2 0\n");
  CHECK_THROWS_AS(read_cayley_table(short_rows, "x"), InputError);
  std::istringstream junk("2\n0 a\n1 0\n");
  CHECK_THROWS_AS(read_cayley_table(junk, "x"), InputError);
  CHECK_THROWS_AS(load_group("/nonexistent/table"), InputError);
}

TEST_CASE("subgroups against the all-subsets oracle") {
  const auto klein = parse_group_spec("cyclic:2xcyclic:2");
  const auto subs = enumerate_subgroups(klein);
  REQUIRE(subs.size() == 5);
  std::vector<std::size_t> orders;
  for (const auto& h : subs) orders.push_back(h.order());
  CHECK(orders == std::vector<std::size_t>{1, 2, 2, 2, 4});

  CHECK(enumerate_subgroups(parse_group_spec("cyclic:2")).size() == 2);
  CHECK(enumerate_subgroups(parse_group_spec("cyclic:6")).size() == 4);

  for (const auto& name : oracle::corpus()) {
    CAPTURE(name);
    const auto g = oracle::corpus_group(name);
    std::vector<std::uint64_t> got;
    for (const auto& h : enumerate_subgroups(g)) {
      got.push_back(h.bits());
      CHECK(g.is_subgroup(h));
      CHECK(g.order() % h.order() == 0);
      for (Element x = 0; x < g.order(); ++x) {
        const auto c = g.conjugate(h, x);
        CHECK(c.bits() == oracle::conjugate(g, h.bits(), x));
        CHECK(c.order() == h.order());
        CHECK(g.is_subgroup(c));
      }
    }
    auto expect = oracle::subgroups(g);
    std::sort(got.begin(), got.end());
    std::sort(expect.begin(), expect.end());
    CHECK(got == expect);
  }
}

TEST_CASE("subgroup enumeration guard") {
  const auto big = parse_group_spec("cyclic:17");
  CHECK_THROWS_AS(enumerate_subgroups(big), SpaceTooLarge);
  CHECK_THROWS_AS(conjugacy_classes(big), SpaceTooLarge);
  CHECK(enumerate_subgroups(big, 17).size() == 2);
}

TEST_CASE("conjugacy classes and the order on them") {
  const auto klein = conjugacy_classes(parse_group_spec("cyclic:2xcyclic:2"));
  CHECK(klein.size() == 5);
  for (const auto& c : klein.classes) CHECK(c.members.size() == 1);
  CHECK(klein.edges.size() == 12);
  CHECK(klein.classes[0].rep.order() == 4);
  CHECK(klein.classes[4].rep.order() == 1);
  CHECK(klein.hasse_edges().size() == 6);

  const auto c2 = conjugacy_classes(parse_group_spec("cyclic:2"));
  CHECK(c2.size() == 2);
  CHECK(c2.edges.size() == 3);

  const auto trivial = conjugacy_classes(parse_group_spec("cyclic:1"));
  CHECK(trivial.size() == 1);
  CHECK(trivial.edges.size() == 1);

  const auto s3 = oracle::corpus_group("s3");
  const auto lat = conjugacy_classes(s3);
  CHECK(lat.size() == 4);

  for (const auto& name : oracle::corpus()) {
    CAPTURE(name);
    const auto g = oracle::corpus_group(name);
    const auto l = conjugacy_classes(g);
    const std::size_t r = l.size();

    std::set<std::set<std::uint64_t>> got;
    for (const auto& c : l.classes) {
      std::set<std::uint64_t> s;
      for (const auto& h : c.members) s.insert(h.bits());
      CHECK(*s.begin() == c.rep.bits());
      got.insert(s);
    }
    CHECK(got == oracle::conjugacy_partition(g));
    if (g.is_abelian()) CHECK(r == oracle::subgroups(g).size());
    CHECK(l.classes[0].rep == g.whole());
    for (std::size_t i = 1; i < r; ++i) {
      const auto& a = l.classes[i - 1].rep;
      const auto& b = l.classes[i].rep;
      if (i > 1) {
        CHECK((a.order() > b.order() ||
               (a.order() == b.order() && a.bits() < b.bits())));
      }
    }

    std::size_t edges = 0;
    for (std::size_t i = 0; i < r; ++i) {
      CHECK(l.le(i, i));
      for (std::size_t j = 0; j < r; ++j) {
        CHECK(l.le(i, j) == oracle::class_le(g, l.classes[i].rep.bits(),
                                             l.classes[j].rep.bits()));
        edges += l.le(i, j);
        if (i != j && l.le(i, j)) CHECK_FALSE(l.le(j, i));
        for (std::size_t k = 0; k < r; ++k) {
          if (l.le(i, j) && l.le(j, k)) CHECK(l.le(i, k));
        }
      }
    }
    CHECK(l.edges.size() == edges);
    for (const auto& c : l.classes) {
      CHECK(l.class_of(c.rep) == static_cast<std::size_t>(&c - l.classes.data()));
    }
  }
}

TEST_CASE("group rank") {
  for (int n = 2; n <= 8; ++n) {
    CHECK(group_rank(parse_group_spec("cyclic:" + std::to_string(n))) == 1);
  }
  CHECK(group_rank(parse_group_spec("cyclic:2xcyclic:2")) == 2);
  CHECK(group_rank(parse_group_spec("cyclic:2xcyclic:3")) == 1);
  CHECK(group_rank(parse_group_spec("cyclic:4xcyclic:4")) == 2);
  CHECK(group_rank(parse_group_spec("cyclic:1")) == 0);
  // No single element generates the Klein group.
  const auto klein = parse_group_spec("cyclic:2xcyclic:2");
  for (Element g = 0; g < 4; ++g) {
    const Element gens[] = {g};
    CHECK(klein.generated(gens).order() < 4);
  }
}
