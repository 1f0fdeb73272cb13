#include "camonoid/group.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "camonoid/errors.hpp"

namespace camonoid {

std::size_t Subgroup::order() const {
  return static_cast<std::size_t>(std::popcount(bits_));
}

std::vector<Element> Subgroup::members() const {
  std::vector<Element> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<Element>(std::countr_zero(b)));
  }
  return out;
}

bool operator<(const Subgroup& a, const Subgroup& b) {
  const auto oa = a.order();
  const auto ob = b.order();
  if (oa != ob) return oa < ob;
  return a.bits() < b.bits();
}

namespace {

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<Element>> table,
                                    std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw NotAGroup("empty Cayley table");
  if (n > kMaxGroupOrder) {
    throw SpaceTooLarge("group order " + std::to_string(n) +
                        " exceeds the supported maximum of " +
                        std::to_string(kMaxGroupOrder));
  }
  for (std::size_t g = 0; g < n; ++g) {
    if (table[g].size() != n) {
      throw NotAGroup("row " + std::to_string(g) + " has " +
                      std::to_string(table[g].size()) + " entries, expected " +
                      std::to_string(n));
    }
    for (std::size_t h = 0; h < n; ++h) {
      if (table[g][h] >= n) {
        throw NotAGroup("entry " + triple(g, h, table[g][h]) +
                        " is out of range");
      }
    }
  }

  // Latin square: every row and every column is a permutation.
  for (std::size_t g = 0; g < n; ++g) {
    std::vector<char> row(n, 0);
    std::vector<char> col(n, 0);
    for (std::size_t h = 0; h < n; ++h) {
      if (row[table[g][h]]++) {
        throw NotAGroup("row " + std::to_string(g) +
                        " is not a permutation (Latin-square check)");
      }
      if (col[table[h][g]]++) {
        throw NotAGroup("column " + std::to_string(g) +
                        " is not a permutation (Latin-square check)");
      }
    }
  }

  std::size_t e = n;
  for (std::size_t g = 0; g < n && e == n; ++g) {
    bool left = true;
    bool right = true;
    for (std::size_t h = 0; h < n; ++h) {
      left = left && table[g][h] == h;
      right = right && table[h][g] == h;
    }
    if (left && right) e = g;
  }
  if (e == n) throw NotAGroup("no two-sided identity element");

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw NotAGroup("associativity fails for triple " + triple(a, b, c));
        }
      }
    }
  }

  // Swap e and 0 so that the identity has index 0.
  auto relabel = [e](std::size_t x) -> Element {
    if (x == e) return 0;
    if (x == 0) return static_cast<Element>(e);
    return static_cast<Element>(x);
  };

  FiniteGroup grp;
  grp.n_ = n;
  grp.name_ = std::move(name);
  grp.factors_ = {n};
  grp.table_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      grp.table_[relabel(a) * n + relabel(b)] = relabel(table[a][b]);
    }
  }
  grp.inv_.assign(n, 0);
  for (std::size_t g = 0; g < n; ++g) {
    std::size_t found = n;
    for (std::size_t h = 0; h < n; ++h) {
      if (grp.mul(g, h) == 0) {
        found = h;
        break;
      }
    }
    if (found == n || grp.mul(found, g) != 0) {
      throw NotAGroup("element " + std::to_string(g) + " has no inverse");
    }
    grp.inv_[g] = static_cast<Element>(found);
  }
  for (std::size_t a = 0; a < n && grp.abelian_; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (grp.mul(a, b) != grp.mul(b, a)) {
        grp.abelian_ = false;
        break;
      }
    }
  }
  return grp;
}

Subgroup FiniteGroup::whole() const {
  return Subgroup{n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1};
}

Subgroup FiniteGroup::generated(std::span<const Element> gens) const {
  std::uint64_t bits = 1;
  std::vector<Element> frontier{0};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (Element x : frontier) {
      for (Element s : gens) {
        const Element y = mul(x, s);
        if (!((bits >> y) & 1u)) {
          bits |= std::uint64_t{1} << y;
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  return Subgroup{bits};
}

Subgroup FiniteGroup::conjugate(const Subgroup& h, Element g) const {
  std::uint64_t bits = 0;
  const Element gi = inv(g);
  for (Element x : h.members()) {
    bits |= std::uint64_t{1} << mul(mul(gi, x), g);
  }
  return Subgroup{bits};
}

bool FiniteGroup::is_subgroup(const Subgroup& h) const {
  if (!h.contains(0)) return false;
  const auto mem = h.members();
  for (Element a : mem) {
    if (!h.contains(inv(a))) return false;
    for (Element b : mem) {
      if (!h.contains(mul(a, b))) return false;
    }
  }
  return true;
}

Element FiniteGroup::power(Element g, std::size_t k) const {
  Element acc = 0;
  for (std::size_t i = 0; i < k; ++i) acc = mul(acc, g);
  return acc;
}

std::size_t FiniteGroup::element_order(Element g) const {
  std::size_t k = 1;
  for (Element x = g; x != 0; x = mul(x, g)) ++k;
  return k;
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw MalformedSpec("cyclic group order must be positive");
  if (n > kMaxGroupOrder) {
    throw SpaceTooLarge("cyclic:" + std::to_string(n) +
                        " exceeds the supported maximum order");
  }
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t[a][b] = static_cast<Element>((a + b) % n);
    }
  }
  return FiniteGroup::from_table(std::move(t), "cyclic:" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  if (na * nb > kMaxGroupOrder) {
    throw SpaceTooLarge("direct product of order " + std::to_string(na * nb) +
                        " exceeds the supported maximum order");
  }
  const std::size_t n = na * nb;
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto left = a.mul(static_cast<Element>(x / nb),
                              static_cast<Element>(y / nb));
      const auto right = b.mul(static_cast<Element>(x % nb),
                               static_cast<Element>(y % nb));
      t[x][y] = static_cast<Element>(left * nb + right);
    }
  }
  auto g = FiniteGroup::from_table(std::move(t), a.name() + "x" + b.name());
  auto factors = a.factor_orders();
  factors.insert(factors.end(), b.factor_orders().begin(),
                 b.factor_orders().end());
  g.set_factor_orders(std::move(factors));
  return g;
}

FiniteGroup parse_group_spec(std::string_view spec) {
  if (spec.empty()) throw MalformedSpec("empty group spec");
  std::vector<std::size_t> orders;
  std::size_t pos = 0;
  while (true) {
    constexpr std::string_view prefix = "cyclic:";
    if (spec.substr(pos, prefix.size()) != prefix) {
      throw MalformedSpec("expected 'cyclic:<n>' at offset " +
                          std::to_string(pos) + " in '" + std::string(spec) +
                          "'");
    }
    pos += prefix.size();
    std::size_t value = 0;
    const char* first = spec.data() + pos;
    const char* last = spec.data() + spec.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) {
      throw MalformedSpec("expected an integer at offset " +
                          std::to_string(pos) + " in '" + std::string(spec) +
                          "'");
    }
    if (value == 0) throw MalformedSpec("cyclic group order must be positive");
    orders.push_back(value);
    pos = static_cast<std::size_t>(ptr - spec.data());
    if (pos == spec.size()) break;
    if (spec[pos] != 'x') {
      throw MalformedSpec("unexpected character '" + std::string(1, spec[pos]) +
                          "' in '" + std::string(spec) + "'");
    }
    ++pos;
  }
  FiniteGroup g = cyclic_group(orders.front());
  for (std::size_t i = 1; i < orders.size(); ++i) {
    g = direct_product(g, cyclic_group(orders[i]));
  }
  return g;
}

FiniteGroup read_cayley_table(std::istream& in, std::string name) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw MalformedSpec("Cayley table document is empty");

  auto parse_ints = [](const std::string& line, std::size_t lineno) {
    std::istringstream is(line);
    std::vector<long long> v;
    std::string tok;
    while (is >> tok) {
      long long x = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw MalformedSpec("non-integer token '" + tok + "' on data line " +
                            std::to_string(lineno));
      }
      v.push_back(x);
    }
    return v;
  };

  const auto header = parse_ints(lines[0], 1);
  if (header.size() != 1 || header[0] <= 0) {
    throw MalformedSpec("first data line must hold the group order");
  }
  const auto n = static_cast<std::size_t>(header[0]);
  if (lines.size() != n + 1) {
    throw MalformedSpec("expected " + std::to_string(n) + " table rows, got " +
                        std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<Element>> t(n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto row = parse_ints(lines[r + 1], r + 2);
    if (row.size() != n) {
      throw MalformedSpec("row " + std::to_string(r) + " has " +
                          std::to_string(row.size()) + " entries, expected " +
                          std::to_string(n));
    }
    for (long long x : row) {
      if (x < 0 || static_cast<std::size_t>(x) >= n) {
        throw MalformedSpec("entry " + std::to_string(x) + " in row " +
                            std::to_string(r) + " is out of range");
      }
      t[r].push_back(static_cast<Element>(x));
    }
  }
  return FiniteGroup::from_table(std::move(t), std::move(name));
}

FiniteGroup load_group(const std::string& spec_or_path) {
  if (spec_or_path.rfind("cyclic:", 0) == 0) {
    return parse_group_spec(spec_or_path);
  }
  std::ifstream in(spec_or_path);
  if (!in) {
    throw MalformedSpec("'" + spec_or_path +
                        "' is neither a group spec nor a readable file");
  }
  return read_cayley_table(in, spec_or_path);
}

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& g,
                                          std::size_t guard) {
  const std::size_t n = g.order();
  if (n > guard) {
    throw SpaceTooLarge("subgroup enumeration guard: order " +
                        std::to_string(n) + " > " + std::to_string(guard));
  }
  std::vector<Subgroup> cyclic;
  std::set<std::uint64_t> seen;
  for (Element x = 0; x < n; ++x) {
    const Element gen[] = {x};
    const Subgroup c = g.generated(gen);
    if (seen.insert(c.bits()).second) cyclic.push_back(c);
  }

  // Every subgroup is a join of cyclic subgroups, so joining each newly
  // found subgroup with every cyclic one reaches the whole set.
  std::vector<Subgroup> all = cyclic;
  std::vector<Subgroup> frontier = cyclic;
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& h : frontier) {
      for (const auto& c : cyclic) {
        if (c.is_subset_of(h)) continue;
        auto gens = h.members();
        const auto extra = c.members();
        gens.insert(gens.end(), extra.begin(), extra.end());
        const Subgroup j = g.generated(gens);
        if (seen.insert(j.bits()).second) {
          all.push_back(j);
          next.push_back(j);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return all;
}

std::size_t SubgroupLattice::class_of(const Subgroup& h) const {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (const auto& m : classes[i].members) {
      if (m == h) return i;
    }
  }
  throw std::out_of_range("subgroup not present in lattice");
}

std::vector<std::pair<std::size_t, std::size_t>> SubgroupLattice::hasse_edges()
    const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t r = size();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j || !le(i, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < r && cover; ++k) {
        if (k != i && k != j && le(i, k) && le(k, j)) cover = false;
      }
      if (cover) out.emplace_back(i, j);
    }
  }
  return out;
}

SubgroupLattice conjugacy_classes(const FiniteGroup& g, std::size_t guard) {
  const auto subgroups = enumerate_subgroups(g, guard);
  std::map<std::uint64_t, bool> assigned;
  std::vector<ConjClass> classes;
  for (const auto& h : subgroups) {
    if (assigned[h.bits()]) continue;
    std::set<std::uint64_t> conj;
    for (Element x = 0; x < g.order(); ++x) {
      conj.insert(g.conjugate(h, x).bits());
    }
    ConjClass c;
    for (std::uint64_t bits : conj) {
      assigned[bits] = true;
      c.members.emplace_back(bits);
    }
    c.rep = c.members.front();  // std::set iterates ascending
    classes.push_back(std::move(c));
  }
  const std::uint64_t whole = g.whole().bits();
  std::sort(classes.begin(), classes.end(),
            [whole](const ConjClass& a, const ConjClass& b) {
              const bool ag = a.rep.bits() == whole;
              const bool bg = b.rep.bits() == whole;
              if (ag != bg) return ag;
              if (a.rep.order() != b.rep.order()) {
                return a.rep.order() > b.rep.order();
              }
              return a.rep.bits() < b.rep.bits();
            });

  SubgroupLattice lat;
  lat.classes = std::move(classes);
  const std::size_t r = lat.classes.size();
  lat.leq.assign(r * r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const auto& hi = lat.classes[i].rep;
      for (const auto& m : lat.classes[j].members) {
        if (hi.is_subset_of(m)) {
          lat.leq[i * r + j] = 1;
          break;
        }
      }
      if (lat.leq[i * r + j]) lat.edges.emplace_back(i, j);
    }
  }
  return lat;
}

std::size_t group_rank(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n == 1) return 0;
  const Subgroup whole = g.whole();
  // Each added generator at least doubles the generated subgroup, so a
  // generating set of size floor(log2 n) always exists.
  const std::size_t cap = static_cast<std::size_t>(std::bit_width(n) - 1);
  std::vector<Element> pool;
  for (Element x = 1; x < n; ++x) pool.push_back(x);

  for (std::size_t k = 1; k <= cap; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::vector<Element> gens;
      for (auto i : idx) gens.push_back(pool[i]);
      if (g.generated(gens) == whole) return k;
      // next combination
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == pool.size() - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw InvariantViolation("no generating set of size <= log2(n) found");
}

}  // namespace camonoid
