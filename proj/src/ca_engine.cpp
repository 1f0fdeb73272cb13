#include "camonoid/ca_engine.hpp"

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "camonoid/errors.hpp"
#include "camonoid/kernels.hpp"

namespace camonoid {

Transformation from_local_rule(const LocalRule& rule,
                               const ConfigSpace& space) {
  const auto& mem = rule.memory;
  for (std::size_t i = 0; i < mem.size(); ++i) {
    if (mem[i] >= space.n()) {
      throw InputError("memory element " + std::to_string(mem[i]) +
                       " is not a group element");
    }
    if (i > 0 && mem[i] <= mem[i - 1]) {
      throw InputError("memory set must be strictly ascending");
    }
  }
  std::size_t patterns = 1;
  for (std::size_t i = 0; i < mem.size(); ++i) patterns *= space.q();
  if (rule.table.size() != patterns) {
    throw BadTableLength("local table has " + std::to_string(rule.table.size()) +
                         " entries, expected q^|S| = " +
                         std::to_string(patterns));
  }
  for (unsigned v : rule.table) {
    if (v >= space.q()) {
      throw InputError("local table symbol " + std::to_string(v) +
                       " is outside the alphabet");
    }
  }

  const auto& g = space.group();
  const std::size_t n = space.n();
  // cell[h][i] = s_i . h
  std::vector<Element> cell(n * mem.size());
  for (Element h = 0; h < n; ++h) {
    for (std::size_t i = 0; i < mem.size(); ++i) {
      cell[h * mem.size() + i] = g.mul(mem[i], h);
    }
  }
  std::vector<Code> pow(n);
  for (std::size_t i = 0, p = 1; i < n; ++i, p *= space.q()) {
    pow[i] = static_cast<Code>(p);
  }

  std::vector<Code> map(space.size());
  for (Code x = 0; x < space.size(); ++x) {
    Code image = 0;
    for (Element h = 0; h < n; ++h) {
      std::size_t pattern = 0;
      for (std::size_t i = mem.size(); i-- > 0;) {
        pattern = pattern * space.q() + space.digit(x, cell[h * mem.size() + i]);
      }
      image += rule.table[pattern] * pow[h];
    }
    map[x] = image;
  }
  return Transformation(std::move(map));
}

LocalRule to_full_memory_rule(const Transformation& t,
                              const ConfigSpace& space) {
  LocalRule rule;
  for (Element g = 0; g < space.n(); ++g) rule.memory.push_back(g);
  // With S = G in ascending order the pattern code of x at the identity is
  // x itself, so the local function reads the identity cell of the image.
  rule.table.resize(space.size());
  for (Code x = 0; x < space.size(); ++x) rule.table[x] = space.digit(t[x], 0);
  return rule;
}

bool is_equivariant(const Transformation& t, const ConfigSpace& space,
                    Exec exec) {
  if (t.degree() != space.size()) return false;
  return exec == Exec::serial ? kernels::serial::equivariant(t.view(), space)
                              : kernels::omp::equivariant(t.view(), space);
}

std::vector<Element> minimal_memory_set(const Transformation& t,
                                        const ConfigSpace& space) {
  if (!is_equivariant(t, space)) {
    throw NotEquivariant("transformation is not G-equivariant");
  }
  std::vector<Element> essential;
  for (Element g = 0; g < space.n(); ++g) {
    bool found = false;
    for (Code x = 0; x < space.size() && !found; ++x) {
      if (space.digit(x, g) != 0) continue;
      const unsigned mu = space.digit(t[x], 0);
      for (unsigned v = 1; v < space.q(); ++v) {
        if (space.digit(t[space.with_digit(x, g, v)], 0) != mu) {
          found = true;
          break;
        }
      }
    }
    if (found) essential.push_back(g);
  }
  return essential;
}

LocalRule minimal_local_rule(const Transformation& t,
                             const ConfigSpace& space) {
  LocalRule rule;
  rule.memory = minimal_memory_set(t, space);
  std::size_t patterns = 1;
  for (std::size_t i = 0; i < rule.memory.size(); ++i) patterns *= space.q();
  rule.table.resize(patterns);
  for (std::size_t p = 0; p < patterns; ++p) {
    Code x = 0;
    std::size_t rest = p;
    for (Element s : rule.memory) {
      x = space.with_digit(x, s, static_cast<unsigned>(rest % space.q()));
      rest /= space.q();
    }
    rule.table[p] = space.digit(t[x], 0);
  }
  return rule;
}

Transformation shift(const ConfigSpace& space, Element g) {
  std::vector<Code> map(space.size());
  for (Code x = 0; x < space.size(); ++x) map[x] = space.act(x, g);
  return Transformation(std::move(map));
}

Transformation collapse(std::size_t degree, std::span<const Code> from,
                        Code to) {
  auto t = Transformation::identity(degree);
  for (Code b : from) t[b] = to;
  return t;
}

namespace {

bool same_orbit(const ConfigSpace& space, Code x, Code y) {
  const auto tr = space.translates(x);
  return std::find(tr.begin(), tr.end(), y) != tr.end();
}

}  // namespace

Transformation tau_xy(const ConfigSpace& space, Code x, Code y) {
  if (x >= space.size() || y >= space.size()) {
    throw InputError("configuration code out of range");
  }
  if (same_orbit(space, x, y)) {
    throw SameOrbit("x and y lie in the same G-orbit");
  }
  const auto& g = space.group();
  const Subgroup gx = space.stabilizer(x);
  const Subgroup gy = space.stabilizer(y);
  std::optional<Element> witness;
  for (Element w = 0; w < g.order() && !witness; ++w) {
    if (gx.is_subset_of(g.conjugate(gy, w))) witness = w;
  }
  if (!witness) {
    throw StabilizerNotDominated(
        "no g with G_x <= g^{-1} G_y g; no CA maps xG onto yG");
  }
  auto t = Transformation::identity(space.size());
  for (Element h = 0; h < g.order(); ++h) {
    t[space.act(x, h)] = space.act(y, g.mul(*witness, h));
  }
  return t;
}

Transformation swap_orbits(const ConfigSpace& space, Code x, Code y) {
  if (x >= space.size() || y >= space.size()) {
    throw InputError("configuration code out of range");
  }
  if (same_orbit(space, x, y)) return Transformation::identity(space.size());
  const auto& g = space.group();
  const Subgroup gx = space.stabilizer(x);
  const Subgroup gy = space.stabilizer(y);
  std::optional<Element> witness;
  for (Element c = 0; c < g.order() && !witness; ++c) {
    if (g.conjugate(gy, c) == gx) witness = c;
  }
  if (!witness) {
    throw ClassMismatch("stabilizers of x and y are not conjugate");
  }
  auto t = Transformation::identity(space.size());
  for (Element h = 0; h < g.order(); ++h) {
    const Code a = space.act(x, h);
    const Code b = space.act(y, g.mul(*witness, h));
    t[a] = b;
    t[b] = a;
  }
  return t;
}

WeightCensus weight_census(const ConfigSpace& space, unsigned k) {
  const std::uint64_t n = space.n();
  const std::uint64_t q = space.q();
  if (q < 2 || n < 2) {
    throw InputError("weight census requires n >= 2 and q >= 2");
  }
  if (k >= q) throw InputError("symbol k is outside the alphabet");
  WeightCensus c;
  for (Code x = 0; x < space.size(); ++x) {
    if (space.is_constant(x)) continue;
    for (Element g = 0; g < n; ++g) {
      if (space.digit(x, g) != k) ++c.weight;
    }
  }
  std::uint64_t qn1 = 1;
  for (std::uint64_t i = 0; i + 1 < n; ++i) qn1 *= q;
  c.closed_form = n * (q - 1) * (qn1 - 1);
  c.divisible_by_n = c.weight % n == 0;
  c.per_cell = c.weight / n;
  c.per_cell_divisible_by_q = c.per_cell % q == 0;
  return c;
}

LocalRuleDocument read_local_rule(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  if (lines.size() < 2) {
    throw InputError("local-rule document needs a header and a memory line");
  }
  LocalRuleDocument doc;
  {
    std::istringstream is(lines[0]);
    long long n = 0;
    long long q = 0;
    std::string extra;
    if (!(is >> n >> q) || (is >> extra) || n <= 0 || q <= 0) {
      throw InputError("first line of a local-rule document must be 'n q'");
    }
    doc.n = static_cast<std::size_t>(n);
    doc.q = static_cast<unsigned>(q);
  }
  auto read_numbers = [](const std::string& text, const char* what) {
    std::istringstream is(text);
    std::vector<long long> out;
    long long v = 0;
    while (is >> v) out.push_back(v);
    if (!is.eof()) throw InputError(std::string("non-integer token in ") + what);
    return out;
  };
  for (long long m : read_numbers(lines[1], "memory line")) {
    if (m < 0 || static_cast<std::size_t>(m) >= doc.n) {
      throw InputError("memory element " + std::to_string(m) + " out of range");
    }
    doc.rule.memory.push_back(static_cast<Element>(m));
  }
  std::string rest;
  for (std::size_t i = 2; i < lines.size(); ++i) rest += lines[i] + " ";
  for (long long v : read_numbers(rest, "local table")) {
    if (v < 0 || v >= static_cast<long long>(doc.q)) {
      throw InputError("table symbol " + std::to_string(v) + " out of range");
    }
    doc.rule.table.push_back(static_cast<unsigned>(v));
  }
  return doc;
}

void write_local_rule(std::ostream& out, const LocalRuleDocument& doc) {
  out << doc.n << ' ' << doc.q << '\n';
  for (std::size_t i = 0; i < doc.rule.memory.size(); ++i) {
    out << (i ? " " : "") << doc.rule.memory[i];
  }
  out << '\n';
  for (std::size_t i = 0; i < doc.rule.table.size(); ++i) {
    out << (i ? " " : "") << doc.rule.table[i];
  }
  out << '\n';
}

}  // namespace camonoid
