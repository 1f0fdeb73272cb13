#include "oracles.hpp"

#include <deque>
#include <fstream>
#include <functional>
#include <stdexcept>

namespace oracle {

Element inverse(const FiniteGroup& g, Element a) {
  for (Element b = 0; b < g.order(); ++b) {
    if (g.mul(a, b) == 0 && g.mul(b, a) == 0) return b;
  }
  throw std::logic_error("element without inverse");
}

std::vector<std::uint64_t> subgroups(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n > 16) throw std::invalid_argument("subgroup oracle needs n <= 16");
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); s += 2) {
    bool closed = true;
    for (Element a = 0; a < n && closed; ++a) {
      if (!((s >> a) & 1)) continue;
      for (Element b = 0; b < n && closed; ++b) {
        if ((s >> b) & 1) closed = (s >> g.mul(a, b)) & 1;
      }
    }
    if (closed) out.push_back(s);
  }
  return out;
}

std::uint64_t conjugate(const FiniteGroup& g, std::uint64_t h, Element x) {
  const Element xi = inverse(g, x);
  std::uint64_t out = 0;
  for (Element a = 0; a < g.order(); ++a) {
    if ((h >> a) & 1) out |= std::uint64_t{1} << g.mul(g.mul(xi, a), x);
  }
  return out;
}

std::set<std::set<std::uint64_t>> conjugacy_partition(const FiniteGroup& g) {
  std::set<std::set<std::uint64_t>> out;
  for (auto h : subgroups(g)) {
    std::set<std::uint64_t> cls;
    for (Element x = 0; x < g.order(); ++x) cls.insert(conjugate(g, h, x));
    out.insert(cls);
  }
  return out;
}

bool class_le(const FiniteGroup& g, std::uint64_t h1, std::uint64_t h2) {
  for (Element x = 0; x < g.order(); ++x) {
    if ((h1 & ~conjugate(g, h2, x)) == 0) return true;
  }
  return false;
}

std::vector<unsigned> digits(std::uint32_t code, std::size_t n, unsigned q) {
  std::vector<unsigned> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = code % q;
    code /= q;
  }
  return d;
}

std::uint32_t encode(const std::vector<unsigned>& d, unsigned q) {
  std::uint32_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * q + d[i];
  return code;
}

std::uint32_t act(const FiniteGroup& g, unsigned q, std::uint32_t x, Element a) {
  const auto d = digits(x, g.order(), q);
  const Element ai = inverse(g, a);
  std::vector<unsigned> out(g.order());
  for (Element h = 0; h < g.order(); ++h) out[h] = d[g.mul(h, ai)];
  return encode(out, q);
}

std::uint32_t space_size(std::size_t n, unsigned q) {
  std::uint32_t s = 1;
  for (std::size_t i = 0; i < n; ++i) s *= q;
  return s;
}

std::vector<std::vector<std::uint32_t>> orbits(const FiniteGroup& g,
                                               unsigned q) {
  const auto size = space_size(g.order(), q);
  std::vector<char> seen(size, 0);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t x = 0; x < size; ++x) {
    if (seen[x]) continue;
    std::set<std::uint32_t> orbit;
    for (Element a = 0; a < g.order(); ++a) orbit.insert(act(g, q, x, a));
    for (auto y : orbit) seen[y] = 1;
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

std::uint64_t stabilizer(const FiniteGroup& g, unsigned q, std::uint32_t x) {
  std::uint64_t s = 0;
  for (Element a = 0; a < g.order(); ++a) {
    if (act(g, q, x, a) == x) s |= std::uint64_t{1} << a;
  }
  return s;
}

bool equivariant(const FiniteGroup& g, unsigned q, const Map& f) {
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    for (Element a = 0; a < g.order(); ++a) {
      if (f[act(g, q, x, a)] != act(g, q, f[x], a)) return false;
    }
  }
  return true;
}

std::set<Map> all_ca(const FiniteGroup& g, unsigned q) {
  const std::size_t n = g.order();
  const auto size = space_size(n, q);
  // Pattern of x at cell h: digit s of the pattern is x(s h), s in G.
  std::vector<std::uint32_t> pattern(std::size_t{size} * n);
  for (std::uint32_t x = 0; x < size; ++x) {
    const auto d = digits(x, n, q);
    for (Element h = 0; h < n; ++h) {
      std::vector<unsigned> p(n);
      for (Element s = 0; s < n; ++s) p[s] = d[g.mul(s, h)];
      pattern[std::size_t{x} * n + h] = encode(p, q);
    }
  }
  std::set<Map> out;
  std::vector<unsigned> mu(size, 0);
  while (true) {
    Map f(size);
    for (std::uint32_t x = 0; x < size; ++x) {
      std::vector<unsigned> img(n);
      for (Element h = 0; h < n; ++h) img[h] = mu[pattern[std::size_t{x} * n + h]];
      f[x] = encode(img, q);
    }
    out.insert(std::move(f));
    std::size_t k = 0;
    while (k < size && ++mu[k] == q) mu[k++] = 0;
    if (k == size) break;
  }
  return out;
}

bool bijective(const Map& f) {
  std::vector<char> hit(f.size(), 0);
  for (auto v : f) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

std::set<Map> closure(const std::vector<Map>& gens, std::size_t degree) {
  Map id(degree);
  for (std::uint32_t i = 0; i < degree; ++i) id[i] = i;
  std::set<Map> seen{id};
  std::deque<Map> todo{id};
  while (!todo.empty()) {
    const Map f = todo.front();
    todo.pop_front();
    for (const auto& g : gens) {
      Map fg(degree);
      for (std::uint32_t x = 0; x < degree; ++x) fg[x] = g[f[x]];
      if (seen.insert(fg).second) todo.push_back(std::move(fg));
    }
  }
  return seen;
}

std::uint64_t weight(std::size_t n, unsigned q, unsigned k) {
  std::uint64_t w = 0;
  for (std::uint32_t x = 0; x < space_size(n, q); ++x) {
    const auto d = digits(x, n, q);
    bool constant = true;
    for (auto v : d) constant = constant && v == d[0];
    if (constant) continue;
    for (auto v : d) w += v != k;
  }
  return w;
}

FiniteGroup corpus_group(const std::string& name) {
  if (name == "s3") {
    std::ifstream in(std::string(CAMONOID_DATA_DIR) + "/s3.table");
    return camonoid::read_cayley_table(in, "s3");
  }
  return camonoid::parse_group_spec(name);
}

std::vector<std::string> corpus() {
  std::vector<std::string> out;
  for (int n = 2; n <= 8; ++n) out.push_back("cyclic:" + std::to_string(n));
  for (int a = 2; a <= 8; ++a) {
    for (int b = a; a * b <= 16; ++b) {
      out.push_back("cyclic:" + std::to_string(a) + "xcyclic:" +
                    std::to_string(b));
    }
  }
  out.push_back("s3");
  return out;
}

}  // namespace oracle
