#include "camonoid/ica_structure.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "camonoid/errors.hpp"

namespace camonoid {

namespace {

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  std::uint64_t bits = 0;
  for (Element x = 0; x < g.order(); ++x) {
    if (g.conjugate(h, x) == h) bits |= std::uint64_t{1} << x;
  }
  return Subgroup{bits};
}

std::vector<std::pair<std::size_t, std::size_t>> factorize(std::size_t m) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 2; p * p <= m; ++p) {
    std::size_t e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

std::size_t ilog(std::size_t value, std::size_t p) {
  std::size_t k = 0;
  while (value > 1) {
    value /= p;
    ++k;
  }
  return k;
}

}  // namespace

std::optional<std::vector<std::size_t>> normalizer_quotient_invariants(
    const FiniteGroup& g, const Subgroup& h) {
  const auto nmem = normalizer(g, h).members();
  for (Element a : nmem) {
    for (Element b : nmem) {
      const Element comm = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
      if (!h.contains(comm)) return std::nullopt;
    }
  }
  const std::size_t m = nmem.size() / h.order();
  // Cosets whose order divides d.
  auto count_dividing = [&](std::size_t d) {
    std::size_t c = 0;
    for (Element a : nmem) {
      if (h.contains(g.power(a, d))) ++c;
    }
    return c / h.order();
  };

  std::vector<std::vector<std::size_t>> parts;  // per prime, descending
  for (auto [p, e] : factorize(m)) {
    std::vector<std::size_t> at_least(e + 2, 0);
    std::size_t prev = 0;
    for (std::size_t k = 1; k <= e; ++k) {
      const std::size_t s = ilog(count_dividing(ipow(p, k)), p);
      at_least[k] = s - prev;
      prev = s;
    }
    std::vector<std::size_t> pp;
    for (std::size_t k = e; k >= 1; --k) {
      for (std::size_t c = at_least[k] - at_least[k + 1]; c > 0; --c) {
        pp.push_back(ipow(p, k));
      }
    }
    parts.push_back(std::move(pp));
  }
  std::size_t longest = 0;
  for (const auto& pp : parts) longest = std::max(longest, pp.size());
  std::vector<std::size_t> inv(longest, 1);
  for (const auto& pp : parts) {
    for (std::size_t j = 0; j < pp.size(); ++j) inv[j] *= pp[j];
  }
  std::reverse(inv.begin(), inv.end());
  return inv;
}

std::string abelian_label(const std::vector<std::size_t>& invariants) {
  if (invariants.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < invariants.size(); ++i) {
    if (i) s += "x";
    s += "Z" + std::to_string(invariants[i]);
  }
  return s;
}

OrbitCentralizer orbit_centralizer(const Instance& inst, std::size_t orbit) {
  const auto& space = inst.space;
  const auto& t = inst.orbits;
  if (orbit >= t.orbit_count()) throw InputError("orbit index out of range");
  OrbitCentralizer c;
  c.orbit = orbit;
  const Subgroup gx = t.stab[orbit];
  std::uint64_t pointwise = inst.group.whole().bits();
  for (Code y : orbit_of(space, t.reps[orbit])) {
    const Subgroup gy = space.stabilizer(y);
    pointwise &= gy.bits();
    if (gy == gx) c.elements.push_back(y);
  }
  c.order = c.elements.size();
  c.pointwise_stab = Subgroup{pointwise};
  c.normalizer_quotient = normalizer(inst.group, gx).order() / gx.order();
  return c;
}

IcaDecomposition ica_decomposition(const Instance& inst) {
  IcaDecomposition d;
  const auto& lat = inst.lattice;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    IcaFactor f;
    f.class_index = i;
    f.alpha = inst.orbits.alpha[i];
    const auto orbits = inst.orbits.orbits_in_class(i);
    if (!orbits.empty()) {
      const auto c = orbit_centralizer(inst, orbits.front());
      if (c.order != c.normalizer_quotient) {
        throw InvariantViolation("centralizer order " + std::to_string(c.order) +
                                 " differs from |N(H)/H| = " +
                                 std::to_string(c.normalizer_quotient));
      }
      f.centralizer_order = c.order;
      f.invariants =
          normalizer_quotient_invariants(inst.group, inst.orbits.stab[orbits.front()]);
    } else {
      f.invariants = std::vector<std::size_t>{};
    }
    f.centralizer_label = f.invariants
                              ? abelian_label(*f.invariants)
                              : "G" + std::to_string(f.centralizer_order);
    f.label = f.centralizer_label + " wr S" + std::to_string(f.alpha);
    BigInt part = 1;
    for (std::size_t k = 0; k < f.alpha; ++k) part *= f.centralizer_order;
    for (std::size_t k = 2; k <= f.alpha; ++k) part *= k;
    d.total_order *= part;
    d.factors.push_back(std::move(f));
  }
  return d;
}

std::string IcaDecomposition::structure() const {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < factors.size();) {
    std::size_t j = i;
    while (j < factors.size() && factors[j].label == factors[i].label) ++j;
    std::string s = "(" + factors[i].label + ")";
    if (j - i > 1) s += "^" + std::to_string(j - i);
    parts.push_back(std::move(s));
    i = j;
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out += (i ? " x " : "") + parts[i];
  }
  return out.empty() ? "1" : out;
}

std::string IcaDecomposition::simplified() const {
  std::map<std::size_t, std::size_t> cyclic;  // modulus -> multiplicity
  std::vector<std::string> others;
  for (const auto& f : factors) {
    const bool trivial = f.centralizer_order == 1;
    if (f.alpha == 0) continue;
    if (trivial) {
      if (f.alpha == 2) ++cyclic[2];
      if (f.alpha >= 3) others.push_back("S" + std::to_string(f.alpha));
    } else if (f.alpha == 1) {
      if (f.invariants) {
        for (auto d : *f.invariants) ++cyclic[d];
      } else {
        others.push_back(f.centralizer_label);
      }
    } else {
      others.push_back("(" + f.label + ")");
    }
  }
  std::vector<std::string> parts;
  for (auto [mod, count] : cyclic) {
    const std::string z = "Z" + std::to_string(mod);
    parts.push_back(count == 1 ? z : "(" + z + ")^" + std::to_string(count));
  }
  parts.insert(parts.end(), others.begin(), others.end());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out += (i ? " x " : "") + parts[i];
  }
  return out.empty() ? "1" : out;
}

}  // namespace camonoid
