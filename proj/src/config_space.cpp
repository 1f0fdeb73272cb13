#include "camonoid/config_space.hpp"

#include <algorithm>
#include <limits>

#include "camonoid/errors.hpp"

namespace camonoid {

ConfigSpace::ConfigSpace(const FiniteGroup& group, unsigned q,
                         std::uint64_t guard)
    : group_(group), q_(q) {
  if (q == 0) throw InputError("alphabet size must be at least 1");
  const std::size_t n = group.order();
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    size *= q;
    if (size > guard) {
      throw SpaceTooLarge("configuration space " + std::to_string(q) + "^" +
                          std::to_string(n) + " exceeds the guard of " +
                          std::to_string(guard) + " codes");
    }
  }
  size_ = static_cast<std::size_t>(size);
  pow_.resize(n);
  Code p = 1;
  for (std::size_t i = 0; i < n; ++i) {
    pow_[i] = p;
    p *= q;
  }

  // src[g][h] = h g^{-1}: the cell of x read into cell h of x.g
  std::vector<Element> src(n * n);
  for (Element g = 0; g < n; ++g) {
    const Element gi = group.inv(g);
    for (Element h = 0; h < n; ++h) src[g * n + h] = group.mul(h, gi);
  }
  act_.resize(size_ * n);
  std::vector<unsigned> digits(n);
  for (Code x = 0; x < size_; ++x) {
    Code rest = x;
    for (std::size_t i = 0; i < n; ++i) {
      digits[i] = rest % q;
      rest /= q;
    }
    for (Element g = 0; g < n; ++g) {
      Code y = 0;
      for (Element h = 0; h < n; ++h) y += digits[src[g * n + h]] * pow_[h];
      act_[x * n + g] = y;
    }
  }
}

Code ConfigSpace::constant(unsigned k) const {
  Code x = 0;
  for (std::size_t i = 0; i < n(); ++i) x += k * pow_[i];
  return x;
}

bool ConfigSpace::is_constant(Code x) const {
  const unsigned first = digit(x, 0);
  for (Element g = 1; g < n(); ++g) {
    if (digit(x, g) != first) return false;
  }
  return true;
}

Subgroup ConfigSpace::stabilizer(Code x) const {
  std::uint64_t bits = 0;
  for (Element g = 0; g < n(); ++g) {
    if (act(x, g) == x) bits |= std::uint64_t{1} << g;
  }
  return Subgroup{bits};
}

std::uint64_t ConfigSpace::fix_count(const Subgroup& h) const {
  // y.h = y for all h in H  <=>  y is constant on each left coset gH
  std::vector<char> covered(n(), 0);
  const auto members = h.members();
  std::size_t cosets = 0;
  for (Element g = 0; g < n(); ++g) {
    if (covered[g]) continue;
    ++cosets;
    for (Element m : members) covered[group_.mul(g, m)] = 1;
  }
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < cosets; ++i) {
    if (count > std::numeric_limits<std::uint64_t>::max() / q_) {
      throw SpaceTooLarge("fix_count overflows 64 bits");
    }
    count *= q_;
  }
  return count;
}

std::vector<Code> ConfigSpace::fixed_codes(const Subgroup& h) const {
  const auto members = h.members();
  std::vector<Code> out;
  for (Code y = 0; y < size_; ++y) {
    bool fixed = true;
    for (Element m : members) {
      if (act(y, m) != y) {
        fixed = false;
        break;
      }
    }
    if (fixed) out.push_back(y);
  }
  return out;
}

std::string ConfigSpace::render(Code x) const {
  std::string s;
  for (Element g = 0; g < n(); ++g) {
    const unsigned d = digit(x, g);
    if (q_ <= 10) {
      s.push_back(static_cast<char>('0' + d));
    } else {
      if (g) s.push_back('.');
      s += std::to_string(d);
    }
  }
  return s;
}

std::string ConfigSpace::render_matrix(Code x) const {
  const auto& f = group_.factor_orders();
  if (f.size() != 2) return render(x);
  std::string s;
  for (std::size_t a = 0; a < f[0]; ++a) {
    if (a) s.push_back('\n');
    for (std::size_t b = 0; b < f[1]; ++b) {
      if (b) s.push_back(' ');
      s += std::to_string(digit(x, static_cast<Element>(a * f[1] + b)));
    }
  }
  return s;
}

std::vector<std::size_t> OrbitTable::orbits_in_class(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t o = 0; o < reps.size(); ++o) {
    if (block_of[o] == i) out.push_back(o);
  }
  return out;
}

std::vector<std::size_t> OrbitTable::sorted_sizes() const {
  auto s = orbit_size;
  std::sort(s.begin(), s.end());
  return s;
}

OrbitTable orbit_table(const ConfigSpace& space,
                       const SubgroupLattice& lattice) {
  constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
  OrbitTable t;
  t.orbit_id.assign(space.size(), unset);
  for (Code x = 0; x < space.size(); ++x) {
    if (t.orbit_id[x] != unset) continue;
    const auto id = static_cast<std::uint32_t>(t.reps.size());
    std::size_t size = 0;
    for (Code y : space.translates(x)) {
      if (t.orbit_id[y] == unset) {
        t.orbit_id[y] = id;
        ++size;
      }
    }
    // x is the smallest unvisited code, hence the minimal member
    t.reps.push_back(x);
    t.orbit_size.push_back(size);
    t.stab.push_back(space.stabilizer(x));
  }
  t.alpha.assign(lattice.size(), 0);
  t.block_of.resize(t.reps.size());
  for (std::size_t o = 0; o < t.reps.size(); ++o) {
    t.block_of[o] = lattice.class_of(t.stab[o]);
    ++t.alpha[t.block_of[o]];
  }
  return t;
}

std::vector<Code> orbit_of(const ConfigSpace& space, Code x) {
  std::vector<Code> out(space.translates(x).begin(),
                        space.translates(x).end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace camonoid
