#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "camonoid/group.hpp"

namespace camonoid {

/// A configuration x: G -> A packed as a base-q integer. Digit i (least
/// significant first) is the value of x at group element i.
using Code = std::uint32_t;

inline constexpr std::uint64_t kDefaultSpaceGuard = 65536;

/// The configuration space A^G together with the right G-action
/// (h)(x.g) = (h g^{-1})x, tabulated for every code.
class ConfigSpace {
 public:
  /// Throws SpaceTooLarge if q^n exceeds `guard`, InputError if q == 0.
  ConfigSpace(const FiniteGroup& group, unsigned q,
              std::uint64_t guard = kDefaultSpaceGuard);

  const FiniteGroup& group() const { return group_; }
  std::size_t n() const { return group_.order(); }
  unsigned q() const { return q_; }
  /// q^n
  std::size_t size() const { return size_; }

  unsigned digit(Code x, Element g) const {
    return static_cast<unsigned>((x / pow_[g]) % q_);
  }
  Code with_digit(Code x, Element g, unsigned value) const {
    return x - digit(x, g) * pow_[g] + value * pow_[g];
  }
  Code act(Code x, Element g) const { return act_[x * n() + g]; }
  /// Row of `act` for x: entry g is x.g.
  std::span<const Code> translates(Code x) const {
    return {act_.data() + x * n(), n()};
  }

  Code constant(unsigned k) const;
  bool is_constant(Code x) const;

  Subgroup stabilizer(Code x) const;
  /// Number of codes fixed by every element of h, i.e. q^[G:H].
  std::uint64_t fix_count(const Subgroup& h) const;
  /// Codes y with y.h = y for all h in `h`, ascending.
  std::vector<Code> fixed_codes(const Subgroup& h) const;

  /// Base-q digit string, element 0 leftmost.
  std::string render(Code x) const;
  /// Matrix rendering for two-factor products: row a, column b holds the
  /// value at (a, b). Falls back to `render` otherwise.
  std::string render_matrix(Code x) const;

 private:
  FiniteGroup group_;
  unsigned q_;
  std::size_t size_ = 1;
  std::vector<Code> pow_;
  std::vector<Code> act_;
};

/// Orbits of G on A^G, stabilizers, and the blocks B_[H] with their orbit
/// counts alpha_[H], indexed by lattice class order.
struct OrbitTable {
  std::vector<std::uint32_t> orbit_id;   // code -> orbit
  std::vector<Code> reps;                // minimal code per orbit, ascending
  std::vector<Subgroup> stab;            // stabilizer of the rep
  std::vector<std::size_t> orbit_size;
  std::vector<std::size_t> block_of;     // orbit -> lattice class
  std::vector<std::size_t> alpha;        // lattice class -> orbit count

  std::size_t orbit_count() const { return reps.size(); }
  /// Orbits inside the block of class i, ascending by representative.
  std::vector<std::size_t> orbits_in_class(std::size_t i) const;
  std::vector<std::size_t> sorted_sizes() const;
};

OrbitTable orbit_table(const ConfigSpace& space, const SubgroupLattice& lattice);

/// Members of the orbit of x, ascending.
std::vector<Code> orbit_of(const ConfigSpace& space, Code x);

}  // namespace camonoid
