#pragma once

#include <cstdint>

#include "camonoid/config_space.hpp"
#include "camonoid/group.hpp"

namespace camonoid {

/// Everything derived from a pair (G, q) that the analyses share.
struct Instance {
  FiniteGroup group;
  SubgroupLattice lattice;
  ConfigSpace space;
  OrbitTable orbits;

  Instance(FiniteGroup g, unsigned q,
           std::uint64_t space_guard = kDefaultSpaceGuard);

  std::size_t n() const { return group.order(); }
  unsigned q() const { return space.q(); }
};

}  // namespace camonoid
