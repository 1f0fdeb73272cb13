#include "camonoid/instance.hpp"

#include <utility>

namespace camonoid {

Instance::Instance(FiniteGroup g, unsigned q, std::uint64_t space_guard)
    : group(std::move(g)),
      lattice(conjugacy_classes(group)),
      space(group, q, space_guard),
      orbits(orbit_table(space, lattice)) {}

}  // namespace camonoid
