#pragma once

// Hot loops with a serial reference implementation and an OpenMP version.
// The two must agree exactly; tests and the benchmark compare them.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "camonoid/config_space.hpp"
#include "camonoid/monoid_set.hpp"
#include "camonoid/transformation.hpp"

namespace camonoid::kernels {

/// Describes every equivariant map: orbit representative k may be sent to
/// any image in `images[k]`, and the choice extends to the orbit through
/// the transversal pairs (member, h) with member = rep.h.
struct EquivariantPlan {
  struct Rep {
    std::vector<Code> images;
    std::vector<std::pair<Code, Element>> transversal;
  };
  const ConfigSpace* space = nullptr;
  std::vector<Rep> reps;
  std::uint64_t total = 1;  // product of images[k].size()
};

EquivariantPlan make_equivariant_plan(const ConfigSpace& space,
                                      const OrbitTable& orbits);

namespace serial {

bool equivariant(std::span<const Code> map, const ConfigSpace& space);

/// Writes maps [begin, end) of the plan (mixed radix, rep 0 least
/// significant) into `out`, one degree-sized row per map.
void fill_equivariant_maps(const EquivariantPlan& plan, std::uint64_t begin,
                           std::uint64_t end, std::span<Code> out);

/// For each frontier element f and generator g, the products f.g and g.f
/// (application order) that are not yet in `set`, appended to out[i] in
/// generator order.
void expand(const MonoidSet& set, std::span<const std::uint32_t> frontier,
            std::span<const Transformation> gens,
            std::vector<std::vector<Code>>& out);

}  // namespace serial

namespace omp {

bool equivariant(std::span<const Code> map, const ConfigSpace& space);
void fill_equivariant_maps(const EquivariantPlan& plan, std::uint64_t begin,
                           std::uint64_t end, std::span<Code> out);
void expand(const MonoidSet& set, std::span<const std::uint32_t> frontier,
            std::span<const Transformation> gens,
            std::vector<std::vector<Code>>& out);

}  // namespace omp

}  // namespace camonoid::kernels
