#include "camonoid/kernels.hpp"

#include <omp.h>

#include <algorithm>

#include "camonoid/parallel.hpp"

namespace camonoid {

namespace {
int g_threads = 0;
}

void set_threads(int n) {
  g_threads = n > 0 ? n : 0;
  omp_set_num_threads(g_threads > 0 ? g_threads : omp_get_num_procs());
}

int threads() { return g_threads > 0 ? g_threads : omp_get_max_threads(); }

}  // namespace camonoid

namespace camonoid::kernels {

EquivariantPlan make_equivariant_plan(const ConfigSpace& space,
                                      const OrbitTable& orbits) {
  EquivariantPlan plan;
  plan.space = &space;
  plan.reps.resize(orbits.orbit_count());
  for (std::size_t o = 0; o < orbits.orbit_count(); ++o) {
    auto& rep = plan.reps[o];
    const Code x = orbits.reps[o];
    rep.images = space.fixed_codes(orbits.stab[o]);
    std::vector<char> seen(space.size(), 0);
    for (Element h = 0; h < space.n(); ++h) {
      const Code m = space.act(x, h);
      if (!seen[m]) {
        seen[m] = 1;
        rep.transversal.emplace_back(m, h);
      }
    }
  }
  return plan;
}

namespace {

inline void fill_one(const EquivariantPlan& plan, std::uint64_t index,
                     Code* row) {
  const ConfigSpace& space = *plan.space;
  for (const auto& rep : plan.reps) {
    const std::uint64_t radix = rep.images.size();
    const Code z = rep.images[index % radix];
    index /= radix;
    for (const auto& [member, h] : rep.transversal) row[member] = space.act(z, h);
  }
}

inline bool equivariant_at(std::span<const Code> map, const ConfigSpace& space,
                           Code x) {
  const auto tx = space.translates(x);
  const auto ty = space.translates(map[x]);
  for (std::size_t g = 0; g < tx.size(); ++g) {
    if (map[tx[g]] != ty[g]) return false;
  }
  return true;
}

inline void expand_one(const MonoidSet& set, std::uint32_t f,
                       std::span<const Transformation> gens,
                       std::vector<Code>& out, std::vector<Code>& scratch) {
  const auto fm = set.element(f);
  const std::size_t d = set.degree();
  scratch.resize(d);
  for (const auto& g : gens) {
    for (std::size_t x = 0; x < d; ++x) scratch[x] = g[fm[x]];
    if (!set.contains(scratch)) out.insert(out.end(), scratch.begin(), scratch.end());
    for (std::size_t x = 0; x < d; ++x) scratch[x] = fm[g[static_cast<Code>(x)]];
    if (!set.contains(scratch)) out.insert(out.end(), scratch.begin(), scratch.end());
  }
}

}  // namespace

namespace serial {

bool equivariant(std::span<const Code> map, const ConfigSpace& space) {
  for (Code x = 0; x < space.size(); ++x) {
    if (!equivariant_at(map, space, x)) return false;
  }
  return true;
}

void fill_equivariant_maps(const EquivariantPlan& plan, std::uint64_t begin,
                           std::uint64_t end, std::span<Code> out) {
  const std::size_t d = plan.space->size();
  for (std::uint64_t i = begin; i < end; ++i) {
    fill_one(plan, i, out.data() + (i - begin) * d);
  }
}

void expand(const MonoidSet& set, std::span<const std::uint32_t> frontier,
            std::span<const Transformation> gens,
            std::vector<std::vector<Code>>& out) {
  out.assign(frontier.size(), {});
  std::vector<Code> scratch;
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    expand_one(set, frontier[i], gens, out[i], scratch);
  }
}

}  // namespace serial

namespace omp {

bool equivariant(std::span<const Code> map, const ConfigSpace& space) {
  const auto size = static_cast<std::int64_t>(space.size());
  int ok = 1;
#pragma omp parallel for schedule(static) reduction(&& : ok)
  for (std::int64_t x = 0; x < size; ++x) {
    ok = ok && equivariant_at(map, space, static_cast<Code>(x));
  }
  return ok != 0;
}

void fill_equivariant_maps(const EquivariantPlan& plan, std::uint64_t begin,
                           std::uint64_t end, std::span<Code> out) {
  const std::size_t d = plan.space->size();
  const auto count = static_cast<std::int64_t>(end - begin);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < count; ++k) {
    fill_one(plan, begin + static_cast<std::uint64_t>(k),
             out.data() + static_cast<std::size_t>(k) * d);
  }
}

void expand(const MonoidSet& set, std::span<const std::uint32_t> frontier,
            std::span<const Transformation> gens,
            std::vector<std::vector<Code>>& out) {
  out.assign(frontier.size(), {});
  const auto count = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel
  {
    std::vector<Code> scratch;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < count; ++i) {
      expand_one(set, frontier[static_cast<std::size_t>(i)], gens,
                 out[static_cast<std::size_t>(i)], scratch);
    }
  }
}

}  // namespace omp

}  // namespace camonoid::kernels
