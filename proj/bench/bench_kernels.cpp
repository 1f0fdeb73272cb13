// Serial reference kernels against the OpenMP ones.
#include <benchmark/benchmark.h>

#include "camonoid/ca_engine.hpp"
#include "camonoid/closure_oracle.hpp"
#include "camonoid/instance.hpp"
#include "camonoid/kernels.hpp"
#include "camonoid/rank_analysis.hpp"

using namespace camonoid;

namespace {

const Instance& klein() {
  static const Instance inst(parse_group_spec("cyclic:2xcyclic:2"), 2);
  return inst;
}

const Instance& c8() {
  static const Instance inst(parse_group_spec("cyclic:8"), 3);
  return inst;
}

template <bool Parallel>
void BM_fill(benchmark::State& state) {
  const auto& inst = klein();
  const auto plan = kernels::make_equivariant_plan(inst.space, inst.orbits);
  const std::uint64_t count = 65536;
  std::vector<Code> out(count * inst.space.size());
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::omp::fill_equivariant_maps(plan, 0, count, out);
    } else {
      kernels::serial::fill_equivariant_maps(plan, 0, count, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * count);
}

template <bool Parallel>
void BM_equivariant(benchmark::State& state) {
  const auto& inst = c8();
  const auto t = shift(inst.space, 3);
  for (auto _ : state) {
    bool ok;
    if constexpr (Parallel) {
      ok = kernels::omp::equivariant(t.codes(), inst.space);
    } else {
      ok = kernels::serial::equivariant(t.codes(), inst.space);
    }
    benchmark::DoNotOptimize(ok);
  }
}

template <bool Parallel>
void BM_closure(benchmark::State& state) {
  const auto& inst = klein();
  auto gens = generating_subset(enumerate_ica(inst));
  for (auto& u : maps_of(generating_set_U(inst))) gens.push_back(u);
  const Exec exec = Parallel ? Exec::parallel : Exec::serial;
  for (auto _ : state) {
    const auto closed = closure(gens, inst.space.size(), kDefaultClosureCap, exec);
    benchmark::DoNotOptimize(closed.size());
  }
}

}  // namespace

BENCHMARK(BM_fill<false>)->Name("fill/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fill<true>)->Name("fill/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_equivariant<false>)->Name("equivariant/serial")->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_equivariant<true>)->Name("equivariant/omp")->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_closure<false>)->Name("closure/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_closure<true>)->Name("closure/omp")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
