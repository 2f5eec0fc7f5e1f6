#include <benchmark/benchmark.h>

#include "compa/compa.hpp"

using namespace compa;

namespace {

void BM_SchreierSims(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const PermGroup sym = build(GroupSpec::symmetric(n));
  for (auto _ : state) {
    PermGroup g(sym.degree(), sym.generators());
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_SchreierSims)->Arg(8)->Arg(12)->Arg(20)->Arg(32);

void BM_Membership(benchmark::State& state) {
  const PermGroup g = build(GroupSpec::wreath_imprimitive(GroupSpec::symmetric(4), GroupSpec::symmetric(3)));
  const auto elts = elements(g);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g.contains(elts[i]));
    i = (i + 7919) % elts.size();
  }
}
BENCHMARK(BM_Membership);

void BM_CompositionFactors(benchmark::State& state) {
  const std::vector<GroupSpec> specs{GroupSpec::symmetric(6), GroupSpec::psl2(11),
                                     GroupSpec::wreath_imprimitive(GroupSpec::symmetric(3), GroupSpec::symmetric(3)),
                                     GroupSpec::alternating(8)};
  const PermGroup g = build(specs[static_cast<std::size_t>(state.range(0))]);
  for (auto _ : state) benchmark::DoNotOptimize(composition_factors(g));
  state.SetLabel(specs[static_cast<std::size_t>(state.range(0))].name());
}
BENCHMARK(BM_CompositionFactors)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_BlockSystems(benchmark::State& state) {
  const PermGroup g = build(GroupSpec::wreath_imprimitive(GroupSpec::cyclic(3), GroupSpec::cyclic(4)));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_block_systems(g));
}
BENCHMARK(BM_BlockSystems);

void BM_StabilizerTrace(benchmark::State& state) {
  const std::vector<GroupSpec> specs{GroupSpec::symmetric(8), GroupSpec::johnson(5),
                                     GroupSpec::wreath_imprimitive(GroupSpec::symmetric(3), GroupSpec::symmetric(4))};
  const PermGroup g = build(specs[static_cast<std::size_t>(state.range(0))]);
  for (auto _ : state) benchmark::DoNotOptimize(verify_stabilizer_bound(g).verdict());
  state.SetLabel(specs[static_cast<std::size_t>(state.range(0))].name());
}
BENCHMARK(BM_StabilizerTrace)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_DistinctPrimeThreshold(benchmark::State& state) {
  const auto k_max = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(alternating_quotient_threshold(k_max));
}
BENCHMARK(BM_DistinctPrimeThreshold)->Arg(100'000)->Arg(2'000'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
