#include <benchmark/benchmark.h>

#include "ptso/generators.hpp"
#include "ptso/tso.hpp"

namespace {

// Bounded concrete search; range(0) is the step budget.
void BM_BoundedOracle(benchmark::State& state) {
  std::vector<ptso::Program> programs;
  for (std::uint64_t seed = 0; seed < 20; ++seed) programs.push_back(ptso::random_program(seed));
  ptso::OracleBounds bounds;
  bounds.step_max = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state)
    for (const auto& p : programs) benchmark::DoNotOptimize(ptso::bounded_reach(p, bounds).verdict.outcome);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(programs.size()));
}
BENCHMARK(BM_BoundedOracle)->Arg(6)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace
