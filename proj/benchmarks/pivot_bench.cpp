#include <benchmark/benchmark.h>

#include "ptso/generators.hpp"
#include "ptso/pipeline.hpp"
#include "ptso/pivot.hpp"
#include "ptso/translation.hpp"

namespace {

// Pivot search over a batch of random programs with up to `range(0)` states.
void BM_PivotReach(benchmark::State& state) {
  ptso::RandomProgramOptions options;
  options.max_states = static_cast<std::uint32_t>(state.range(0));
  options.max_out = 3;
  std::vector<ptso::Program> programs;
  for (std::uint64_t seed = 0; seed < 20; ++seed) programs.push_back(ptso::random_program(seed, options));
  for (auto _ : state)
    for (const auto& p : programs) benchmark::DoNotOptimize(ptso::pivot_reach(p).verdict.outcome);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(programs.size()));
}
BENCHMARK(BM_PivotReach)->Arg(3)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_PivotMachine(benchmark::State& state) {
  ptso::RandomProgramOptions options;
  options.max_states = static_cast<std::uint32_t>(state.range(0));
  options.max_out = 3;
  std::vector<ptso::Program> programs;
  for (std::uint64_t seed = 0; seed < 20; ++seed) programs.push_back(ptso::random_program(seed, options));
  for (auto _ : state)
    for (const auto& p : programs) benchmark::DoNotOptimize(ptso::check_program(p).outcome);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(programs.size()));
}
BENCHMARK(BM_PivotMachine)->Arg(3)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_ReverseTranslation(benchmark::State& state) {
  ptso::RandomMachineOptions options;
  options.max_states = 5;
  std::vector<ptso::Program> programs;
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    programs.push_back(ptso::build_tso_from_rm(ptso::random_machine(seed, options)));
  for (auto _ : state)
    for (const auto& p : programs) benchmark::DoNotOptimize(ptso::pivot_reach(p).verdict.outcome);
}
BENCHMARK(BM_ReverseTranslation)->Unit(benchmark::kMillisecond);

}  // namespace
