#include <benchmark/benchmark.h>

#include "ptso/generators.hpp"
#include "ptso/lowering.hpp"
#include "ptso/solvers.hpp"

namespace {

template <typename Make>
std::vector<ptso::RegisterMachine> batch(Make make, std::uint64_t count = 20) {
  std::vector<ptso::RegisterMachine> out;
  for (std::uint64_t seed = 0; seed < count; ++seed) out.push_back(make(seed));
  return out;
}

void BM_SolveFinite(benchmark::State& state) {
  ptso::RandomMachineOptions options;
  options.max_states = 5;
  options.bound = static_cast<std::uint32_t>(state.range(0));
  options.tier = 3;
  const auto machines = batch([&](std::uint64_t s) { return ptso::random_machine(s, options); });
  for (auto _ : state)
    for (const auto& rm : machines) benchmark::DoNotOptimize(ptso::solve_finite(rm).outcome);
}
BENCHMARK(BM_SolveFinite)->Arg(2)->Arg(4)->Arg(8);

void BM_LowerToTier1(benchmark::State& state) {
  ptso::RandomMachineOptions options;
  options.bound = static_cast<std::uint32_t>(state.range(0));
  options.tier = 3;
  const auto machines = batch([&](std::uint64_t s) { return ptso::random_machine(s, options); });
  for (auto _ : state)
    for (const auto& rm : machines) benchmark::DoNotOptimize(ptso::lower_to_tier1(rm).delta.size());
}
BENCHMARK(BM_LowerToTier1)->Arg(2)->Arg(4)->Arg(8);

void BM_SolveCounter(benchmark::State& state) {
  const auto machines = batch(ptso::random_counter_machine);
  for (auto _ : state)
    for (const auto& rm : machines) benchmark::DoNotOptimize(ptso::solve_counter(rm).outcome);
}
BENCHMARK(BM_SolveCounter)->Unit(benchmark::kMillisecond);

void BM_SolveStack(benchmark::State& state) {
  const auto machines = batch(ptso::random_stack_machine);
  for (auto _ : state)
    for (const auto& rm : machines) benchmark::DoNotOptimize(ptso::solve_stack(rm).outcome);
}
BENCHMARK(BM_SolveStack)->Unit(benchmark::kMillisecond);

void BM_BackwardCoverability(benchmark::State& state) {
  std::vector<ptso::CoverabilityInstance> nets;
  for (std::uint64_t seed = 0; seed < 20; ++seed) nets.push_back(ptso::random_net(seed));
  for (auto _ : state)
    for (const auto& n : nets) benchmark::DoNotOptimize(ptso::backward_coverability(n.net, n.target).coverable);
}
BENCHMARK(BM_BackwardCoverability);

void BM_SolveWsts(benchmark::State& state) {
  std::vector<ptso::RegisterMachine> machines;
  for (std::uint64_t seed = 0; seed < 20; ++seed) machines.push_back(ptso::coverability_to_rm(ptso::random_net(seed)));
  for (auto _ : state)
    for (const auto& rm : machines) benchmark::DoNotOptimize(ptso::solve_wsts(rm).outcome);
}
BENCHMARK(BM_SolveWsts)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
