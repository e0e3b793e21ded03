#pragma once

// Seeded random instance families for cross-checking and benchmarks.  The
// same seed and options always produce the same instance.

#include <cstdint>

#include "ptso/automata.hpp"
#include "ptso/program.hpp"
#include "ptso/register_machine.hpp"

namespace ptso {

struct RandomProgramOptions {
  std::uint32_t max_states = 4;
  std::uint32_t max_vars = 2;
  std::uint32_t d_max = 1;
  /// Outgoing transitions per state are drawn from 1..max_out.
  std::uint32_t max_out = 2;
};

/// Trivial-ADT program: reads, writes, skips and fences between random states.
Program random_program(std::uint64_t seed, const RandomProgramOptions& options = {});

/// Counter program whose inc transitions never lie on a cycle, so every
/// process's counter stays below the number of states.
Program random_bounded_counter_program(std::uint64_t seed, const RandomProgramOptions& options = {});

struct RandomMachineOptions {
  std::uint32_t max_states = 5;
  std::uint32_t max_registers = 2;
  std::uint32_t bound = 2;
  /// Highest action tier drawn (1..3).
  int tier = 1;
  AdtType adt = AdtType::trivial();
  std::uint32_t max_out = 2;
};

RegisterMachine random_machine(std::uint64_t seed, const RandomMachineOptions& options = {});

/// Counter machine with at most 4 states and 1 register over {0,1}, so the
/// exact counter bound is at most 64.
RegisterMachine random_counter_machine(std::uint64_t seed);

/// Counter machine (options.adt is overridden) whose inc transitions never
/// lie on a cycle.
RegisterMachine random_bounded_counter_machine(std::uint64_t seed, RandomMachineOptions options = {});

/// Stack machine over {a,b} with at most 5 states and 1 register.
RegisterMachine random_stack_machine(std::uint64_t seed);

/// Net with 1..3 places and 1..3 transitions (arc weights <= 2), initial
/// marking <= 2 per place, target <= 2 tokens in total.
CoverabilityInstance random_net(std::uint64_t seed);

}  // namespace ptso
