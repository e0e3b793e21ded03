#pragma once

#include <chrono>
#include <optional>

#include "ptso/register_machine.hpp"
#include "ptso/verdict.hpp"

namespace ptso::detail {

struct SearchOutcome {
  bool found = false;
  bool pruned = false;
  bool blocked_inc = false;
  bool budget = false;
  std::vector<std::uint32_t> run;
  Stats stats;
};

SearchOutcome bfs(const RegisterMachine& rm, std::optional<std::uint64_t> value_bound, std::uint64_t max_states);

std::uint64_t elapsed_ms(std::chrono::steady_clock::time_point start);

}  // namespace ptso::detail
