#pragma once

// Reachability backends for register machines.  Every reachable verdict
// carries `run`, a sequence of indices into rm.delta that replays under
// rm_step from the initial configuration.

#include <cstdint>
#include <optional>
#include <vector>

#include "ptso/automata.hpp"
#include "ptso/register_machine.hpp"
#include "ptso/verdict.hpp"

namespace ptso {

inline constexpr std::uint64_t kDefaultStateBudget = 5'000'000;

/// Breadth-first search over configurations.  Exact when the reachable ADT
/// values are finite; inconclusive once `max_states` is exceeded.
Verdict solve_finite(const RegisterMachine& rm, std::uint64_t max_states = kDefaultStateBudget);

/// Breadth-first search that prunes ADT values larger than `value_bound`.
/// Unreachable only if nothing was pruned.
Verdict explore_bounded(const RegisterMachine& rm, std::uint64_t value_bound,
                        std::uint64_t max_states = kDefaultStateBudget);

/// (|Q| * (N+1)^|R|)^2, saturating at UINT64_MAX.
std::uint64_t counter_bound(const RegisterMachine& rm);

struct CounterOptions {
  /// Search only counter values up to min(bound, cap).
  std::optional<std::uint64_t> cap;
  std::uint64_t max_states = kDefaultStateBudget;
};

/// Counter or weak-counter machines.  Inconclusive only when the cap is
/// below the exact bound and actually blocked an increment.
Verdict solve_counter(const RegisterMachine& rm, const CounterOptions& options = {});

/// Trivial-ADT machine with ceil(log2(B+1)) bit registers encoding a counter
/// that blocks above `bound`.
RegisterMachine binarize_counter(const RegisterMachine& rm, std::uint64_t bound);

/// Stack machines: pushdown pre* saturation over lazily flattened control
/// states (q, registers).
Verdict solve_stack(const RegisterMachine& rm, std::uint64_t max_control_states = kDefaultStateBudget);

struct CoverabilityResult {
  bool coverable = false;
  /// Transition indices, firing from the initial marking to a cover.
  std::vector<std::uint32_t> firing;
  std::uint64_t iterations = 0;
  std::uint64_t basis_elements = 0;
  /// Every intermediate basis was an antichain.
  bool antichain_ok = true;
};

/// Backward coverability with minimal bases of upward-closed sets.
CoverabilityResult backward_coverability(const PetriNet& net, const Marking& target);

/// Tier-1 Petri machines via the coverability encoding.
Verdict solve_petri(const RegisterMachine& rm);

/// Backward reachability over (state, registers, upward-closed ADT values)
/// for monotone ADTs (weak counter, Petri net, trivial).
Verdict solve_wsts(const RegisterMachine& rm, std::uint64_t max_elements = kDefaultStateBudget);

/// Every (state, registers) pair reachable when ADT operations are treated
/// as always enabled (nullopt past the budget).  Used to restrict the
/// symbolic backends.
std::optional<std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>>> control_overapproximation(
    const RegisterMachine& rm, std::uint64_t max_states = kDefaultStateBudget);

/// Witness lines `from -> to : action` for a run.
std::vector<std::string> describe_run(const RegisterMachine& rm, const std::vector<std::uint32_t>& run);

}  // namespace ptso
