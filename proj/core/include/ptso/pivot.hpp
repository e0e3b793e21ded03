#pragma once

// Pivot abstraction: a single process simulated against a first-update
// sequence omega of distinct messages, with the environment summarised by
// pointers into omega.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ptso/program.hpp"
#include "ptso/verdict.hpp"

namespace ptso {

inline constexpr std::int32_t kNoWrite = -1;

struct View {
  std::uint32_t q = 0;
  AdtValue val;
  std::vector<std::int32_t> lw;  // last own write per variable, kNoWrite if none
  std::vector<std::uint32_t> omega;  // message indices in rank order (rank = position + 1)
  std::uint32_t phi_e = 0;
  std::vector<std::uint32_t> phi_l;
  std::uint32_t phi_p = 1;

  std::uint32_t phi_l_max() const;
  bool operator==(const View&) const = default;
};

/// rank of `message` in omega (1-based), 0 if absent.
std::uint32_t rank_of(const std::vector<std::uint32_t>& omega, std::uint32_t message);

/// The k-provider's initial view.  Throws ModelError unless 1 <= k <= |omega|+1
/// and omega is a differentiated word over the program's messages.
View initial_view(const Program& program, std::vector<std::uint32_t> omega, std::uint32_t k);

enum class PivotRule { Skip, Write1, Write2, Read1, Read2, Read3, Fence, DataOp };

std::string rule_name(PivotRule rule);

struct PivotLabel {
  PivotRule rule = PivotRule::Skip;
  std::uint32_t transition = 0;  // index into process.delta

  bool operator==(const PivotLabel&) const = default;
};

std::vector<std::pair<PivotLabel, View>> pivot_step(const Program& program, const View& view);

struct PivotOptions {
  /// ADT values whose size exceeds this bound are pruned (the verdict then
  /// becomes inconclusive instead of unreachable).
  std::uint64_t value_bound = 8;
  std::uint64_t max_states = 20'000'000;
};

struct PivotResult {
  Verdict verdict;
  std::vector<std::uint32_t> omega;
  std::vector<PivotLabel> run;  // starts at initial_view(omega, 1)
};

/// Explores every omega lazily: writing a message outside the current
/// prefix appends it as the next pivot.
PivotResult pivot_reach(const Program& program, const PivotOptions& options = {});

/// Replays `run` from initial_view(omega, 1); nullopt if a label is disabled.
std::optional<View> replay_pivot(const Program& program, const std::vector<std::uint32_t>& omega,
                                 const std::vector<PivotLabel>& run);

/// `x=1; y=0` in rank order.
std::string format_omega(const Program& program, const std::vector<std::uint32_t>& omega);

}  // namespace ptso
