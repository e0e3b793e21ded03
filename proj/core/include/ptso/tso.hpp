#pragma once

// Concrete TSO semantics for n copies of one process, each with a private
// store buffer and ADT value, plus a bounded breadth-first oracle.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ptso/program.hpp"
#include "ptso/verdict.hpp"

namespace ptso {

struct Message {
  std::uint32_t var = 0;
  std::uint32_t value = 0;
  auto operator<=>(const Message&) const = default;
};

/// Store buffer; element 0 is the leftmost (most recently enqueued) message.
using Buffer = std::vector<Message>;

/// Value of the most recent pending message on x, if any.
std::optional<std::uint32_t> lval(const Buffer& buffer, std::uint32_t x);
/// lval, falling back to memory.
std::uint32_t rval(const Buffer& buffer, std::uint32_t memory_value, std::uint32_t x);

struct TsoConfiguration {
  std::vector<std::uint32_t> states;
  std::vector<AdtValue> values;
  std::vector<Buffer> buffers;
  std::vector<std::uint32_t> memory;

  std::size_t processes() const { return states.size(); }
  bool operator==(const TsoConfiguration&) const = default;
};

struct TsoConfigurationHash {
  std::size_t operator()(const TsoConfiguration& c) const;
};

TsoConfiguration initial_tso(const Program& program, std::uint32_t processes);

/// Either an instruction of process `proc` (index into process.delta) or a
/// memory update that moves the oldest message of its buffer to memory.
struct TsoLabel {
  std::uint32_t proc = 0;
  bool update = false;
  std::uint32_t transition = 0;
  Message message;

  bool operator==(const TsoLabel&) const = default;
};

std::vector<std::pair<TsoLabel, TsoConfiguration>> tso_step(const Program& program, const TsoConfiguration& cfg);

/// Successor under one specific label, if enabled.
std::optional<TsoConfiguration> tso_apply(const Program& program, const TsoConfiguration& cfg, const TsoLabel& label);

/// Sorts the per-process (state, value, buffer) triples.
TsoConfiguration canonical(const TsoConfiguration& cfg);

/// `ι: wr x 1`, `ι: upd x 1`, `ι: op inc`, ...
std::string format_tso_label(const Program& program, const TsoLabel& label);

struct OracleBounds {
  std::uint32_t n_max = 3;
  std::uint32_t step_max = 12;
  std::uint32_t buffer_max = 4;
  std::uint64_t value_bound = 4;
  std::uint64_t max_configs = 4'000'000;
};

struct OracleResult {
  /// Reachable or Inconclusive; bounded search never proves unreachability.
  Verdict verdict;
  std::uint32_t processes = 0;
  std::vector<TsoLabel> run;
};

OracleResult bounded_reach(const Program& program, const OracleBounds& bounds);

/// Replays `run` from the initial configuration with `processes` copies;
/// returns the final configuration, or nullopt at the first disabled label.
std::optional<TsoConfiguration> replay_tso(const Program& program, std::uint32_t processes,
                                           const std::vector<TsoLabel>& run);

}  // namespace ptso
