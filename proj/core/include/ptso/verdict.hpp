#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ptso {

enum class Outcome { Reachable, Unreachable, Inconclusive };

struct Stats {
  std::uint64_t explored = 0;
  std::uint64_t iterations = 0;
  std::uint64_t millis = 0;
};

struct Verdict {
  Outcome outcome = Outcome::Inconclusive;
  /// Human-readable witness, one label per line (empty unless reachable).
  std::vector<std::string> witness;
  /// For register-machine backends: the run as indices into rm.delta.
  std::vector<std::uint32_t> run;
  Stats stats;
  /// Why the verdict is inconclusive, or which backend produced it.
  std::string note;
};

enum class ReportFormat { Text, Lines };

std::string outcome_name(Outcome outcome);

/// Text: `verdict:`, an indented `witness:` block and a `stats:` block.
/// Lines: one `key: value` per line with a fixed key set and no timings.
std::string format_report(const Verdict& verdict, ReportFormat format);

/// 0 reachable, 1 unreachable, 2 inconclusive.
int exit_code(Outcome outcome);

}  // namespace ptso
