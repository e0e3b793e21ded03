#include "ptso/verdict.hpp"

#include <sstream>

namespace ptso {

std::string outcome_name(Outcome outcome) {
  switch (outcome) {
    case Outcome::Reachable: return "reachable";
    case Outcome::Unreachable: return "unreachable";
    case Outcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string format_report(const Verdict& verdict, ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::Lines) {
    out << "verdict: " << outcome_name(verdict.outcome) << '\n';
    out << "note: " << verdict.note << '\n';
    out << "explored: " << verdict.stats.explored << '\n';
    out << "iterations: " << verdict.stats.iterations << '\n';
    out << "witness_length: " << verdict.witness.size() << '\n';
    for (const auto& step : verdict.witness) out << "step: " << step << '\n';
    return out.str();
  }
  out << "verdict: " << outcome_name(verdict.outcome) << '\n';
  if (!verdict.note.empty()) out << "note: " << verdict.note << '\n';
  if (!verdict.witness.empty()) {
    out << "witness:\n";
    for (const auto& step : verdict.witness) out << "  " << step << '\n';
  }
  out << "stats:\n";
  out << "  explored: " << verdict.stats.explored << '\n';
  out << "  iterations: " << verdict.stats.iterations << '\n';
  out << "  millis: " << verdict.stats.millis << '\n';
  return out.str();
}

int exit_code(Outcome outcome) {
  switch (outcome) {
    case Outcome::Reachable: return 0;
    case Outcome::Unreachable: return 1;
    case Outcome::Inconclusive: return 2;
  }
  return 3;
}

}  // namespace ptso
