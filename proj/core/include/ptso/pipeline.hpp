#pragma once

// End-to-end checking: program -> register machine -> backend, and the
// three-way crosscheck between the concrete oracle, the pivot search and
// the register-machine pipeline.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ptso/pivot.hpp"
#include "ptso/register_machine.hpp"
#include "ptso/solvers.hpp"
#include "ptso/tso.hpp"

namespace ptso {

enum class Backend { Auto, Finite, Counter, Stack, Petri, Wsts, Bounded };

std::string backend_name(Backend backend);
std::optional<Backend> parse_backend(std::string_view name);

/// Counter cap used by the automatic backend choice when none is given.
inline constexpr std::uint64_t kDefaultCounterCap = 64;

struct CheckOptions {
  Backend backend = Backend::Auto;
  std::optional<std::uint64_t> cap;
  std::uint64_t value_bound = 8;
  std::uint64_t max_states = kDefaultStateBudget;
};

/// Concrete backend for `rm`; throws ModelError when `requested` does not
/// fit the machine's ADT.
Backend resolve_backend(const RegisterMachine& rm, Backend requested);

/// The machine the backend actually runs on (the tier-1 lowering for the
/// Petri backend, `rm` itself otherwise).  Verdict runs index its delta.
RegisterMachine backend_machine(const RegisterMachine& rm, Backend backend);

Verdict solve_machine(const RegisterMachine& rm, const CheckOptions& options = {});

/// build_register_machine followed by solve_machine.
Verdict check_program(const Program& program, const CheckOptions& options = {});

struct CrosscheckReport {
  Verdict oracle;
  Verdict pivot;
  Verdict machine;
  /// Human-readable descriptions of every disagreement; empty if consistent.
  std::vector<std::string> disagreements;

  bool consistent() const { return disagreements.empty(); }
};

/// Oracle reachability must be confirmed by both other legs; conclusive
/// pivot and machine verdicts must coincide; every witness must replay.
CrosscheckReport crosscheck(const Program& program, const OracleBounds& bounds, const PivotOptions& pivot_options,
                            const CheckOptions& options);

}  // namespace ptso
