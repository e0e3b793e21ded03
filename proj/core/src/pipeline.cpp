#include "ptso/pipeline.hpp"

#include "ptso/lowering.hpp"
#include "ptso/translation.hpp"

namespace ptso {

std::string backend_name(Backend backend) {
  switch (backend) {
    case Backend::Auto: return "auto";
    case Backend::Finite: return "finite";
    case Backend::Counter: return "counter";
    case Backend::Stack: return "stack";
    case Backend::Petri: return "petri";
    case Backend::Wsts: return "wsts";
    case Backend::Bounded: return "bounded";
  }
  return "?";
}

std::optional<Backend> parse_backend(std::string_view name) {
  for (auto b : {Backend::Auto, Backend::Finite, Backend::Counter, Backend::Stack, Backend::Petri, Backend::Wsts,
                 Backend::Bounded})
    if (backend_name(b) == name) return b;
  return std::nullopt;
}

Backend resolve_backend(const RegisterMachine& rm, Backend requested) {
  const auto kind = rm.adt.kind;
  const auto incompatible = [&] {
    return ModelError("backend " + backend_name(requested) + " does not handle ADT " + std::string(kind_name(kind)));
  };
  switch (requested) {
    case Backend::Auto:
      switch (kind) {
        case AdtKind::Trivial: return Backend::Finite;
        case AdtKind::Counter: return Backend::Counter;
        case AdtKind::WeakCounter: return Backend::Wsts;
        case AdtKind::Petri: return rm.max_tier() == 1 ? Backend::Petri : Backend::Wsts;
        case AdtKind::Stack: return Backend::Stack;
        default: return Backend::Bounded;
      }
    case Backend::Finite:
      if (kind != AdtKind::Trivial) throw incompatible();
      return requested;
    case Backend::Counter:
      if (kind != AdtKind::Counter && kind != AdtKind::WeakCounter) throw incompatible();
      return requested;
    case Backend::Stack:
      if (kind != AdtKind::Stack && kind != AdtKind::Trivial) throw incompatible();
      return requested;
    case Backend::Petri:
      if (kind != AdtKind::Petri && kind != AdtKind::Trivial) throw incompatible();
      return requested;
    case Backend::Wsts:
      if (!is_well_structured(kind)) throw incompatible();
      return requested;
    case Backend::Bounded: return requested;
  }
  return requested;
}

RegisterMachine backend_machine(const RegisterMachine& rm, Backend backend) {
  if (backend == Backend::Petri && rm.max_tier() > 1) return lower_to_tier1(rm);
  return rm;
}

Verdict solve_machine(const RegisterMachine& rm, const CheckOptions& options) {
  const auto backend = resolve_backend(rm, options.backend);
  switch (backend) {
    case Backend::Finite: return solve_finite(rm, options.max_states);
    case Backend::Counter: {
      CounterOptions counter;
      counter.cap = options.cap;
      if (!counter.cap && options.backend == Backend::Auto) counter.cap = kDefaultCounterCap;
      counter.max_states = options.max_states;
      return solve_counter(rm, counter);
    }
    case Backend::Stack: return solve_stack(rm, options.max_states);
    case Backend::Petri: return solve_petri(backend_machine(rm, backend));
    case Backend::Wsts: return solve_wsts(rm, options.max_states);
    case Backend::Bounded: return explore_bounded(rm, options.value_bound, options.max_states);
    case Backend::Auto: break;
  }
  throw ModelError("unresolved backend");
}

Verdict check_program(const Program& program, const CheckOptions& options) {
  program.validate();
  return solve_machine(build_register_machine(program), options);
}

CrosscheckReport crosscheck(const Program& program, const OracleBounds& bounds, const PivotOptions& pivot_options,
                            const CheckOptions& options) {
  program.validate();
  CrosscheckReport report;
  const auto oracle = bounded_reach(program, bounds);
  report.oracle = oracle.verdict;
  const auto pivot = pivot_reach(program, pivot_options);
  report.pivot = pivot.verdict;
  const auto rm = build_register_machine(program);
  const auto backend = resolve_backend(rm, options.backend);
  report.machine = solve_machine(rm, options);

  auto& issues = report.disagreements;
  const auto reach = [](const Verdict& v) { return v.outcome == Outcome::Reachable; };
  const auto conclusive = [](const Verdict& v) { return v.outcome != Outcome::Inconclusive; };
  if (reach(report.oracle) && !reach(report.pivot))
    issues.push_back("oracle reaches the target but pivot says " + outcome_name(report.pivot.outcome));
  if (reach(report.oracle) && !reach(report.machine))
    issues.push_back("oracle reaches the target but the machine says " + outcome_name(report.machine.outcome));
  if (conclusive(report.pivot) && conclusive(report.machine) && report.pivot.outcome != report.machine.outcome)
    issues.push_back("pivot says " + outcome_name(report.pivot.outcome) + " but the machine says " +
                     outcome_name(report.machine.outcome));

  if (reach(report.oracle)) {
    const auto end = replay_tso(program, oracle.processes, oracle.run);
    bool ok = false;
    if (end)
      for (auto s : end->states) ok = ok || s == program.process.target;
    if (!ok) issues.push_back("oracle witness does not replay");
  }
  if (reach(report.pivot)) {
    const auto end = replay_pivot(program, pivot.omega, pivot.run);
    if (!end || end->q != program.process.target) issues.push_back("pivot witness does not replay");
  }
  if (reach(report.machine)) {
    const auto solved = backend_machine(rm, backend);
    const auto end = replay_rm(solved, report.machine.run);
    if (!end || end->state != solved.target) issues.push_back("machine witness does not replay");
  }
  return report;
}

}  // namespace ptso
