#include "ptso/program.hpp"

namespace ptso {

std::optional<std::uint32_t> MemoryLayout::var_index(std::string_view name) const {
  for (std::uint32_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return i;
  return std::nullopt;
}

std::uint32_t ProcessDescription::add_state(std::string state_name) {
  states.push_back(std::move(state_name));
  return static_cast<std::uint32_t>(states.size() - 1);
}

std::optional<std::uint32_t> ProcessDescription::state_index(std::string_view state_name) const {
  for (std::uint32_t i = 0; i < states.size(); ++i)
    if (states[i] == state_name) return i;
  return std::nullopt;
}

std::vector<std::vector<std::uint32_t>> ProcessDescription::outgoing() const {
  std::vector<std::vector<std::uint32_t>> out(states.size());
  for (std::uint32_t i = 0; i < delta.size(); ++i) out[delta[i].from].push_back(i);
  return out;
}

void Program::validate() const {
  const auto& p = process;
  if (p.states.empty()) throw ModelError("process has no states");
  if (p.init >= p.states.size()) throw ModelError("initial state out of range");
  if (p.target >= p.states.size()) throw ModelError("target state out of range");
  for (const auto& t : p.delta) {
    if (t.from >= p.states.size() || t.to >= p.states.size()) throw ModelError("transition endpoint out of range");
    switch (t.instr.kind) {
      case InstrKind::Read:
      case InstrKind::Write:
        if (t.instr.var >= memory.var_count()) throw ModelError("undeclared variable in transition");
        if (t.instr.value > memory.d_max)
          throw ModelError("value " + std::to_string(t.instr.value) + " outside domain of " + memory.vars[t.instr.var]);
        break;
      case InstrKind::Op:
        try {
          validate_op(adt, t.instr.op);
        } catch (const AdtError& e) {
          throw ModelError(e.what());
        }
        break;
      default: break;
    }
  }
  validate_value(adt, adt.initial);
}

std::string format_instruction(const Program& program, const Instruction& instr) {
  switch (instr.kind) {
    case InstrKind::Read: return "rd " + program.memory.vars[instr.var] + " " + std::to_string(instr.value);
    case InstrKind::Write: return "wr " + program.memory.vars[instr.var] + " " + std::to_string(instr.value);
    case InstrKind::Skip: return "skip";
    case InstrKind::Fence: return "mf";
    case InstrKind::Op: return "op " + format_op(program.adt, instr.op);
  }
  return "?";
}

}  // namespace ptso
