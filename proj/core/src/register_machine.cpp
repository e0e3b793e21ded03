#include "ptso/register_machine.hpp"

#include "ptso/hash.hpp"

namespace ptso {

int RmAction::tier() const {
  switch (kind) {
    case ActionKind::Skip:
    case ActionKind::Write:
    case ActionKind::Read:
    case ActionKind::Adt: return 1;
    case ActionKind::Inc:
    case ActionKind::Dec:
    case ActionKind::CheckZero: return 2;
    default: return 3;
  }
}

bool RmAction::is_comparison() const {
  switch (kind) {
    case ActionKind::CheckEq:
    case ActionKind::CheckNe:
    case ActionKind::CheckLt:
    case ActionKind::CheckGt:
    case ActionKind::CheckLe:
    case ActionKind::CheckGe: return true;
    default: return false;
  }
}

std::uint32_t RegisterMachine::add_state(std::string state_name) {
  states.push_back(std::move(state_name));
  return static_cast<std::uint32_t>(states.size() - 1);
}

std::uint32_t RegisterMachine::add_register(std::string register_name) {
  registers.push_back(std::move(register_name));
  return static_cast<std::uint32_t>(registers.size() - 1);
}

std::optional<std::uint32_t> RegisterMachine::state_index(std::string_view state_name) const {
  for (std::uint32_t i = 0; i < states.size(); ++i)
    if (states[i] == state_name) return i;
  return std::nullopt;
}

std::optional<std::uint32_t> RegisterMachine::register_index(std::string_view register_name) const {
  for (std::uint32_t i = 0; i < registers.size(); ++i)
    if (registers[i] == register_name) return i;
  return std::nullopt;
}

std::vector<std::vector<std::uint32_t>> RegisterMachine::outgoing() const {
  std::vector<std::vector<std::uint32_t>> out(states.size());
  for (std::uint32_t i = 0; i < delta.size(); ++i) out[delta[i].from].push_back(i);
  return out;
}

int RegisterMachine::max_tier() const {
  int tier = 1;
  for (const auto& t : delta) tier = std::max(tier, t.action.tier());
  return tier;
}

void RegisterMachine::validate() const {
  if (states.empty()) throw ModelError("machine has no states");
  if (init >= states.size() || target >= states.size()) throw ModelError("initial or target state out of range");
  const auto check_operand = [&](const Operand& o, bool must_be_register) {
    if (o.is_register) {
      if (o.value >= registers.size()) throw ModelError("undeclared register in transition");
    } else {
      if (must_be_register) throw ModelError("expected a register operand");
      if (o.value > bound) throw ModelError("literal " + std::to_string(o.value) + " exceeds register bound");
    }
  };
  for (const auto& t : delta) {
    if (t.from >= states.size() || t.to >= states.size()) throw ModelError("transition endpoint out of range");
    const auto& a = t.action;
    switch (a.kind) {
      case ActionKind::Skip: break;
      case ActionKind::Write:
      case ActionKind::Read:
        check_operand(a.a, true);
        if (a.b.is_register) throw ModelError("read/write take a literal value");
        check_operand(a.b, false);
        break;
      case ActionKind::Inc:
      case ActionKind::Dec:
      case ActionKind::CheckZero: check_operand(a.a, true); break;
      case ActionKind::Set:
        check_operand(a.a, true);
        check_operand(a.b, false);
        break;
      case ActionKind::Adt:
        try {
          validate_op(adt, a.op);
        } catch (const AdtError& e) {
          throw ModelError(e.what());
        }
        break;
      default:
        check_operand(a.a, false);
        check_operand(a.b, false);
        break;
    }
  }
  validate_value(adt, adt.initial);
}

std::size_t RmConfigurationHash::operator()(const RmConfiguration& c) const {
  std::size_t seed = c.state;
  hash_combine(seed, hash_range(c.regs));
  hash_combine(seed, hash_value(c.value));
  return seed;
}

RmConfiguration initial_configuration(const RegisterMachine& rm) {
  return {rm.init, std::vector<std::uint32_t>(rm.registers.size(), 0), rm.adt.initial};
}

namespace {

std::uint32_t eval(const RmConfiguration& cfg, const Operand& o) { return o.is_register ? cfg.regs[o.value] : o.value; }

}  // namespace

std::optional<RmConfiguration> rm_apply(const RegisterMachine& rm, const RmConfiguration& cfg, const RmTransition& t) {
  if (t.from != cfg.state) return std::nullopt;
  const auto& a = t.action;
  const auto x = [&] { return eval(cfg, a.a); };
  const auto y = [&] { return eval(cfg, a.b); };
  bool enabled = true;
  RmConfiguration next;
  switch (a.kind) {
    case ActionKind::Skip: break;
    case ActionKind::Write:
      next = cfg;
      next.regs[a.a.value] = a.b.value;
      next.state = t.to;
      return next;
    case ActionKind::Read: enabled = x() == a.b.value; break;
    case ActionKind::Inc:
      if (x() >= rm.bound) return std::nullopt;
      next = cfg;
      ++next.regs[a.a.value];
      next.state = t.to;
      return next;
    case ActionKind::Dec:
      if (x() == 0) return std::nullopt;
      next = cfg;
      --next.regs[a.a.value];
      next.state = t.to;
      return next;
    case ActionKind::CheckZero: enabled = x() == 0; break;
    case ActionKind::Set:
      next = cfg;
      next.regs[a.a.value] = y();
      next.state = t.to;
      return next;
    case ActionKind::CheckEq: enabled = x() == y(); break;
    case ActionKind::CheckNe: enabled = x() != y(); break;
    case ActionKind::CheckLt: enabled = x() < y(); break;
    case ActionKind::CheckGt: enabled = x() > y(); break;
    case ActionKind::CheckLe: enabled = x() <= y(); break;
    case ActionKind::CheckGe: enabled = x() >= y(); break;
    case ActionKind::Adt: {
      auto value = adt_apply(rm.adt, cfg.value, a.op);
      if (!value) return std::nullopt;
      return RmConfiguration{t.to, cfg.regs, std::move(*value)};
    }
  }
  if (!enabled) return std::nullopt;
  next = cfg;
  next.state = t.to;
  return next;
}

std::optional<std::vector<std::uint32_t>> apply_to_registers(const RegisterMachine& rm,
                                                             const std::vector<std::uint32_t>& regs,
                                                             const RmAction& action) {
  if (action.kind == ActionKind::Adt) return regs;
  RmConfiguration probe{0, regs, std::monostate{}};
  auto next = rm_apply(rm, probe, RmTransition{0, action, 0});
  if (!next) return std::nullopt;
  return std::move(next->regs);
}

std::vector<std::pair<std::uint32_t, RmConfiguration>> rm_step(const RegisterMachine& rm, const RmConfiguration& cfg) {
  std::vector<std::pair<std::uint32_t, RmConfiguration>> out;
  for (std::uint32_t i = 0; i < rm.delta.size(); ++i) {
    if (rm.delta[i].from != cfg.state) continue;
    if (auto next = rm_apply(rm, cfg, rm.delta[i])) out.emplace_back(i, std::move(*next));
  }
  return out;
}

std::optional<RmConfiguration> replay_rm(const RegisterMachine& rm, const std::vector<std::uint32_t>& run) {
  RmConfiguration cfg = initial_configuration(rm);
  for (auto index : run) {
    if (index >= rm.delta.size()) return std::nullopt;
    auto next = rm_apply(rm, cfg, rm.delta[index]);
    if (!next) return std::nullopt;
    cfg = std::move(*next);
  }
  return cfg;
}

namespace {

std::string operand_text(const RegisterMachine& rm, const Operand& o) {
  return o.is_register ? rm.registers[o.value] : std::to_string(o.value);
}

}  // namespace

std::string format_action(const RegisterMachine& rm, const RmAction& a) {
  const auto one = [&](const char* name) { return std::string(name) + " " + operand_text(rm, a.a); };
  const auto two = [&](const char* name) {
    return std::string(name) + " " + operand_text(rm, a.a) + " " + operand_text(rm, a.b);
  };
  switch (a.kind) {
    case ActionKind::Skip: return "skp";
    case ActionKind::Write: return two("write");
    case ActionKind::Read: return two("read");
    case ActionKind::Inc: return one("inc");
    case ActionKind::Dec: return one("dec");
    case ActionKind::CheckZero: return one("ckz");
    case ActionKind::Set: return two("set");
    case ActionKind::CheckEq: return two("cke");
    case ActionKind::CheckNe: return two("ckne");
    case ActionKind::CheckLt: return two("ckl");
    case ActionKind::CheckGt: return two("ckg");
    case ActionKind::CheckLe: return two("ckle");
    case ActionKind::CheckGe: return two("ckge");
    case ActionKind::Adt: return "op " + format_op(rm.adt, a.op);
  }
  return "?";
}

std::string format_configuration(const RegisterMachine& rm, const RmConfiguration& cfg) {
  std::string out = rm.states[cfg.state] + " {";
  for (std::size_t r = 0; r < cfg.regs.size(); ++r) {
    if (r) out += ",";
    out += rm.registers[r] + "=" + std::to_string(cfg.regs[r]);
  }
  out += "}";
  if (rm.adt.kind != AdtKind::Trivial) out += " " + format_value(rm.adt, cfg.value);
  return out;
}

}  // namespace ptso
