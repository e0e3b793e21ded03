#include "ptso/generators.hpp"

#include <random>

namespace ptso {

namespace {

class Dice {
 public:
  explicit Dice(std::uint64_t seed) : engine_(seed) {}

  // uniform in lo..hi inclusive
  std::uint32_t between(std::uint32_t lo, std::uint32_t hi) {
    return std::uniform_int_distribution<std::uint32_t>(lo, hi)(engine_);
  }
  std::uint32_t below(std::uint32_t n) { return between(0, n - 1); }
  bool chance(double p) { return std::bernoulli_distribution(p)(engine_); }

 private:
  std::mt19937_64 engine_;
};

std::vector<std::string> names(const char* prefix, std::uint32_t count) {
  std::vector<std::string> out;
  for (std::uint32_t i = 0; i < count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

Program program_skeleton(Dice& dice, const RandomProgramOptions& options, AdtType adt) {
  Program p;
  const std::uint32_t vars = dice.between(1, options.max_vars);
  static const char* const kVarNames[] = {"x", "y", "z", "w"};
  for (std::uint32_t v = 0; v < vars; ++v)
    p.memory.vars.push_back(v < 4 ? kVarNames[v] : "v" + std::to_string(v));
  p.memory.d_max = options.d_max;
  p.adt = std::move(adt);
  const std::uint32_t states = dice.between(2, options.max_states);
  for (const auto& s : names("q", states)) p.process.add_state(s);
  p.process.init = 0;
  p.process.target = dice.between(1, states - 1);
  return p;
}

Instruction memory_instruction(Dice& dice, const MemoryLayout& memory) {
  const auto var = dice.below(memory.var_count());
  const auto value = dice.between(0, memory.d_max);
  switch (dice.below(6)) {
    case 0:
    case 1: return Instruction::read(var, value);
    case 2:
    case 3: return Instruction::write(var, value);
    case 4: return Instruction::skip();
    default: return Instruction::fence();
  }
}

// An edge from -> to lies on a cycle iff `to` reaches `from`.
template <typename Edge>
std::vector<bool> on_cycle(std::uint32_t states, const std::vector<Edge>& delta) {
  std::vector<std::vector<bool>> reach(states, std::vector<bool>(states, false));
  for (std::uint32_t q = 0; q < states; ++q) reach[q][q] = true;
  for (const auto& t : delta) reach[t.from][t.to] = true;
  for (std::uint32_t k = 0; k < states; ++k)
    for (std::uint32_t i = 0; i < states; ++i)
      for (std::uint32_t j = 0; j < states; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  std::vector<bool> out;
  for (const auto& t : delta) out.push_back(reach[t.to][t.from]);
  return out;
}

}  // namespace

Program random_program(std::uint64_t seed, const RandomProgramOptions& options) {
  Dice dice(seed);
  Program p = program_skeleton(dice, options, AdtType::trivial());
  const auto states = static_cast<std::uint32_t>(p.process.states.size());
  for (std::uint32_t q = 0; q < states; ++q) {
    const auto out = dice.between(1, options.max_out);
    for (std::uint32_t i = 0; i < out; ++i)
      p.process.add(q, memory_instruction(dice, p.memory), dice.below(states));
  }
  return p;
}

Program random_bounded_counter_program(std::uint64_t seed, const RandomProgramOptions& options) {
  Dice dice(seed);
  Program p = program_skeleton(dice, options, AdtType::counter());
  const auto states = static_cast<std::uint32_t>(p.process.states.size());
  for (std::uint32_t q = 0; q < states; ++q) {
    const auto out = dice.between(1, options.max_out);
    for (std::uint32_t i = 0; i < out; ++i) {
      Instruction instr;
      switch (dice.below(3)) {
        case 0: instr = Instruction::adt({OpCode::Inc, 0, 0}); break;
        case 1: instr = Instruction::adt({dice.chance(0.5) ? OpCode::Dec : OpCode::IsZero, 0, 0}); break;
        default: instr = memory_instruction(dice, p.memory); break;
      }
      p.process.add(q, instr, dice.below(states));
    }
  }
  const auto cyclic = on_cycle(states, p.process.delta);
  for (std::size_t i = 0; i < p.process.delta.size(); ++i) {
    auto& t = p.process.delta[i];
    if (cyclic[i] && t.instr.kind == InstrKind::Op && t.instr.op.code == OpCode::Inc) t.instr = Instruction::skip();
  }
  return p;
}

RegisterMachine random_machine(std::uint64_t seed, const RandomMachineOptions& options) {
  Dice dice(seed);
  RegisterMachine rm;
  rm.name = "R" + std::to_string(seed);
  rm.adt = options.adt;
  rm.bound = options.bound;
  const std::uint32_t states = dice.between(2, options.max_states);
  for (const auto& s : names("q", states)) rm.add_state(s);
  const std::uint32_t registers = dice.between(options.max_registers == 0 ? 0 : 1, options.max_registers);
  for (const auto& r : names("r", registers)) rm.add_register(r);
  rm.init = 0;
  rm.target = dice.between(1, states - 1);
  const auto ops = rm.adt.kind == AdtKind::Trivial ? std::vector<AdtOp>{} : all_ops(rm.adt);

  const auto operand = [&] {
    if (registers > 0 && dice.chance(0.6)) return Operand::reg(dice.below(registers));
    return Operand::lit(dice.between(0, rm.bound));
  };
  const auto action = [&]() -> RmAction {
    const int tier = static_cast<int>(dice.between(1, static_cast<std::uint32_t>(options.tier)));
    if (!ops.empty() && dice.chance(0.35)) return RmAction::adt(ops[dice.below(static_cast<std::uint32_t>(ops.size()))]);
    if (registers == 0) return RmAction::skip();
    const auto r = dice.below(registers);
    if (tier == 1) {
      switch (dice.below(5)) {
        case 0: return RmAction::skip();
        case 1:
        case 2: return RmAction::write(r, dice.between(0, rm.bound));
        default: return RmAction::read(r, dice.between(0, rm.bound));
      }
    }
    if (tier == 2) {
      switch (dice.below(3)) {
        case 0: return RmAction::inc(r);
        case 1: return RmAction::dec(r);
        default: return RmAction::check_zero(r);
      }
    }
    static const ActionKind kCompares[] = {ActionKind::CheckEq, ActionKind::CheckNe, ActionKind::CheckLt,
                                           ActionKind::CheckGt, ActionKind::CheckLe, ActionKind::CheckGe};
    if (dice.chance(0.4)) return RmAction::set(r, operand());
    return RmAction::compare(kCompares[dice.below(6)], operand(), operand());
  };

  for (std::uint32_t q = 0; q < states; ++q) {
    const auto out = dice.between(1, options.max_out);
    for (std::uint32_t i = 0; i < out; ++i) rm.add(q, action(), dice.below(states));
  }
  return rm;
}

RegisterMachine random_counter_machine(std::uint64_t seed) {
  RandomMachineOptions options;
  options.max_states = 4;
  options.max_registers = 1;
  options.bound = 1;
  options.adt = AdtType::counter();
  options.max_out = 3;
  return random_machine(seed, options);
}

RegisterMachine random_bounded_counter_machine(std::uint64_t seed, RandomMachineOptions options) {
  options.adt = AdtType::counter();
  auto rm = random_machine(seed, options);
  const auto cyclic = on_cycle(static_cast<std::uint32_t>(rm.states.size()), rm.delta);
  for (std::size_t i = 0; i < rm.delta.size(); ++i) {
    auto& a = rm.delta[i].action;
    if (cyclic[i] && a.kind == ActionKind::Adt && a.op.code == OpCode::Inc) a = RmAction::skip();
  }
  return rm;
}

RegisterMachine random_stack_machine(std::uint64_t seed) {
  RandomMachineOptions options;
  options.max_states = 5;
  options.max_registers = 1;
  options.bound = 1;
  options.adt = AdtType::stack({"a", "b"});
  options.max_out = 3;
  return random_machine(seed, options);
}

CoverabilityInstance random_net(std::uint64_t seed) {
  Dice dice(seed);
  CoverabilityInstance out;
  auto& net = out.net;
  const std::uint32_t places = dice.between(1, 3);
  net.places = names("p", places);
  const std::uint32_t transitions = dice.between(1, 3);
  for (std::uint32_t t = 0; t < transitions; ++t) {
    PetriTransition tr;
    tr.name = "t" + std::to_string(t);
    tr.input.assign(places, 0);
    tr.output.assign(places, 0);
    for (std::uint32_t p = 0; p < places; ++p) {
      if (dice.chance(0.4)) tr.input[p] = dice.between(1, 2);
      if (dice.chance(0.4)) tr.output[p] = dice.between(1, 2);
    }
    net.transitions.push_back(std::move(tr));
  }
  net.initial.tokens.assign(places, 0);
  for (auto& n : net.initial.tokens) n = dice.chance(0.5) ? dice.between(1, 2) : 0;
  out.target.tokens.assign(places, 0);
  const std::uint32_t tokens = dice.between(1, 2);
  for (std::uint32_t i = 0; i < tokens; ++i) ++out.target.tokens[dice.below(places)];
  return out;
}

}  // namespace ptso
