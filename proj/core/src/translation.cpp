#include "ptso/translation.hpp"

#include <algorithm>

namespace ptso {

namespace {

Operand R(std::uint32_t r) { return Operand::reg(r); }
Operand L(std::uint32_t v) { return Operand::lit(v); }

// Net with one copy of every place and transition per provider rank.
PetriNet provider_copies(const PetriNet& base, std::uint32_t copies) {
  PetriNet net;
  const auto n = base.places.size();
  for (std::uint32_t k = 1; k <= copies; ++k)
    for (const auto& p : base.places) net.places.push_back(p + "@" + std::to_string(k));
  const auto total = net.places.size();
  for (std::uint32_t k = 1; k <= copies; ++k) {
    for (const auto& t : base.transitions) {
      PetriTransition c;
      c.name = t.name + "@" + std::to_string(k);
      c.input.assign(total, 0);
      c.output.assign(total, 0);
      for (std::size_t p = 0; p < n; ++p) {
        c.input[(k - 1) * n + p] = t.input[p];
        c.output[(k - 1) * n + p] = t.output[p];
      }
      net.transitions.push_back(std::move(c));
    }
  }
  net.initial.tokens.assign(total, 0);
  for (std::uint32_t k = 1; k <= copies; ++k)
    for (std::size_t p = 0; p < n; ++p) net.initial.tokens[(k - 1) * n + p] = base.initial.tokens[p];
  return net;
}

PetriNet weak_counter_net() {
  PetriNet net;
  net.places = {"c"};
  net.transitions.push_back({"inc", {0}, {1}});
  net.transitions.push_back({"dec", {1}, {0}});
  net.initial.tokens = {0};
  return net;
}

class Builder {
 public:
  explicit Builder(RegisterMachine& rm) : rm_(rm) {}

  std::uint32_t state(const std::string& name) { return rm_.add_state(name); }
  std::uint32_t fresh(const std::string& tag) { return rm_.add_state(tag + "." + std::to_string(counter_++)); }
  void edge(std::uint32_t from, RmAction a, std::uint32_t to) { rm_.add(from, a, to); }
  /// Chain of actions from `from` to `to` through fresh states.
  void chain(std::uint32_t from, const std::vector<RmAction>& actions, std::uint32_t to, const std::string& tag) {
    std::uint32_t at = from;
    for (std::size_t i = 0; i < actions.size(); ++i) {
      const auto next = i + 1 == actions.size() ? to : fresh(tag);
      edge(at, actions[i], next);
      at = next;
    }
    if (actions.empty()) edge(from, RmAction::skip(), to);
  }
  /// target := max(target, source), from `from` to `to`.
  void raise(std::uint32_t from, std::uint32_t target, Operand source, std::uint32_t to, const std::string& tag) {
    edge(from, RmAction::compare(ActionKind::CheckGe, R(target), source), to);
    chain(from, {RmAction::compare(ActionKind::CheckLt, R(target), source), RmAction::set(target, source)}, to, tag);
  }

 private:
  RegisterMachine& rm_;
  std::uint32_t counter_ = 0;
};

}  // namespace

PivotMachine build_pivot_machine(const Program& program) {
  program.validate();
  const auto& mem = program.memory;
  const auto& proc = program.process;
  PivotMachine out;
  auto& rm = out.rm;
  auto& lay = out.layout;
  rm.name = proc.name + ".rm";
  const std::uint32_t n_msg = mem.message_count();
  rm.bound = n_msg + 1;

  for (const auto& x : mem.vars) lay.lw.push_back(rm.add_register("lw." + x));
  for (const auto& x : mem.vars) lay.phi_l.push_back(rm.add_register("phil." + x));
  for (std::uint32_t m = 0; m < n_msg; ++m)
    lay.rank_m.push_back(rm.add_register("rank." + mem.vars[mem.message_var(m)] + "." +
                                         std::to_string(mem.message_value(m))));
  lay.phi_e = rm.add_register("phie");
  lay.phi_l_max = rm.add_register("philmax");
  lay.phi_p = rm.add_register("phip");
  lay.rank_nxt = rm.add_register("ranknxt");

  // Per-provider net copies for weak counters and Petri nets.
  const bool per_provider = program.adt.kind == AdtKind::WeakCounter || program.adt.kind == AdtKind::Petri;
  std::size_t base_transitions = 0;
  if (per_provider) {
    const PetriNet base = program.adt.kind == AdtKind::Petri ? program.adt.net : weak_counter_net();
    base_transitions = base.transitions.size();
    rm.adt = AdtType::petri(provider_copies(base, rm.bound));
  } else {
    rm.adt = program.adt;
  }

  Builder b(rm);
  rm.init = b.state("rankinit");
  const auto ranking = b.state("ranking");
  for (const auto& q : proc.states) lay.sim_state.push_back(b.state("sim." + q));
  lay.pointer_init = b.state("ptrinit");
  rm.target = lay.sim_state[proc.target];

  // Rank initializer: guess omega by ranking unranked messages in order.
  b.edge(rm.init, RmAction::set(lay.rank_nxt, L(1)), ranking);
  for (std::uint32_t m = 0; m < n_msg; ++m) {
    b.chain(ranking,
            {RmAction::compare(ActionKind::CheckEq, R(lay.rank_m[m]), L(0)),
             RmAction::set(lay.rank_m[m], R(lay.rank_nxt)), RmAction::inc(lay.rank_nxt)},
            ranking, "rank");
  }
  b.edge(ranking, RmAction::set(lay.phi_p, L(1)), lay.sim_state[proc.init]);

  // Pointer initializer: reset everything except phi_P, reset the ADT, then
  // advance to the next provider.
  {
    std::vector<RmAction> resets{RmAction::set(lay.phi_e, L(0))};
    for (auto r : lay.phi_l) resets.push_back(RmAction::set(r, L(0)));
    resets.push_back(RmAction::set(lay.phi_l_max, L(0)));
    for (auto r : lay.lw) resets.push_back(RmAction::set(r, L(0)));
    const auto cleared = b.fresh("ptr");
    b.chain(lay.pointer_init, resets, cleared, "ptr");
    std::uint32_t adt_done = b.fresh("ptr");
    const auto& adt = program.adt;
    switch (adt.kind) {
      case AdtKind::Counter:
        b.edge(cleared, RmAction::adt({OpCode::Dec, 0, 0}), cleared);
        b.edge(cleared, RmAction::adt({OpCode::IsZero, 0, 0}), adt_done);
        break;
      case AdtKind::Stack:
        for (Symbol g = 0; g < adt.alphabet.size(); ++g) b.edge(cleared, RmAction::adt({OpCode::Pop, g, 0}), cleared);
        b.edge(cleared, RmAction::adt({OpCode::IsEmpty, 0, 0}), adt_done);
        break;
      case AdtKind::MultiStack: {
        std::uint32_t at = cleared;
        for (std::uint32_t i = 1; i <= adt.level; ++i) {
          for (Symbol g = 0; g < adt.alphabet.size(); ++g) b.edge(at, RmAction::adt({OpCode::Pop, g, i}), at);
          const auto next = i == adt.level ? adt_done : b.fresh("drain");
          b.edge(at, RmAction::adt({OpCode::IsEmpty, 0, i}), next);
          at = next;
        }
        break;
      }
      case AdtKind::HoStack:
      case AdtKind::HoCounter:
      case AdtKind::HoWeakCounter: b.edge(cleared, RmAction::adt({OpCode::Reset, 0, 0}), adt_done); break;
      default: b.edge(cleared, RmAction::skip(), adt_done); break;
    }
    b.edge(adt_done, RmAction::inc(lay.phi_p), lay.sim_state[proc.init]);
  }

  const auto cmp = [](ActionKind k, Operand x, Operand y) { return RmAction::compare(k, x, y); };
  for (const auto& t : proc.delta) {
    const auto from = lay.sim_state[t.from];
    const auto to = lay.sim_state[t.to];
    const auto& instr = t.instr;
    const std::string tag = "sim." + proc.states[t.from];
    switch (instr.kind) {
      case InstrKind::Skip: b.edge(from, RmAction::skip(), to); break;
      case InstrKind::Op: {
        if (!per_provider) {
          b.edge(from, RmAction::adt(instr.op), to);
          break;
        }
        Symbol base = instr.op.symbol;
        if (program.adt.kind == AdtKind::WeakCounter) base = instr.op.code == OpCode::Inc ? 0 : 1;
        for (std::uint32_t k = 1; k <= rm.bound; ++k) {
          const Symbol copy = static_cast<Symbol>((k - 1) * base_transitions + base);
          b.chain(from, {cmp(ActionKind::CheckEq, R(lay.phi_p), L(k)), RmAction::adt({OpCode::Fire, copy, 0})}, to,
                  tag + ".op");
        }
        break;
      }
      case InstrKind::Write: {
        const auto rank = lay.rank_m[mem.message_index(instr.var, instr.value)];
        // write(2): this provider's pivot.
        b.edge(from, cmp(ActionKind::CheckEq, R(rank), R(lay.phi_p)), lay.pointer_init);
        // write(1)
        const auto guarded = b.fresh(tag + ".w");
        b.chain(from,
                {cmp(ActionKind::CheckNe, R(rank), L(0)), cmp(ActionKind::CheckLt, R(rank), R(lay.phi_p)),
                 RmAction::set(lay.lw[instr.var], L(instr.value + 1))},
                guarded, tag + ".w");
        const auto raised = b.fresh(tag + ".w");
        b.raise(guarded, lay.phi_l_max, R(rank), raised, tag + ".w");
        b.edge(raised, RmAction::set(lay.phi_l[instr.var], R(lay.phi_l_max)), to);
        break;
      }
      case InstrKind::Read: {
        const auto x = instr.var;
        const auto d = instr.value;
        const auto rank = lay.rank_m[mem.message_index(x, d)];
        // read(1): own last write
        b.edge(from, cmp(ActionKind::CheckEq, R(lay.lw[x]), L(d + 1)), to);
        // read(3): from memory
        const auto ranked = b.fresh(tag + ".r");
        b.chain(from, {cmp(ActionKind::CheckNe, R(rank), L(0)), cmp(ActionKind::CheckLt, R(rank), R(lay.phi_p))},
                ranked, tag + ".r");
        const auto mid = b.fresh(tag + ".r");
        b.raise(ranked, lay.phi_e, R(lay.phi_l[x]), mid, tag + ".r");
        b.raise(mid, lay.phi_e, R(rank), to, tag + ".r");
        // read(2): initial value, every message on x unranked or ranked above phi_E
        if (d == 0) {
          std::uint32_t at = b.fresh(tag + ".i");
          b.edge(from, cmp(ActionKind::CheckEq, R(lay.lw[x]), L(0)), at);
          for (std::uint32_t v = 0; v < mem.domain_size(); ++v) {
            const auto r = lay.rank_m[mem.message_index(x, v)];
            const auto next = v + 1 == mem.domain_size() ? to : b.fresh(tag + ".i");
            b.edge(at, cmp(ActionKind::CheckEq, R(r), L(0)), next);
            b.edge(at, cmp(ActionKind::CheckGt, R(r), R(lay.phi_e)), next);
            at = next;
          }
        }
        break;
      }
      case InstrKind::Fence: b.raise(from, lay.phi_e, R(lay.phi_l_max), to, tag + ".f"); break;
    }
  }
  return out;
}

RegisterMachine build_register_machine(const Program& program) { return build_pivot_machine(program).rm; }

Program build_tso_from_rm(const RegisterMachine& rm) {
  if (rm.max_tier() > 1) throw ModelError("reverse translation needs a tier-1 machine; lower it first");
  rm.validate();
  Program program;
  program.adt = rm.adt;
  auto& mem = program.memory;
  mem.vars = rm.registers;
  const auto unique = [&](std::string name) {
    while (std::find(mem.vars.begin(), mem.vars.end(), name) != mem.vars.end()) name += "_";
    return name;
  };
  const auto x_s = static_cast<std::uint32_t>(mem.vars.size());
  mem.vars.push_back(unique("x_s"));
  const auto x_c = static_cast<std::uint32_t>(mem.vars.size());
  mem.vars.push_back(unique("x_c"));
  // Register value d is stored as d + 1, so a register variable that ever
  // reached memory can never look untouched to the verifier again.
  mem.d_max = rm.bound + 1;

  auto& p = program.process;
  p.name = rm.name + ".tso";
  p.init = p.add_state("start");
  std::vector<std::uint32_t> sim;
  for (const auto& q : rm.states) sim.push_back(p.add_state("sim." + q));
  for (const auto& t : rm.delta) {
    const auto& a = t.action;
    switch (a.kind) {
      case ActionKind::Skip: p.add(sim[t.from], Instruction::skip(), sim[t.to]); break;
      case ActionKind::Write: p.add(sim[t.from], Instruction::write(a.a.value, a.b.value + 1), sim[t.to]); break;
      case ActionKind::Read:
        p.add(sim[t.from], Instruction::read(a.a.value, a.b.value + 1), sim[t.to]);
        if (a.b.value == 0) p.add(sim[t.from], Instruction::read(a.a.value, 0), sim[t.to]);
        break;
      case ActionKind::Adt: p.add(sim[t.from], Instruction::adt(a.op), sim[t.to]); break;
      default: throw ModelError("reverse translation needs a tier-1 machine; lower it first");
    }
  }
  p.add(p.init, Instruction::skip(), sim[rm.init]);

  const auto check_s = p.add_state("sim.done");
  p.target = p.add_state("final");
  p.add(sim[rm.target], Instruction::read(x_s, 0), check_s);
  p.add(check_s, Instruction::read(x_c, 1), p.target);

  const auto sched = p.add_state("sched");
  const auto sched_done = p.add_state("sched.done");
  p.add(p.init, Instruction::skip(), sched);
  p.add(sched, Instruction::write(x_s, 1), sched_done);

  std::uint32_t at = p.add_state("verify");
  p.add(p.init, Instruction::skip(), at);
  auto next = p.add_state("verify.s");
  p.add(at, Instruction::read(x_s, 1), next);
  at = next;
  for (std::uint32_t r = 0; r < rm.registers.size(); ++r) {
    next = p.add_state("verify." + rm.registers[r]);
    p.add(at, Instruction::read(r, 0), next);
    at = next;
  }
  next = p.add_state("verify.done");
  p.add(at, Instruction::write(x_c, 1), next);
  return program;
}

}  // namespace ptso
