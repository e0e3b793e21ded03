#include "ptso/automata.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

namespace ptso {

bool FiniteAutomaton::accepts(const std::vector<std::uint32_t>& word) const {
  std::set<std::uint32_t> current{init};
  for (auto symbol : word) {
    std::set<std::uint32_t> next;
    for (const auto& e : delta)
      if (e.symbol == symbol && current.count(e.from)) next.insert(e.to);
    current = std::move(next);
  }
  return std::any_of(current.begin(), current.end(), [&](std::uint32_t q) {
    return std::find(accepting.begin(), accepting.end(), q) != accepting.end();
  });
}

bool PushdownAutomaton::accepts(const std::vector<std::uint32_t>& word, std::size_t max_stack) const {
  using Node = std::tuple<std::uint32_t, std::size_t, std::vector<std::uint32_t>>;  // stack top = back
  std::set<Node> seen;
  std::deque<Node> queue;
  queue.emplace_back(init, 0, std::vector<std::uint32_t>{start});
  seen.insert(queue.front());
  while (!queue.empty()) {
    auto [q, pos, stack] = queue.front();
    queue.pop_front();
    if (pos == word.size() && std::find(accepting.begin(), accepting.end(), q) != accepting.end()) return true;
    if (stack.empty()) continue;
    for (const auto& t : delta) {
      if (t.from != q || t.pop != stack.back()) continue;
      std::size_t next_pos = pos;
      if (t.symbol) {
        if (pos >= word.size() || word[pos] != *t.symbol) continue;
        ++next_pos;
      }
      auto next_stack = stack;
      next_stack.pop_back();
      for (auto it = t.push.rbegin(); it != t.push.rend(); ++it) next_stack.push_back(*it);
      if (next_stack.size() > max_stack) continue;
      Node node{t.to, next_pos, std::move(next_stack)};
      if (seen.insert(node).second) queue.push_back(std::move(node));
    }
  }
  return false;
}

std::size_t automata_size(const PushdownAutomaton& pda, const std::vector<FiniteAutomaton>& fsas) {
  std::size_t size = pda.alphabet.size() + pda.stack_alphabet.size() + pda.states.size();
  for (const auto& t : pda.delta) size += 1 + t.push.size();
  for (const auto& f : fsas) size += f.states.size() + f.delta.size();
  return size;
}

std::size_t machine_size(const RegisterMachine& rm) {
  return rm.states.size() + rm.delta.size() + rm.registers.size();
}

RegisterMachine encode_intersection(const PushdownAutomaton& pda, const std::vector<FiniteAutomaton>& fsas) {
  if (pda.states.empty()) throw ModelError("pushdown automaton has no states");
  for (const auto& f : fsas)
    if (f.states.empty()) throw ModelError("finite automaton '" + f.name + "' has no states");
  for (const auto& f : fsas)
    if (f.alphabet != pda.alphabet)
      throw ModelError("finite automaton '" + f.name + "' does not share the input alphabet of '" + pda.name + "'");

  RegisterMachine rm;
  rm.name = pda.name + ".cap";
  rm.adt = AdtType::stack(pda.stack_alphabet);

  std::uint32_t bound = std::max<std::uint32_t>(static_cast<std::uint32_t>(pda.states.size()),
                                                static_cast<std::uint32_t>(pda.alphabet.size()));
  for (const auto& f : fsas) bound = std::max<std::uint32_t>(bound, static_cast<std::uint32_t>(f.states.size()));
  rm.bound = std::max<std::uint32_t>(bound, 1);

  const auto r_k = rm.add_register("r." + pda.name);
  std::vector<std::uint32_t> r_fsa;
  for (std::size_t i = 0; i < fsas.size(); ++i) r_fsa.push_back(rm.add_register("r." + std::to_string(i + 1) + "." + fsas[i].name));
  const auto r_sigma = rm.add_register("r.sym");

  const auto q_start = rm.add_state("start");
  rm.init = q_start;
  std::uint32_t cur = q_start;
  const auto chain = [&](RmAction action, const std::string& label) {
    const auto next = rm.add_state(label);
    rm.add(cur, action, next);
    cur = next;
  };
  chain(RmAction::write(r_k, pda.init + 1), "start.k");
  for (std::size_t i = 0; i < fsas.size(); ++i) chain(RmAction::write(r_fsa[i], fsas[i].init + 1), "start." + std::to_string(i + 1));
  const auto q_loop = rm.add_state("loop");
  rm.add(cur, RmAction::adt({OpCode::Push, pda.start, 0}), q_loop);

  // Emits: READ(r_K, from) pop push* WRITE(r_K, to) between two states.
  const auto pda_move = [&](std::uint32_t src, const PdaTransition& t, std::uint32_t dst, const std::string& tag) {
    std::uint32_t at = rm.add_state(tag + ".k");
    rm.add(src, RmAction::read(r_k, t.from + 1), at);
    std::uint32_t next = rm.add_state(tag + ".pop");
    rm.add(at, RmAction::adt({OpCode::Pop, t.pop, 0}), next);
    at = next;
    for (std::size_t j = t.push.size(); j-- > 0;) {
      next = rm.add_state(tag + ".push" + std::to_string(j));
      rm.add(at, RmAction::adt({OpCode::Push, t.push[j], 0}), next);
      at = next;
    }
    rm.add(at, RmAction::write(r_k, t.to + 1), dst);
  };

  for (std::uint32_t s = 0; s < pda.alphabet.size(); ++s) {
    const std::string sym_tag = "sym." + pda.alphabet[s];
    const auto q_sym = rm.add_state(sym_tag);
    rm.add(q_loop, RmAction::write(r_sigma, s + 1), q_sym);
    const auto q_pda_done = rm.add_state(sym_tag + ".fsa1");
    for (std::size_t ti = 0; ti < pda.delta.size(); ++ti) {
      const auto& t = pda.delta[ti];
      if (!t.symbol || *t.symbol != s) continue;
      pda_move(q_sym, t, q_pda_done, sym_tag + ".t" + std::to_string(ti));
    }
    std::uint32_t at = q_pda_done;
    for (std::size_t i = 0; i < fsas.size(); ++i) {
      const auto& f = fsas[i];
      const auto next = i + 1 == fsas.size() ? q_loop : rm.add_state(sym_tag + ".fsa" + std::to_string(i + 2));
      std::optional<std::uint32_t> fsa_symbol;
      for (std::uint32_t k = 0; k < f.alphabet.size(); ++k)
        if (f.alphabet[k] == pda.alphabet[s]) fsa_symbol = k;
      for (std::size_t ei = 0; ei < f.delta.size(); ++ei) {
        const auto& e = f.delta[ei];
        if (!fsa_symbol || e.symbol != *fsa_symbol) continue;
        const std::string tag = sym_tag + ".f" + std::to_string(i + 1) + ".e" + std::to_string(ei);
        const auto q_read = rm.add_state(tag);
        rm.add(at, RmAction::read(r_sigma, s + 1), q_read);
        const auto q_state = rm.add_state(tag + ".q");
        rm.add(q_read, RmAction::read(r_fsa[i], e.from + 1), q_state);
        rm.add(q_state, RmAction::write(r_fsa[i], e.to + 1), next);
      }
      at = next;
    }
    if (fsas.empty()) rm.add(q_pda_done, RmAction::skip(), q_loop);
  }
  for (std::size_t ti = 0; ti < pda.delta.size(); ++ti) {
    const auto& t = pda.delta[ti];
    if (t.symbol) continue;
    pda_move(q_loop, t, q_loop, "eps.t" + std::to_string(ti));
  }

  std::uint32_t at = rm.add_state("accept");
  for (auto f : pda.accepting) rm.add(q_loop, RmAction::read(r_k, f + 1), at);
  for (std::size_t i = 0; i < fsas.size(); ++i) {
    const auto next = rm.add_state("accept." + std::to_string(i + 1));
    for (auto f : fsas[i].accepting) rm.add(at, RmAction::read(r_fsa[i], f + 1), next);
    at = next;
  }
  rm.target = at;
  return rm;
}

CoverabilityInstance encode_rm_to_coverability(const RegisterMachine& rm) {
  if (rm.adt.kind != AdtKind::Petri && rm.adt.kind != AdtKind::Trivial)
    throw ModelError("coverability encoding needs a Petri net machine");
  if (rm.max_tier() > 1) throw ModelError("coverability encoding needs a tier-1 machine; lower it first");

  CoverabilityInstance out;
  auto& net = out.net;
  net.places = rm.adt.net.places;
  const auto adt_places = static_cast<std::uint32_t>(net.places.size());
  for (const auto& q : rm.states) net.places.push_back("p." + q);
  const std::uint32_t domain = rm.bound + 1;
  const auto reg_place = [&](std::uint32_t r, std::uint32_t d) {
    return adt_places + static_cast<std::uint32_t>(rm.states.size()) + r * domain + d;
  };
  for (const auto& r : rm.registers)
    for (std::uint32_t d = 0; d < domain; ++d) net.places.push_back("p." + r + "." + std::to_string(d));

  const std::size_t n = net.places.size();
  const auto blank = [&](const std::string& name) {
    PetriTransition t;
    t.name = name;
    t.input.assign(n, 0);
    t.output.assign(n, 0);
    return t;
  };
  for (std::size_t i = 0; i < rm.delta.size(); ++i) {
    const auto& e = rm.delta[i];
    const std::string base = "e" + std::to_string(i);
    const auto p_from = adt_places + e.from;
    const auto p_to = adt_places + e.to;
    switch (e.action.kind) {
      case ActionKind::Skip: {
        auto t = blank(base);
        t.input[p_from] += 1;
        t.output[p_to] += 1;
        net.transitions.push_back(std::move(t));
        break;
      }
      case ActionKind::Write:
        for (std::uint32_t old = 0; old < domain; ++old) {
          auto t = blank(base + "." + std::to_string(old));
          t.input[p_from] += 1;
          t.output[p_to] += 1;
          t.input[reg_place(e.action.a.value, old)] += 1;
          t.output[reg_place(e.action.a.value, e.action.b.value)] += 1;
          net.transitions.push_back(std::move(t));
        }
        break;
      case ActionKind::Read: {
        auto t = blank(base);
        t.input[p_from] += 1;
        t.output[p_to] += 1;
        const auto p = reg_place(e.action.a.value, e.action.b.value);
        t.input[p] += 1;
        t.output[p] += 1;
        net.transitions.push_back(std::move(t));
        break;
      }
      case ActionKind::Adt: {
        const auto& src = rm.adt.net.transitions[e.action.op.symbol];
        auto t = blank(base + "." + src.name);
        for (std::uint32_t p = 0; p < adt_places; ++p) {
          t.input[p] = src.input[p];
          t.output[p] = src.output[p];
        }
        t.input[p_from] += 1;
        t.output[p_to] += 1;
        net.transitions.push_back(std::move(t));
        break;
      }
      default: throw ModelError("coverability encoding needs a tier-1 machine; lower it first");
    }
  }

  net.initial.tokens.assign(n, 0);
  if (rm.adt.kind == AdtKind::Petri) {
    const auto& init = std::get<Marking>(rm.adt.initial).tokens;
    std::copy(init.begin(), init.end(), net.initial.tokens.begin());
  }
  net.initial.tokens[adt_places + rm.init] += 1;
  for (std::uint32_t r = 0; r < rm.registers.size(); ++r) net.initial.tokens[reg_place(r, 0)] += 1;
  out.target.tokens.assign(n, 0);
  out.target.tokens[adt_places + rm.target] = 1;
  return out;
}

RegisterMachine coverability_to_rm(const CoverabilityInstance& instance) {
  PetriNet net = instance.net;
  if (instance.target.tokens.size() != net.places.size()) throw ModelError("target marking does not match places");
  PetriTransition take;
  take.name = "take.target";
  take.input = instance.target.tokens;
  take.output.assign(net.places.size(), 0);
  const auto original = static_cast<Symbol>(net.transitions.size());
  net.transitions.push_back(std::move(take));

  RegisterMachine rm;
  rm.name = "cover";
  rm.adt = AdtType::petri(std::move(net));
  rm.init = rm.add_state("run");
  rm.target = rm.add_state("covered");
  for (Symbol t = 0; t < original; ++t) rm.add(rm.init, RmAction::adt({OpCode::Fire, t, 0}), rm.init);
  rm.add(rm.init, RmAction::adt({OpCode::Fire, original, 0}), rm.target);
  return rm;
}

}  // namespace ptso
