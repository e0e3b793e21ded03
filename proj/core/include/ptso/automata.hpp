#pragma once

// Finite and pushdown automata, Petri coverability instances, and the
// encodings between them and register machines.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ptso/adt.hpp"
#include "ptso/register_machine.hpp"

namespace ptso {

struct FiniteAutomaton {
  struct Edge {
    std::uint32_t from = 0;
    std::uint32_t symbol = 0;
    std::uint32_t to = 0;
  };

  std::string name = "F";
  std::vector<std::string> states;
  std::vector<std::string> alphabet;
  std::uint32_t init = 0;
  std::vector<std::uint32_t> accepting;
  std::vector<Edge> delta;

  bool accepts(const std::vector<std::uint32_t>& word) const;
};

/// Transition <from, symbol, pop, to, push>.  `symbol` empty means an
/// epsilon move; `push` lists the pushed word top first.
struct PdaTransition {
  std::uint32_t from = 0;
  std::optional<std::uint32_t> symbol;
  std::uint32_t pop = 0;
  std::uint32_t to = 0;
  std::vector<std::uint32_t> push;
};

/// Accepts by final state.  The stack initially holds `start` alone.
struct PushdownAutomaton {
  std::string name = "K";
  std::vector<std::string> states;
  std::vector<std::string> alphabet;
  std::vector<std::string> stack_alphabet;
  std::uint32_t init = 0;
  std::uint32_t start = 0;
  std::vector<std::uint32_t> accepting;
  std::vector<PdaTransition> delta;

  /// Bounded membership test: explores at most `max_stack` stack symbols.
  bool accepts(const std::vector<std::uint32_t>& word, std::size_t max_stack = 64) const;
};

/// Sum over all automata of states + transitions + pushed symbols, plus the
/// two alphabets.  This is the size measure the intersection encoding is
/// linear in.
std::size_t automata_size(const PushdownAutomaton& pda, const std::vector<FiniteAutomaton>& fsas);

/// States + transitions + registers.
std::size_t machine_size(const RegisterMachine& rm);

/// Constant c in machine_size(encode_intersection(...)) <= c * automata_size(...).
inline constexpr std::size_t kIntersectionSizeFactor = 8;

/// Register machine over the PDA's stack alphabet whose target is
/// reachable iff L(pda) and every L(fsa) intersect.  FSA symbols are
/// matched to PDA symbols by name.
RegisterMachine encode_intersection(const PushdownAutomaton& pda, const std::vector<FiniteAutomaton>& fsas);

struct CoverabilityInstance {
  PetriNet net;  // net.initial is the initial marking
  Marking target;
};

/// Places are the ADT places, one per control state and one per
/// (register, value) pair.  Requires a tier-1 machine over a Petri net (or
/// the trivial ADT, treated as the empty net).
CoverabilityInstance encode_rm_to_coverability(const RegisterMachine& rm);

/// Machine over the instance's net: fires transitions at will in its
/// initial state and moves to the target after consuming the target marking.
RegisterMachine coverability_to_rm(const CoverabilityInstance& instance);

}  // namespace ptso
