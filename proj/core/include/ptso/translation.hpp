#pragma once

// Pivot semantics to register machine, and register machine back to a
// parameterized TSO program.

#include <cstdint>
#include <vector>

#include "ptso/program.hpp"
#include "ptso/register_machine.hpp"

namespace ptso {

/// Register indices of a machine built by build_register_machine.
struct RmLayout {
  std::vector<std::uint32_t> lw;      // per variable; value d stored as d+1, 0 = no write
  std::vector<std::uint32_t> phi_l;   // per variable
  std::vector<std::uint32_t> rank_m;  // per message; 0 = not in omega
  std::uint32_t phi_e = 0;
  std::uint32_t phi_l_max = 0;
  std::uint32_t phi_p = 0;
  std::uint32_t rank_nxt = 0;
  std::vector<std::uint32_t> sim_state;  // process state -> machine state
  std::uint32_t pointer_init = 0;        // entry of the pointer initializer
};

struct PivotMachine {
  RegisterMachine rm;
  RmLayout layout;
};

/// Machine whose target is reachable iff the program's target is reachable
/// under the pivot semantics.  Uses tier-3 actions.  ADT values are reset
/// between providers: counters and stacks by draining, higher-order stacks
/// by their reset operation, weak counters and Petri nets by giving each
/// provider its own copy of the net.
PivotMachine build_pivot_machine(const Program& program);
RegisterMachine build_register_machine(const Program& program);

/// Three-role program (simulator, scheduler, verifier) whose target is
/// reachable for some number of processes iff the machine reaches its
/// target.  Requires a tier-1 machine.
Program build_tso_from_rm(const RegisterMachine& rm);

}  // namespace ptso
