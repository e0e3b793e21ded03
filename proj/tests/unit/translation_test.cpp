#include <gtest/gtest.h>

#include "ptso/dsl.hpp"
#include "ptso/generators.hpp"
#include "ptso/pivot.hpp"
#include "ptso/solvers.hpp"
#include "ptso/translation.hpp"

using namespace ptso;

namespace {

const char* kTwoStates = R"(memory vars x domain 0..1
process P
state q0 init
state q1 target
trans q0 -> q1 : wr x 1
)";

}  // namespace

TEST(PivotMachine, RegisterCount) {
  const auto p = parse_program(kTwoStates);
  const auto rm = build_register_machine(p);
  // lw.x, phil.x, rank.x.0, rank.x.1, phie, philmax, phip, ranknxt
  EXPECT_EQ(rm.registers.size(), 2 * p.memory.var_count() + p.memory.message_count() + 4);
  EXPECT_EQ(rm.registers.size(), 8u);
  EXPECT_EQ(rm.bound, p.memory.message_count() + 1);
  EXPECT_EQ(rm.bound, 3u);
}

TEST(PivotMachine, LayoutPointsAtNamedRegisters) {
  const auto pm = build_pivot_machine(parse_program(kTwoStates));
  EXPECT_EQ(pm.rm.registers[pm.layout.phi_p], "phip");
  EXPECT_EQ(pm.rm.registers[pm.layout.rank_nxt], "ranknxt");
  EXPECT_EQ(pm.rm.registers[pm.layout.lw[0]], "lw.x");
  EXPECT_EQ(pm.rm.states[pm.layout.sim_state[1]], "sim.q1");
  EXPECT_EQ(pm.rm.target, pm.layout.sim_state[1]);
}

TEST(PivotMachine, EmptyOmegaDisablesWrites) {
  const auto p = parse_program(kTwoStates);
  auto rm = build_register_machine(p);
  EXPECT_EQ(solve_finite(rm).outcome, Outcome::Reachable);
  // Drop every ranking step so the initializer can only leave with nothing
  // ranked; the target needs a write, which is then never enabled.
  const auto ranking = *rm.state_index("ranking");
  std::erase_if(rm.delta, [&](const RmTransition& t) {
    return t.from == ranking && rm.states[t.to].rfind("rank.", 0) == 0;
  });
  EXPECT_EQ(solve_finite(rm).outcome, Outcome::Unreachable);
}

TEST(PivotMachine, AgreesWithPivotOnRandomPrograms) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto p = random_program(seed);
    const auto pivot = pivot_reach(p);
    const auto rm = build_register_machine(p);
    const auto machine = solve_finite(rm);
    ASSERT_NE(pivot.verdict.outcome, Outcome::Inconclusive);
    EXPECT_EQ(machine.outcome, pivot.verdict.outcome) << print_program(p);
    if (machine.outcome == Outcome::Reachable) {
      const auto end = replay_rm(rm, machine.run);
      ASSERT_TRUE(end.has_value());
      EXPECT_EQ(end->state, rm.target);
    }
  }
}

TEST(PivotMachine, CounterResetBetweenProviders) {
  // A provider increments, publishes x=1; a later provider must start from 0.
  const auto p = parse_program(R"(memory vars x domain 0..1
adt counter
process P
state s init
state a
state b
state t target
trans s -> a : op inc
trans a -> a : wr x 1
trans s -> b : rd x 1
trans b -> t : op iszero
)");
  const auto pivot = pivot_reach(p);
  EXPECT_EQ(pivot.verdict.outcome, Outcome::Reachable);
  CounterOptions options;
  options.cap = 4;
  EXPECT_EQ(solve_counter(build_register_machine(p), options).outcome, Outcome::Reachable);
}

TEST(ReverseTranslation, WriteThenReadIsReachable) {
  const auto rm = parse_machine("machine M\nregisters r domain 0..1\nstate a init\nstate b\nstate c target\n"
                                "trans a -> b : write r 1\ntrans b -> c : read r 1\n");
  const auto program = build_tso_from_rm(rm);
  EXPECT_NO_THROW(program.validate());
  EXPECT_EQ(pivot_reach(program).verdict.outcome, Outcome::Reachable);
}

TEST(ReverseTranslation, UnreachableStaysUnreachable) {
  const auto rm = parse_machine("machine M\nregisters r domain 0..1\nstate a init\nstate b\nstate c target\n"
                                "trans a -> b : write r 0\ntrans b -> c : read r 1\n");
  EXPECT_EQ(pivot_reach(build_tso_from_rm(rm)).verdict.outcome, Outcome::Unreachable);
}

TEST(ReverseTranslation, FlushedWritesCannotFakeARegister) {
  // Another simulator may flush r=1 and later r=0; the verifier must still
  // notice that memory was touched.
  const auto rm = parse_machine("machine M\nregisters r domain 0..1\nstate a init\nstate b\nstate c\nstate t target\n"
                                "trans a -> b : write r 1\ntrans b -> c : write r 0\ntrans c -> t : read r 1\n");
  EXPECT_EQ(solve_finite(rm).outcome, Outcome::Unreachable);
  EXPECT_EQ(pivot_reach(build_tso_from_rm(rm)).verdict.outcome, Outcome::Unreachable);
}

TEST(ReverseTranslation, InitialZeroStillReadable) {
  const auto rm = parse_machine("machine M\nregisters r domain 0..1\nstate a init\nstate t target\n"
                                "trans a -> t : read r 0\n");
  const auto program = build_tso_from_rm(rm);
  EXPECT_EQ(program.memory.d_max, 2u);
  EXPECT_EQ(pivot_reach(program).verdict.outcome, Outcome::Reachable);
}

TEST(ReverseTranslation, ZeroRegisters) {
  const auto rm = parse_machine("machine M\nregisters domain 0..1\nstate a init\nstate c target\ntrans a -> c : skp\n");
  const auto program = build_tso_from_rm(rm);
  EXPECT_EQ(program.memory.vars, (std::vector<std::string>{"x_s", "x_c"}));
  EXPECT_EQ(pivot_reach(program).verdict.outcome, Outcome::Reachable);
}

TEST(ReverseTranslation, RejectsHigherTiers) {
  const auto rm = parse_machine("machine M\nregisters r domain 0..1\nstate a init\nstate c target\ntrans a -> c : inc r\n");
  EXPECT_THROW(build_tso_from_rm(rm), ModelError);
}
