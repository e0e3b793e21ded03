#include <gtest/gtest.h>

#include <map>
#include <set>

#include "ptso/dsl.hpp"
#include "ptso/generators.hpp"
#include "ptso/solvers.hpp"

using namespace ptso;

namespace {

void expect_replays(const RegisterMachine& rm, const Verdict& v) {
  ASSERT_EQ(v.outcome, Outcome::Reachable);
  const auto end = replay_rm(rm, v.run);
  ASSERT_TRUE(end.has_value());
  EXPECT_EQ(end->state, rm.target);
  EXPECT_EQ(v.witness.size(), v.run.size());
}

// Enumerates every (state, registers) configuration of a trivial-ADT
// machine and iterates the step relation to a fixpoint.
bool brute_force_reach(const RegisterMachine& rm) {
  std::set<std::pair<std::uint32_t, std::vector<std::uint32_t>>> reached;
  reached.emplace(rm.init, std::vector<std::uint32_t>(rm.registers.size(), 0));
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [q, regs] : std::set(reached))
      for (const auto& t : rm.delta)
        if (auto next = rm_apply(rm, RmConfiguration{q, regs, std::monostate{}}, t))
          changed |= reached.emplace(next->state, next->regs).second;
  }
  for (const auto& [q, regs] : reached)
    if (q == rm.target) return true;
  return false;
}

RegisterMachine counter_machine(const std::string& body) {
  return parse_machine("adt counter\nmachine C\nregisters domain 0..1\n" + body);
}

}  // namespace

TEST(Finite, WriteThenRead) {
  const auto rm = parse_machine("machine M\nregisters r domain 0..1\nstate a init\nstate b\nstate t target\n"
                                "trans a -> b : write r 1\ntrans b -> t : read r 1\n");
  const auto v = solve_finite(rm);
  expect_replays(rm, v);
  EXPECT_EQ(v.run.size(), 2u);
}

TEST(Finite, ReadWithoutWrite) {
  const auto rm = parse_machine("machine M\nregisters r domain 0..1\nstate a init\nstate t target\n"
                                "trans a -> t : read r 1\n");
  EXPECT_EQ(solve_finite(rm).outcome, Outcome::Unreachable);
}

TEST(Finite, MatchesBruteForce) {
  RandomMachineOptions options;
  options.tier = 3;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto rm = random_machine(seed, options);
    const auto v = solve_finite(rm);
    EXPECT_EQ(v.outcome == Outcome::Reachable, brute_force_reach(rm)) << print_machine(rm);
    EXPECT_NE(v.outcome, Outcome::Inconclusive);
    if (v.outcome == Outcome::Reachable) expect_replays(rm, v);
  }
}

TEST(Finite, BudgetGivesInconclusive) {
  const auto rm = parse_machine("machine M\nregisters r domain 0..3\nstate a init\nstate t target\n"
                                "trans a -> a : inc r\ntrans a -> t : read r 3\n");
  EXPECT_EQ(solve_finite(rm, 2).outcome, Outcome::Inconclusive);
}

TEST(Counter, CountUpAndBackDown) {
  const auto rm = counter_machine(
      "state s init\nstate a\nstate b\nstate c\nstate d\nstate e\nstate f\nstate t target\n"
      "trans s -> a : op inc\ntrans a -> b : op inc\ntrans b -> c : op inc\n"
      "trans c -> d : op dec\ntrans d -> e : op dec\ntrans e -> f : op dec\ntrans f -> t : op iszero\n");
  const auto v = solve_counter(rm);
  expect_replays(rm, v);
  EXPECT_EQ(v.run.size(), 7u);
}

TEST(Counter, ZeroTestAfterForcedInc) {
  const auto rm = counter_machine("state s init\nstate a\nstate t target\n"
                                  "trans s -> a : op inc\ntrans a -> t : op iszero\n");
  EXPECT_EQ(solve_counter(rm).outcome, Outcome::Unreachable);
}

TEST(Counter, BoundFormula) {
  const auto rm = parse_machine("adt counter\nmachine C\nregisters r,u domain 0..2\nstate s init\nstate t target\n");
  EXPECT_EQ(counter_bound(rm), 18u * 18u);  // (2 * 3^2)^2
}

TEST(Counter, CapBlockingIncIsInconclusive) {
  const auto never = counter_machine("state s init\nstate t target\ntrans s -> s : op inc\n");
  CounterOptions capped;
  capped.cap = 1;
  EXPECT_EQ(solve_counter(never, capped).outcome, Outcome::Inconclusive);
  EXPECT_EQ(solve_counter(never).outcome, Outcome::Unreachable);
  // nothing blocked by the cap, so the small search is already exact
  const auto flat = counter_machine("state s init\nstate t target\ntrans s -> s : op dec\n");
  EXPECT_EQ(solve_counter(flat, capped).outcome, Outcome::Unreachable);
}

TEST(Binarize, IncrementFromThree) {
  const auto rm = counter_machine("state s init\nstate t target\ntrans s -> t : op inc\n");
  const auto bin = binarize_counter(rm, 7);
  ASSERT_EQ(bin.registers.size(), 3u);
  EXPECT_EQ(bin.adt.kind, AdtKind::Trivial);
  // start at 3 = bits 1,1,0 (least significant first) and take the increment
  RmConfiguration cfg{bin.init, {1, 1, 0}, std::monostate{}};
  std::set<std::vector<std::uint32_t>> at_target;
  std::vector<RmConfiguration> stack{cfg};
  while (!stack.empty()) {
    auto c = stack.back();
    stack.pop_back();
    if (c.state == bin.target) {
      at_target.insert(c.regs);
      continue;
    }
    for (auto& [label, next] : rm_step(bin, c)) stack.push_back(next);
  }
  EXPECT_EQ(at_target, (std::set<std::vector<std::uint32_t>>{{0, 0, 1}}));
}

TEST(Binarize, IncrementBlockedAtBound) {
  const auto rm = counter_machine("state s init\nstate t target\ntrans s -> t : op inc\n");
  const auto bin = binarize_counter(rm, 5);
  ASSERT_EQ(bin.registers.size(), 3u);
  // 5 = 1,0,1
  std::vector<RmConfiguration> stack{{bin.init, {1, 0, 1}, std::monostate{}}};
  bool reached = false;
  while (!stack.empty()) {
    auto c = stack.back();
    stack.pop_back();
    reached = reached || c.state == bin.target;
    for (auto& [label, next] : rm_step(bin, c)) stack.push_back(next);
  }
  EXPECT_FALSE(reached);
}

TEST(Binarize, AgreesWithCounterSolver) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto rm = random_counter_machine(seed);
    const auto bound = counter_bound(rm);
    ASSERT_LE(bound, 64u);
    const auto direct = solve_counter(rm);
    const auto bin = binarize_counter(rm, bound);
    const auto v = solve_finite(bin);
    EXPECT_EQ(direct.outcome, v.outcome) << print_machine(rm);
    if (v.outcome == Outcome::Reachable) expect_replays(bin, v);
    if (direct.outcome == Outcome::Reachable) expect_replays(rm, direct);
  }
}

TEST(Stack, BalancedPushPop) {
  const auto rm = parse_machine(
      "adt stack alphabet a\nmachine S\nregisters domain 0..1\nstate s init\nstate p\nstate t target\n"
      "trans s -> s : op push a\ntrans s -> p : skp\ntrans p -> p : op pop a\ntrans p -> t : op isempty\n");
  expect_replays(rm, solve_stack(rm));
}

TEST(Stack, TwoPushesTwoPops) {
  const auto rm = parse_machine(
      "adt stack alphabet a,b\nmachine S\nregisters r domain 0..2\nstate s init\nstate u\nstate v\nstate w\n"
      "state t target\ntrans s -> s : op push a\ntrans s -> u : write r 2\ntrans u -> v : op pop a\n"
      "trans v -> w : op pop a\ntrans w -> t : read r 2\n");
  const auto v = solve_stack(rm);
  expect_replays(rm, v);
  EXPECT_GE(v.run.size(), 6u);
}

TEST(Stack, PopOnEmptyStack) {
  const auto rm = parse_machine("adt stack alphabet a\nmachine S\nregisters domain 0..1\nstate s init\n"
                                "state t target\ntrans s -> t : op pop a\n");
  EXPECT_EQ(solve_stack(rm).outcome, Outcome::Unreachable);
}

TEST(Stack, WrongSymbolOnTop) {
  const auto rm = parse_machine(
      "adt stack alphabet a,b\nmachine S\nregisters domain 0..1\nstate s init\nstate m\nstate n\nstate t target\n"
      "trans s -> m : op push a\ntrans m -> n : op push b\ntrans n -> t : op pop a\n");
  EXPECT_EQ(solve_stack(rm).outcome, Outcome::Unreachable);
}

TEST(Stack, AgreesWithClosedExploration) {
  std::size_t compared = 0;
  for (std::uint64_t seed = 0; compared < 25 && seed < 400; ++seed) {
    const auto rm = random_stack_machine(seed);
    const auto bounded = explore_bounded(rm, 6);
    if (bounded.outcome == Outcome::Inconclusive) continue;
    ++compared;
    const auto v = solve_stack(rm);
    EXPECT_EQ(v.outcome, bounded.outcome) << print_machine(rm);
    if (v.outcome == Outcome::Reachable) expect_replays(rm, v);
  }
  EXPECT_EQ(compared, 25u);
}

TEST(Bounded, MultiStackOrderEnforced) {
  const auto rm = parse_machine(
      "adt multistack count 2 alphabet a\nmachine M\nregisters domain 0..1\nstate s init\nstate m\nstate n\n"
      "state t target\ntrans s -> m : op push_1 a\ntrans m -> n : op push_2 a\ntrans n -> t : op pop_2 a\n");
  for (std::uint64_t bound : {2u, 4u, 8u}) EXPECT_EQ(explore_bounded(rm, bound).outcome, Outcome::Unreachable);
}

TEST(Bounded, HigherOrderCheckpoint) {
  const auto rm = parse_machine(
      "adt hostack level 2 alphabet a\nmachine H\nregisters domain 0..1\nstate s init\nstate m\nstate n\n"
      "state o\nstate t target\ntrans s -> m : op push_2\ntrans m -> n : op push a\ntrans n -> o : op pop_2\n"
      "trans o -> t : op isempty\n");
  const auto v = explore_bounded(rm, 4);
  expect_replays(rm, v);
  EXPECT_LE(v.run.size(), 6u);
}

TEST(Bounded, ZeroBoundIsInconclusive) {
  const auto rm = counter_machine("state s init\nstate t target\ntrans s -> t : op inc\n");
  EXPECT_EQ(explore_bounded(rm, 0).outcome, Outcome::Inconclusive);
  EXPECT_EQ(explore_bounded(rm, 1).outcome, Outcome::Reachable);
}

TEST(Coverability, ProducerTwice) {
  PetriNet net;
  net.places = {"p"};
  net.transitions.push_back({"t", {0}, {1}});
  net.initial.tokens = {0};
  const auto r = backward_coverability(net, Marking{{2}});
  EXPECT_TRUE(r.coverable);
  EXPECT_EQ(r.firing, (std::vector<std::uint32_t>{0, 0}));
  EXPECT_TRUE(r.antichain_ok);
}

TEST(Coverability, TokenConservation) {
  PetriNet net;
  net.places = {"p", "q"};
  net.transitions.push_back({"t", {1, 0}, {0, 1}});
  net.initial.tokens = {1, 0};
  const auto r = backward_coverability(net, Marking{{0, 2}});
  EXPECT_FALSE(r.coverable);
  EXPECT_TRUE(r.antichain_ok);
}

TEST(Petri, MachineAgreesWithWsts) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto rm = coverability_to_rm(random_net(seed));
    const auto petri = solve_petri(rm);
    const auto wsts = solve_wsts(rm);
    EXPECT_EQ(petri.outcome, wsts.outcome) << print_machine(rm);
    if (petri.outcome == Outcome::Reachable) {
      expect_replays(rm, petri);
      expect_replays(rm, wsts);
    }
  }
}

TEST(Petri, RegistersAndNetTogether) {
  const auto rm = parse_machine(
      "adt petri places p transitions t: -> p; u: p*2 ->\nmachine M\nregisters r domain 0..1\n"
      "state s init\nstate m\nstate t target\ntrans s -> s : op fire t\ntrans s -> m : write r 1\n"
      "trans m -> t : op fire u\n");
  expect_replays(rm, solve_petri(rm));
  expect_replays(rm, solve_wsts(rm));
}

TEST(Wsts, WeakCounterAgreesWithCounterSolver) {
  const auto rm = parse_machine(
      "adt weakcounter\nmachine W\nregisters domain 0..1\nstate s init\nstate m\nstate t target\n"
      "trans s -> s : op inc\ntrans s -> m : skp\ntrans m -> m : op dec\ntrans m -> t : op dec\n");
  const auto w = solve_wsts(rm);
  expect_replays(rm, w);
  EXPECT_EQ(solve_counter(rm).outcome, Outcome::Reachable);
}

TEST(Wsts, EmptyDelta) {
  auto rm = parse_machine("adt weakcounter\nmachine W\nregisters domain 0..1\nstate s init\nstate t target\n");
  EXPECT_EQ(solve_wsts(rm).outcome, Outcome::Unreachable);
  rm.target = rm.init;
  EXPECT_EQ(solve_wsts(rm).outcome, Outcome::Reachable);
}

TEST(Wsts, RejectsStrictCounter) {
  const auto rm = counter_machine("state s init\nstate t target\n");
  EXPECT_THROW(solve_wsts(rm), UnsupportedOrder);
}

TEST(ControlOverapproximation, IgnoresAdtGuards) {
  const auto rm = counter_machine("state s init\nstate t target\ntrans s -> t : op dec\n");
  const auto controls = control_overapproximation(rm);
  ASSERT_TRUE(controls.has_value());
  EXPECT_EQ(controls->size(), 2u);
  EXPECT_FALSE(control_overapproximation(rm, 1).has_value());
}
