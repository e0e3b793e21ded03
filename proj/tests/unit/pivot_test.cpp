#include <gtest/gtest.h>

#include "ptso/dsl.hpp"
#include "ptso/generators.hpp"
#include "ptso/pivot.hpp"
#include "ptso/tso.hpp"

using namespace ptso;

namespace {

Program one_var(const std::string& body) {
  return parse_program("memory vars x domain 0..1\nadt trivial\nprocess P\n" + body);
}

bool has_rule(const std::vector<std::pair<PivotLabel, View>>& steps, PivotRule rule) {
  for (const auto& [label, view] : steps)
    if (label.rule == rule) return true;
  return false;
}

}  // namespace

TEST(InitialView, FirstProvider) {
  const auto p = one_var("state q0 init\nstate q1 target\ntrans q0 -> q1 : wr x 1\n");
  const auto x1 = p.memory.message_index(0, 1);
  const auto v = initial_view(p, {x1}, 1);
  EXPECT_EQ(v.q, p.process.init);
  EXPECT_EQ(v.lw, std::vector<std::int32_t>{kNoWrite});
  EXPECT_EQ(v.omega, std::vector<std::uint32_t>{x1});
  EXPECT_EQ(v.phi_e, 0u);
  EXPECT_EQ(v.phi_l, std::vector<std::uint32_t>{0});
  EXPECT_EQ(v.phi_p, 1u);
}

TEST(InitialView, ProviderBounds) {
  const auto p = one_var("state q0 init\nstate q1 target\n");
  EXPECT_EQ(initial_view(p, {}, 1).phi_p, 1u);
  const std::vector<std::uint32_t> omega = {p.memory.message_index(0, 1), p.memory.message_index(0, 0)};
  EXPECT_EQ(initial_view(p, omega, 3).phi_p, 3u);
  EXPECT_THROW(initial_view(p, omega, 4), ModelError);
  EXPECT_THROW(initial_view(p, omega, 0), ModelError);
  EXPECT_THROW(initial_view(p, {omega[0], omega[0]}, 1), ModelError);
}

TEST(PivotStep, ReadOwnWrite) {
  const auto p = one_var("state q0 init\nstate q1 target\ntrans q0 -> q1 : rd x 1\n");
  auto v = initial_view(p, {p.memory.message_index(0, 1)}, 2);
  v.lw = {static_cast<std::int32_t>(1)};
  const auto steps = pivot_step(p, v);
  ASSERT_TRUE(has_rule(steps, PivotRule::Read1));
  for (const auto& [label, next] : steps) {
    if (label.rule != PivotRule::Read1) continue;
    EXPECT_EQ(next.q, 1u);
    auto expected = v;
    expected.q = 1;
    EXPECT_EQ(next, expected);
  }
}

TEST(PivotStep, WritingThePivotAdvancesProvider) {
  const auto p = one_var("state q0 init\nstate q1 target\ntrans q0 -> q1 : wr x 1\n");
  const std::vector<std::uint32_t> omega = {p.memory.message_index(0, 1)};
  const auto steps = pivot_step(p, initial_view(p, omega, 1));
  ASSERT_EQ(steps.size(), 1u);
  EXPECT_EQ(steps[0].first.rule, PivotRule::Write2);
  EXPECT_EQ(steps[0].second, initial_view(p, omega, 2));
}

TEST(PivotStep, InitialValueReadBeforeFirstUpdate) {
  const auto p = one_var("state q0 init\nstate q1 target\ntrans q0 -> q1 : rd x 0\n");
  const auto steps = pivot_step(p, initial_view(p, {p.memory.message_index(0, 1)}, 2));
  EXPECT_TRUE(has_rule(steps, PivotRule::Read2));
}

TEST(PivotReach, OwnWriteThenRead) {
  const auto p = one_var(
      "state q0 init\nstate q1\nstate q2 target\ntrans q0 -> q1 : wr x 1\ntrans q1 -> q2 : rd x 1\n");
  const auto r = pivot_reach(p);
  ASSERT_EQ(r.verdict.outcome, Outcome::Reachable);
  EXPECT_NE(rank_of(r.omega, p.memory.message_index(0, 1)), 0u);
  const auto end = replay_pivot(p, r.omega, r.run);
  ASSERT_TRUE(end.has_value());
  EXPECT_EQ(end->q, p.process.target);
}

TEST(PivotReach, NoWriterIsUnreachable) {
  const auto p = one_var("state q0 init\nstate q1 target\ntrans q0 -> q1 : rd x 1\n");
  EXPECT_EQ(pivot_reach(p).verdict.outcome, Outcome::Unreachable);
}

TEST(PivotReach, WitnessStartsWithOmega) {
  const auto p = one_var(
      "state q0 init\nstate w\nstate r\nstate done target\ntrans q0 -> w : wr x 1\n"
      "trans q0 -> r : rd x 1\ntrans r -> done : skip\n");
  const auto r = pivot_reach(p);
  ASSERT_EQ(r.verdict.outcome, Outcome::Reachable);
  ASSERT_FALSE(r.verdict.witness.empty());
  EXPECT_EQ(r.verdict.witness.front(), "omega: x=1");
}

TEST(PivotReach, ValueBoundMakesCounterInconclusive) {
  const auto p = parse_program(
      "memory vars x domain 0..1\nadt counter\nprocess P\nstate q0 init\nstate q1 target\n"
      "trans q0 -> q0 : op inc\ntrans q0 -> q1 : rd x 1\n");
  PivotOptions options;
  options.value_bound = 3;
  EXPECT_EQ(pivot_reach(p, options).verdict.outcome, Outcome::Inconclusive);
}

// The oracle under-approximates parameterized reachability, so whatever it
// finds the pivot search must find too.
TEST(PivotReach, CoversOracleOnRandomPrograms) {
  OracleBounds bounds;
  bounds.step_max = 10;
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    const auto p = random_program(seed);
    const auto oracle = bounded_reach(p, bounds);
    if (oracle.verdict.outcome != Outcome::Reachable) continue;
    EXPECT_EQ(pivot_reach(p).verdict.outcome, Outcome::Reachable) << print_program(p);
  }
}
