#include <gtest/gtest.h>

#include "ptso/dsl.hpp"
#include "ptso/tso.hpp"

using namespace ptso;

namespace {

const char* kHandshake = R"(memory vars x domain 0..1
adt trivial
process P
state q0 init
state w
state r
state done target
trans q0 -> w : wr x 1
trans q0 -> r : rd x 1
trans r -> done : skip
)";

}  // namespace

TEST(Buffer, LvalTakesNewestMessage) {
  const Buffer b = {{0, 2}, {0, 1}};
  EXPECT_EQ(lval(b, 0), 2u);
  EXPECT_FALSE(lval({}, 0).has_value());
  EXPECT_FALSE(lval({{1, 3}}, 0).has_value());
}

TEST(Buffer, RvalFallsBackToMemory) {
  EXPECT_EQ(rval({{0, 2}}, 0, 0), 2u);
  EXPECT_EQ(rval({}, 0, 0), 0u);
  EXPECT_EQ(rval({{1, 5}}, 7, 0), 7u);
}

TEST(Tso, WriteBuffersThenUpdates) {
  const auto p = parse_program(R"(memory vars x domain 0..1
process P
state q0 init
state q1 target
trans q0 -> q1 : wr x 1
)");
  const auto init = initial_tso(p, 1);
  auto steps = tso_step(p, init);
  ASSERT_EQ(steps.size(), 1u);
  const auto& after = steps[0].second;
  EXPECT_EQ(after.buffers[0], (Buffer{{0, 1}}));
  EXPECT_EQ(after.memory[0], 0u);

  steps = tso_step(p, after);
  ASSERT_EQ(steps.size(), 1u);
  EXPECT_TRUE(steps[0].first.update);
  EXPECT_TRUE(steps[0].second.buffers[0].empty());
  EXPECT_EQ(steps[0].second.memory[0], 1u);
}

TEST(Tso, FenceNeedsEmptyBuffer) {
  const auto p = parse_program(R"(memory vars x domain 0..1
process P
state q0 init
state q1
state q2 target
trans q0 -> q1 : wr x 1
trans q1 -> q2 : mf
)");
  const auto after = tso_step(p, initial_tso(p, 1))[0].second;
  for (const auto& [label, next] : tso_step(p, after)) EXPECT_TRUE(label.update);
}

TEST(Tso, ReadOwnWriteBeforeUpdate) {
  const auto p = parse_program(R"(memory vars x domain 0..1
process P
state q0 init
state q1
state q2 target
trans q0 -> q1 : wr x 1
trans q1 -> q2 : rd x 1
)");
  OracleBounds bounds;
  bounds.n_max = 1;
  const auto result = bounded_reach(p, bounds);
  ASSERT_EQ(result.verdict.outcome, Outcome::Reachable);
  EXPECT_EQ(result.run.size(), 2u);  // no update needed
}

TEST(Tso, CanonicalSortsProcesses) {
  const auto p = parse_program(kHandshake);
  auto a = initial_tso(p, 2);
  a.states = {1, 0};
  auto b = initial_tso(p, 2);
  b.states = {0, 1};
  EXPECT_EQ(canonical(a), canonical(b));
}

TEST(Oracle, HandshakeNeedsTwoProcesses) {
  const auto p = parse_program(kHandshake);
  OracleBounds one;
  one.n_max = 1;
  EXPECT_EQ(bounded_reach(p, one).verdict.outcome, Outcome::Inconclusive);
  const auto two = bounded_reach(p, OracleBounds{});
  ASSERT_EQ(two.verdict.outcome, Outcome::Reachable);
  EXPECT_EQ(two.processes, 2u);
  const auto end = replay_tso(p, two.processes, two.run);
  ASSERT_TRUE(end.has_value());
  bool at_target = false;
  for (auto s : end->states) at_target = at_target || s == p.process.target;
  EXPECT_TRUE(at_target);
}

TEST(Oracle, SkipToTarget) {
  const auto p = parse_program(R"(memory vars x domain 0..1
process P
state q0 init
state q1 target
trans q0 -> q1 : skip
)");
  const auto r = bounded_reach(p, OracleBounds{});
  ASSERT_EQ(r.verdict.outcome, Outcome::Reachable);
  EXPECT_EQ(r.processes, 1u);
  EXPECT_EQ(r.run.size(), 1u);
}

TEST(Oracle, NoProducerNeverFound) {
  const auto p = parse_program(R"(memory vars x domain 0..1
process P
state q0 init
state q1 target
trans q0 -> q1 : rd x 1
trans q0 -> q0 : wr x 0
)");
  EXPECT_EQ(bounded_reach(p, OracleBounds{}).verdict.outcome, Outcome::Inconclusive);
}

TEST(Oracle, StoreBufferingBothReadZero) {
  // Store buffering: both roles read 0 while their own write is still
  // buffered.  `z` tells the first role that the second one got through.
  const auto p = parse_program(R"(memory vars x,y,z domain 0..1
process P
state s init
state a1
state a2
state a3
state b1
state b2
state done target
trans s -> a1 : wr x 1
trans a1 -> a2 : rd y 0
trans a2 -> a3 : rd z 1
trans a3 -> done : skip
trans s -> b1 : wr y 1
trans b1 -> b2 : rd x 0
trans b2 -> b2 : wr z 1
)");
  const auto r = bounded_reach(p, OracleBounds{});
  EXPECT_EQ(r.verdict.outcome, Outcome::Reachable);
}

TEST(Oracle, FenceForbidsStoreBuffering) {
  // With fences after both writes, a process can read y=0 only before the
  // other process's write is visible, so both reading 0 is impossible.
  // Reaching `done` needs both a2 and b2 to have happened.
  const auto p = parse_program(R"(memory vars x,y,z domain 0..1
process P
state s init
state a1
state a1f
state a2
state a3
state b1
state b1f
state b2
state done target
trans s -> a1 : wr x 1
trans a1 -> a1f : mf
trans a1f -> a2 : rd y 0
trans a2 -> a3 : rd z 1
trans a3 -> done : skip
trans s -> b1 : wr y 1
trans b1 -> b1f : mf
trans b1f -> b2 : rd x 0
trans b2 -> b2 : wr z 1
)");
  OracleBounds bounds;
  bounds.n_max = 2;
  bounds.step_max = 14;
  const auto r = bounded_reach(p, bounds);
  EXPECT_EQ(r.verdict.outcome, Outcome::Inconclusive);
}
