#include <gtest/gtest.h>

#include "ptso/adt.hpp"

using namespace ptso;

namespace {

PetriNet two_place_net() {
  PetriNet net;
  net.places = {"p", "q"};
  net.transitions.push_back({"t", {1, 0}, {0, 1}});
  net.initial.tokens = {1, 0};
  return net;
}

Marking marking(std::vector<std::uint32_t> tokens) { return Marking{std::move(tokens)}; }

}  // namespace

TEST(Counter, IncFromZero) {
  const auto type = AdtType::counter();
  const auto next = adt_step(type, CounterValue{0}, {OpCode::Inc, 0, 0});
  ASSERT_EQ(next.size(), 1u);
  EXPECT_EQ(std::get<CounterValue>(next[0]).count, 1u);
}

TEST(Counter, DecAtZeroBlocks) {
  EXPECT_TRUE(adt_step(AdtType::counter(), CounterValue{0}, {OpCode::Dec, 0, 0}).empty());
}

TEST(Counter, WeakCounterHasNoZeroTest) {
  EXPECT_THROW(validate_op(AdtType::weak_counter(), {OpCode::IsZero, 0, 0}), AdtError);
  EXPECT_NO_THROW(validate_op(AdtType::counter(), {OpCode::IsZero, 0, 0}));
}

TEST(Stack, PopMatchesTopSymbol) {
  const auto type = AdtType::stack({"a", "b"});
  const Word ab{{0, 1}};  // b on top
  const auto popped = adt_step(type, ab, {OpCode::Pop, 1, 0});
  ASSERT_EQ(popped.size(), 1u);
  EXPECT_EQ(std::get<Word>(popped[0]), (Word{{0}}));
  EXPECT_TRUE(adt_step(type, ab, {OpCode::Pop, 0, 0}).empty());
}

TEST(Stack, IsEmptyOnlyOnEmptyStack) {
  const auto type = AdtType::stack({"a"});
  EXPECT_EQ(adt_step(type, Word{}, {OpCode::IsEmpty, 0, 0}).size(), 1u);
  EXPECT_TRUE(adt_step(type, Word{{0}}, {OpCode::IsEmpty, 0, 0}).empty());
}

TEST(HoStack, Push2DuplicatesTopStack) {
  const auto type = AdtType::ho_stack(2, {"a"});
  HoStack inner;
  inner.word = {0};
  HoStack outer;
  outer.elems = {inner};
  const auto next = adt_apply(type, outer, {OpCode::Push, 0, 2});
  ASSERT_TRUE(next.has_value());
  HoStack expected;
  expected.elems = {inner, inner};
  EXPECT_EQ(std::get<HoStack>(*next), expected);
  EXPECT_EQ(format_value(type, *next), "[[a],[a]]");
}

TEST(HoStack, Pop2RestoresCheckpoint) {
  const auto type = AdtType::ho_stack(2, {"a"});
  auto v = *adt_apply(type, type.initial, {OpCode::Push, 0, 2});
  v = *adt_apply(type, v, {OpCode::Push, 0, 0});
  EXPECT_EQ(format_value(type, v), "[[],[a]]");
  v = *adt_apply(type, v, {OpCode::Pop, 0, 2});
  EXPECT_EQ(format_value(type, v), "[[]]");
}

TEST(MultiStack, PopRequiresLowerStacksEmpty) {
  const auto type = AdtType::multi_stack(2, {"a"});
  auto v = *adt_apply(type, type.initial, {OpCode::Push, 0, 1});
  v = *adt_apply(type, v, {OpCode::Push, 0, 2});
  EXPECT_FALSE(adt_apply(type, v, {OpCode::Pop, 0, 2}).has_value());
  v = *adt_apply(type, v, {OpCode::Pop, 0, 1});
  EXPECT_TRUE(adt_apply(type, v, {OpCode::Pop, 0, 2}).has_value());
}

TEST(Petri, FireMovesToken) {
  const auto type = AdtType::petri(two_place_net());
  const auto next = adt_step(type, marking({1, 0}), {OpCode::Fire, 0, 0});
  ASSERT_EQ(next.size(), 1u);
  EXPECT_EQ(std::get<Marking>(next[0]), marking({0, 1}));
  EXPECT_TRUE(adt_step(type, marking({0, 1}), {OpCode::Fire, 0, 0}).empty());
}

TEST(Adt, ForeignOperationRejected) {
  EXPECT_THROW(adt_step(AdtType::stack({"a"}), Word{}, {OpCode::Inc, 0, 0}), AdtError);
  EXPECT_THROW(adt_step(AdtType::counter(), Word{}, {OpCode::Inc, 0, 0}), AdtError);
}

TEST(Wqo, CounterIsNumericOrder) {
  const auto type = AdtType::counter();
  EXPECT_TRUE(wqo_leq(type, CounterValue{2}, CounterValue{5}));
  EXPECT_FALSE(wqo_leq(type, CounterValue{5}, CounterValue{2}));
}

TEST(Wqo, MarkingsCompareComponentwise) {
  const auto type = AdtType::petri(two_place_net());
  EXPECT_TRUE(wqo_leq(type, marking({1, 0}), marking({1, 3})));
  EXPECT_FALSE(wqo_leq(type, marking({2, 0}), marking({1, 9})));
}

TEST(Wqo, StackHasNoOrder) {
  const auto type = AdtType::stack({"a"});
  EXPECT_THROW(wqo_leq(type, Word{}, Word{}), UnsupportedOrder);
  EXPECT_FALSE(is_well_structured(AdtKind::Counter));
  EXPECT_TRUE(is_well_structured(AdtKind::WeakCounter));
}

TEST(PreMin, CounterOps) {
  const auto type = AdtType::counter();
  const auto dec = pre_min_upward(type, {OpCode::Dec, 0, 0}, {{CounterValue{3}}});
  ASSERT_EQ(dec.elements.size(), 1u);
  EXPECT_EQ(std::get<CounterValue>(dec.elements[0]).count, 4u);
  EXPECT_EQ(pre_min_upward(type, {OpCode::IsZero, 0, 0}, {{CounterValue{0}}}).elements.size(), 1u);
  EXPECT_TRUE(pre_min_upward(type, {OpCode::IsZero, 0, 0}, {{CounterValue{1}}}).elements.empty());
}

TEST(PreMin, PetriSingleTransition) {
  const auto type = AdtType::petri(two_place_net());
  const auto pre = pre_min_upward(type, {OpCode::Fire, 0, 0}, {{marking({0, 2})}});
  ASSERT_EQ(pre.elements.size(), 1u);
  EXPECT_EQ(std::get<Marking>(pre.elements[0]), marking({1, 1}));
}

// Brute force: m is in up(pre) iff firing from m lands in up(basis), for all
// markings with at most 3 tokens per place.
TEST(PreMin, PetriMatchesEnumeration) {
  PetriNet net;
  net.places = {"p", "q", "r"};
  net.transitions.push_back({"t", {1, 0, 2}, {0, 2, 1}});
  net.transitions.push_back({"u", {0, 1, 0}, {1, 0, 0}});
  const auto type = AdtType::petri(net);
  const std::vector<Marking> targets = {marking({0, 2, 0}), marking({1, 0, 1}), marking({0, 0, 0})};
  for (std::uint32_t ti = 0; ti < 2; ++ti) {
    for (const auto& target : targets) {
      const auto pre = pre_min_upward(type, {OpCode::Fire, ti, 0}, {{target}});
      for (std::uint32_t a = 0; a <= 3; ++a)
        for (std::uint32_t b = 0; b <= 3; ++b)
          for (std::uint32_t c = 0; c <= 3; ++c) {
            const Marking m = marking({a, b, c});
            const auto next = adt_apply(type, m, {OpCode::Fire, ti, 0});
            const bool expected = next && wqo_leq(type, target, *next);
            bool in_pre = false;
            for (const auto& e : pre.elements) in_pre = in_pre || wqo_leq(type, e, m);
            EXPECT_EQ(in_pre, expected) << "t" << ti << " at " << format_value(type, m);
          }
    }
  }
}

TEST(Minimize, DropsDominatedElements) {
  const auto type = AdtType::petri(two_place_net());
  const auto basis = minimize(type, {marking({1, 1}), marking({0, 1}), marking({2, 0}), marking({0, 1})});
  ASSERT_EQ(basis.elements.size(), 2u);
  EXPECT_EQ(std::get<Marking>(basis.elements[0]), marking({0, 1}));
  EXPECT_EQ(std::get<Marking>(basis.elements[1]), marking({2, 0}));
}

TEST(Format, OperationsRoundTrip) {
  const auto type = AdtType::stack({"a", "b"});
  for (const auto& op : all_ops(type)) {
    const auto text = format_op(type, op);
    std::vector<std::string> tokens;
    std::string current;
    for (char ch : text) {
      if (ch == ' ') {
        tokens.push_back(current);
        current.clear();
      } else {
        current += ch;
      }
    }
    tokens.push_back(current);
    EXPECT_EQ(parse_op(type, tokens), op) << text;
  }
}
