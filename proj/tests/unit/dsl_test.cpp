#include <gtest/gtest.h>

#include "ptso/dsl.hpp"
#include "ptso/generators.hpp"

using namespace ptso;

TEST(ProgramText, SmallProgramRoundTrips) {
  const auto p = parse_program(R"(# comment line
memory vars x domain 0..1
process P
state q0 init
state q1 target
trans q0 -> q1 : wr x 1
)");
  EXPECT_EQ(p.memory.vars, std::vector<std::string>{"x"});
  EXPECT_EQ(p.adt.kind, AdtKind::Trivial);
  ASSERT_EQ(p.process.delta.size(), 1u);
  EXPECT_EQ(p.process.delta[0].instr, Instruction::write(0, 1));
  const auto again = parse_program(print_program(p));
  EXPECT_EQ(again.memory, p.memory);
  EXPECT_EQ(again.process, p.process);
}

TEST(ProgramText, RandomProgramsRoundTrip) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto p = random_program(seed);
    const auto text = print_program(p);
    const auto again = parse_program(text);
    EXPECT_EQ(again.process, p.process) << text;
    EXPECT_EQ(print_program(again), text);
  }
}

TEST(ProgramText, UndeclaredVariableNamed) {
  try {
    parse_program("memory vars x domain 0..1\nprocess P\nstate q0 init target\ntrans q0 -> q0 : rd y 1\n");
    FAIL() << "expected a parse error";
  } catch (const DslError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_NE(std::string(e.what()).find("y"), std::string::npos);
  }
}

TEST(ProgramText, ForeignOperationRejected) {
  EXPECT_THROW(parse_program("memory vars x domain 0..1\nadt stack alphabet a\nprocess P\nstate q0 init target\n"
                             "trans q0 -> q0 : op inc\n"),
               DslError);
}

TEST(ProgramText, MissingInitialState) {
  EXPECT_THROW(parse_program("memory vars x domain 0..1\nprocess P\nstate q0 target\n"), DslError);
}

TEST(AdtText, Declarations) {
  EXPECT_EQ(parse_adt("counter").kind, AdtKind::Counter);
  EXPECT_EQ(parse_adt("weakcounter").kind, AdtKind::WeakCounter);
  const auto stack = parse_adt("stack alphabet a,b");
  EXPECT_EQ(stack.alphabet, (std::vector<std::string>{"a", "b"}));
  const auto ho = parse_adt("hostack level 2 alphabet a");
  EXPECT_EQ(ho.kind, AdtKind::HoStack);
  EXPECT_EQ(ho.level, 2u);
  const auto multi = parse_adt("multistack count 2 alphabet a,b");
  EXPECT_EQ(multi.kind, AdtKind::MultiStack);
  const auto net = parse_adt("petri places p,q transitions t: p -> q");
  ASSERT_EQ(net.net.transitions.size(), 1u);
  EXPECT_EQ(net.net.transitions[0].input, (std::vector<std::uint32_t>{1, 0}));
  EXPECT_EQ(net.net.transitions[0].output, (std::vector<std::uint32_t>{0, 1}));
  for (const auto& type : {stack, ho, multi, net}) EXPECT_EQ(print_adt(parse_adt(print_adt(type).substr(4))), print_adt(type));
}

TEST(MachineText, RoundTripAllTiers) {
  RandomMachineOptions options;
  options.tier = 3;
  options.adt = AdtType::counter();
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto rm = random_machine(seed, options);
    const auto text = print_machine(rm);
    const auto again = parse_machine(text);
    EXPECT_EQ(again.delta, rm.delta) << text;
    EXPECT_EQ(print_machine(again), text);
  }
}

TEST(MachineText, ZeroRegisters) {
  const auto rm = parse_machine("machine M\nregisters domain 0..1\nstate a init\nstate b target\ntrans a -> b : skp\n");
  EXPECT_TRUE(rm.registers.empty());
  EXPECT_EQ(rm.bound, 1u);
}

TEST(MachineText, LiteralAboveBoundRejected) {
  EXPECT_THROW(parse_machine("machine M\nregisters r domain 0..1\nstate a init\nstate b target\n"
                             "trans a -> b : write r 2\n"),
               DslError);
}

TEST(Detect, DocumentKinds) {
  EXPECT_EQ(detect_kind("memory vars x domain 0..1\nprocess P\n"), DocumentKind::Program);
  EXPECT_EQ(detect_kind("machine M\n"), DocumentKind::Machine);
  EXPECT_EQ(detect_kind("pda K\n"), DocumentKind::Automata);
  EXPECT_EQ(detect_kind("adt petri places p transitions t: -> p\ncover p=1\n"), DocumentKind::Coverability);
}

TEST(CoverText, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto instance = random_net(seed);
    const auto text = print_coverability(instance);
    const auto again = parse_coverability(text);
    EXPECT_EQ(again.target, instance.target) << text;
    EXPECT_EQ(again.net.initial, instance.net.initial) << text;
    EXPECT_EQ(print_coverability(again), text);
  }
}
