#pragma once

// Register machines over a bounded domain {0..N} with an attached ADT.
// Actions come in three tiers: read/write, then inc/dec/zero-test, then
// assignments and comparisons.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ptso/adt.hpp"
#include "ptso/program.hpp"

namespace ptso {

/// A register reference or an integer literal.
struct Operand {
  bool is_register = false;
  std::uint32_t value = 0;

  static Operand reg(std::uint32_t r) { return {true, r}; }
  static Operand lit(std::uint32_t v) { return {false, v}; }

  bool operator==(const Operand&) const = default;
};

enum class ActionKind {
  Skip,
  Write,
  Read,
  Inc,
  Dec,
  CheckZero,
  Set,
  CheckEq,
  CheckNe,
  CheckLt,
  CheckGt,
  CheckLe,
  CheckGe,
  Adt,
};

/// WRITE/READ use `a` for the register and `b` for the literal; INC/DEC/CKZ
/// use `a`; SET(r, y) uses `a` = r and `b` = y; comparisons test `a` against `b`.
struct RmAction {
  ActionKind kind = ActionKind::Skip;
  Operand a;
  Operand b;
  AdtOp op;

  static RmAction skip() { return {}; }
  static RmAction write(std::uint32_t r, std::uint32_t d) { return {ActionKind::Write, Operand::reg(r), Operand::lit(d), {}}; }
  static RmAction read(std::uint32_t r, std::uint32_t d) { return {ActionKind::Read, Operand::reg(r), Operand::lit(d), {}}; }
  static RmAction inc(std::uint32_t r) { return {ActionKind::Inc, Operand::reg(r), {}, {}}; }
  static RmAction dec(std::uint32_t r) { return {ActionKind::Dec, Operand::reg(r), {}, {}}; }
  static RmAction check_zero(std::uint32_t r) { return {ActionKind::CheckZero, Operand::reg(r), {}, {}}; }
  static RmAction set(std::uint32_t r, Operand y) { return {ActionKind::Set, Operand::reg(r), y, {}}; }
  static RmAction compare(ActionKind kind, Operand x, Operand y) { return {kind, x, y, {}}; }
  static RmAction adt(AdtOp op) { return {ActionKind::Adt, {}, {}, op}; }

  /// 1, 2 or 3; ADT operations count as tier 1.
  int tier() const;
  bool is_comparison() const;

  bool operator==(const RmAction&) const = default;
};

struct RmTransition {
  std::uint32_t from = 0;
  RmAction action;
  std::uint32_t to = 0;

  bool operator==(const RmTransition&) const = default;
};

struct RegisterMachine {
  std::string name = "M";
  std::vector<std::string> states;
  std::uint32_t init = 0;
  std::uint32_t target = 0;
  std::vector<std::string> registers;
  std::uint32_t bound = 1;  // N: registers range over 0..N
  std::vector<RmTransition> delta;
  AdtType adt = AdtType::trivial();

  std::uint32_t add_state(std::string state_name);
  std::uint32_t add_register(std::string register_name);
  void add(std::uint32_t from, RmAction action, std::uint32_t to) { delta.push_back({from, action, to}); }
  std::optional<std::uint32_t> state_index(std::string_view state_name) const;
  std::optional<std::uint32_t> register_index(std::string_view register_name) const;

  std::vector<std::vector<std::uint32_t>> outgoing() const;
  /// Highest action tier used (1 for an empty machine).
  int max_tier() const;
  /// Throws ModelError on dangling states/registers, literals above N or
  /// operations foreign to the ADT.
  void validate() const;
};

struct RmConfiguration {
  std::uint32_t state = 0;
  std::vector<std::uint32_t> regs;
  AdtValue value;

  bool operator==(const RmConfiguration&) const = default;
};

struct RmConfigurationHash {
  std::size_t operator()(const RmConfiguration& c) const;
};

RmConfiguration initial_configuration(const RegisterMachine& rm);

/// Successor of `cfg` under one transition (which must leave cfg.state).
std::optional<RmConfiguration> rm_apply(const RegisterMachine& rm, const RmConfiguration& cfg, const RmTransition& t);

/// Effect of a non-ADT action on the registers alone (ADT operations pass
/// through unchanged); nullopt if the guard fails.
std::optional<std::vector<std::uint32_t>> apply_to_registers(const RegisterMachine& rm,
                                                             const std::vector<std::uint32_t>& regs,
                                                             const RmAction& action);

/// All enabled transitions with their successors; the label is the index
/// of the transition in rm.delta.
std::vector<std::pair<std::uint32_t, RmConfiguration>> rm_step(const RegisterMachine& rm, const RmConfiguration& cfg);

/// Replays a run of transition indices from the initial configuration;
/// returns the final configuration or nullopt if some step is disabled.
std::optional<RmConfiguration> replay_rm(const RegisterMachine& rm, const std::vector<std::uint32_t>& run);

std::string format_action(const RegisterMachine& rm, const RmAction& action);
std::string format_configuration(const RegisterMachine& rm, const RmConfiguration& cfg);

}  // namespace ptso
