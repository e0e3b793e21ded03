#pragma once

// TSO process descriptions: shared memory layout, instructions and the
// finite-state process every thread runs.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptso/adt.hpp"

namespace ptso {

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shared variables and the value domain {0..d_max}; the initial value is 0.
struct MemoryLayout {
  std::vector<std::string> vars;
  std::uint32_t d_max = 1;

  std::uint32_t var_count() const { return static_cast<std::uint32_t>(vars.size()); }
  std::uint32_t domain_size() const { return d_max + 1; }
  /// |M| = |X| * |D|
  std::uint32_t message_count() const { return var_count() * domain_size(); }
  std::uint32_t message_index(std::uint32_t var, std::uint32_t value) const { return var * domain_size() + value; }
  std::uint32_t message_var(std::uint32_t message) const { return message / domain_size(); }
  std::uint32_t message_value(std::uint32_t message) const { return message % domain_size(); }
  std::optional<std::uint32_t> var_index(std::string_view name) const;

  bool operator==(const MemoryLayout&) const = default;
};

enum class InstrKind { Read, Write, Skip, Fence, Op };

struct Instruction {
  InstrKind kind = InstrKind::Skip;
  std::uint32_t var = 0;
  std::uint32_t value = 0;
  AdtOp op;

  static Instruction read(std::uint32_t var, std::uint32_t value) { return {InstrKind::Read, var, value, {}}; }
  static Instruction write(std::uint32_t var, std::uint32_t value) { return {InstrKind::Write, var, value, {}}; }
  static Instruction skip() { return {}; }
  static Instruction fence() { return {InstrKind::Fence, 0, 0, {}}; }
  static Instruction adt(AdtOp op) { return {InstrKind::Op, 0, 0, op}; }

  bool operator==(const Instruction&) const = default;
};

struct ProcessTransition {
  std::uint32_t from = 0;
  Instruction instr;
  std::uint32_t to = 0;

  bool operator==(const ProcessTransition&) const = default;
};

struct ProcessDescription {
  std::string name = "P";
  std::vector<std::string> states;
  std::uint32_t init = 0;
  std::uint32_t target = 0;
  std::vector<ProcessTransition> delta;

  std::uint32_t add_state(std::string state_name);
  std::optional<std::uint32_t> state_index(std::string_view state_name) const;
  void add(std::uint32_t from, Instruction instr, std::uint32_t to) { delta.push_back({from, instr, to}); }
  /// Transition indices grouped by source state.
  std::vector<std::vector<std::uint32_t>> outgoing() const;

  bool operator==(const ProcessDescription&) const = default;
};

/// A complete TSO(A) input: memory, the per-process ADT and the process.
struct Program {
  MemoryLayout memory;
  AdtType adt = AdtType::trivial();
  ProcessDescription process;

  /// Throws ModelError on dangling states, undeclared variables, values
  /// outside the domain or operations foreign to the ADT.
  void validate() const;
};

std::string format_instruction(const Program& program, const Instruction& instr);

}  // namespace ptso
