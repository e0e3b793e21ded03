#pragma once

// Abstract data types attached to every process: counters, stacks,
// higher-order stacks, ordered multi-stacks and Petri nets.  Values are
// plain immutable data; every operation is a pure function.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace ptso {

using Symbol = std::uint32_t;

enum class AdtKind {
  Trivial,
  Counter,
  WeakCounter,
  Stack,
  HoStack,
  HoCounter,
  HoWeakCounter,
  MultiStack,
  Petri,
};

enum class OpCode { Inc, Dec, IsZero, Push, Pop, IsEmpty, Fire, Reset };

/// One ADT operation.  `symbol` is a stack symbol or a Petri transition
/// index; `index` is the level k of a higher-order operation (0 = base
/// operation) or the 1-based stack number of a multi-stack operation.
struct AdtOp {
  OpCode code = OpCode::Inc;
  Symbol symbol = 0;
  std::uint32_t index = 0;

  auto operator<=>(const AdtOp&) const = default;
};

struct CounterValue {
  std::uint64_t count = 0;
  auto operator<=>(const CounterValue&) const = default;
};

/// A stack word; the top of the stack is the back of the vector.
struct Word {
  std::vector<Symbol> symbols;
  auto operator<=>(const Word&) const = default;
};

/// Level-n stack.  Level 1 uses `word`; higher levels use `elems`, a stack
/// (top = back) of level-(n-1) stacks.  The level itself lives in the type.
struct HoStack {
  std::vector<Symbol> word;
  std::vector<HoStack> elems;

  bool operator==(const HoStack& other) const;
  bool operator<(const HoStack& other) const;
};

struct MultiStackValue {
  std::vector<Word> stacks;
  auto operator<=>(const MultiStackValue&) const = default;
};

/// Token count per declared place (dense, so equality is structural).
struct Marking {
  std::vector<std::uint32_t> tokens;
  auto operator<=>(const Marking&) const = default;
};

using AdtValue = std::variant<std::monostate, CounterValue, Word, HoStack, MultiStackValue, Marking>;

std::size_t hash_value(const AdtValue& value);

struct AdtValueHash {
  std::size_t operator()(const AdtValue& value) const { return hash_value(value); }
};

struct PetriTransition {
  std::string name;
  std::vector<std::uint32_t> input;
  std::vector<std::uint32_t> output;
};

struct PetriNet {
  std::vector<std::string> places;
  std::vector<PetriTransition> transitions;
  Marking initial;

  std::optional<std::uint32_t> place_index(std::string_view name) const;
  std::optional<std::uint32_t> transition_index(std::string_view name) const;
};

struct AdtType {
  AdtKind kind = AdtKind::Trivial;
  std::vector<std::string> alphabet;
  std::uint32_t level = 1;
  PetriNet net;
  AdtValue initial;

  static AdtType trivial();
  static AdtType counter();
  static AdtType weak_counter();
  static AdtType stack(std::vector<std::string> alphabet);
  static AdtType ho_stack(std::uint32_t level, std::vector<std::string> alphabet);
  static AdtType ho_counter(std::uint32_t level);
  static AdtType ho_weak_counter(std::uint32_t level);
  static AdtType multi_stack(std::uint32_t count, std::vector<std::string> alphabet);
  static AdtType petri(PetriNet net);

  std::optional<Symbol> symbol_index(std::string_view name) const;
};

/// Malformed value/op pairing or an operation outside the ADT's op set.
class AdtError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The ADT kind has no well-quasi-ordering support.
class UnsupportedOrder : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

std::string_view kind_name(AdtKind kind);

/// Throws AdtError if `op` is not an operation of `type`.
void validate_op(const AdtType& type, const AdtOp& op);

/// Throws AdtError if `value` is not a well-formed value of `type`.
void validate_value(const AdtType& type, const AdtValue& value);

/// All successors of `value` under `op` (empty = disabled).  Every built-in
/// ADT is deterministic, so the result has at most one element.
std::vector<AdtValue> adt_step(const AdtType& type, const AdtValue& value, const AdtOp& op);

/// Same as adt_step without the container; used on hot paths.
std::optional<AdtValue> adt_apply(const AdtType& type, const AdtValue& value, const AdtOp& op);

/// Every operation the ADT offers (used by generators and the reset gadgets).
std::vector<AdtOp> all_ops(const AdtType& type);

/// Size measure used for bounded exploration: counter magnitude, number of
/// stack symbols (plus nesting elements for higher-order stacks), token
/// count for markings, 0 for the trivial ADT.
std::uint64_t value_size(const AdtType& type, const AdtValue& value);

bool has_wqo(AdtKind kind);
/// Monotone w.r.t. its WQO; the strict counter is not (isZero).
bool is_well_structured(AdtKind kind);

bool wqo_leq(const AdtType& type, const AdtValue& lhs, const AdtValue& rhs);

struct UpwardBasis {
  std::vector<AdtValue> elements;
};

/// Drops every element that is above another one (keeps the first of equals).
UpwardBasis minimize(const AdtType& type, std::vector<AdtValue> values);

/// Minimal basis of { v | exists v' in up(basis), v --op--> v' }.
UpwardBasis pre_min_upward(const AdtType& type, const AdtOp& op, const UpwardBasis& basis);

/// The least element of the WQO (0, empty marking, unit).
AdtValue wqo_bottom(const AdtType& type);

std::string format_op(const AdtType& type, const AdtOp& op);
std::string format_value(const AdtType& type, const AdtValue& value);

/// Parses the textual form produced by format_op, already split on blanks.
AdtOp parse_op(const AdtType& type, std::span<const std::string> tokens);

}  // namespace ptso
