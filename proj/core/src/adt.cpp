#include "ptso/adt.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "ptso/hash.hpp"

namespace ptso {

bool HoStack::operator==(const HoStack& other) const {
  return word == other.word && elems == other.elems;
}

bool HoStack::operator<(const HoStack& other) const {
  if (word != other.word) return word < other.word;
  return std::lexicographical_compare(elems.begin(), elems.end(), other.elems.begin(), other.elems.end());
}

namespace {

std::size_t hash_ho(const HoStack& stack) {
  std::size_t seed = hash_range(stack.word, 0x51ed);
  hash_combine(seed, stack.elems.size());
  for (const auto& e : stack.elems) hash_combine(seed, hash_ho(e));
  return seed;
}

}  // namespace

std::size_t hash_value(const AdtValue& value) {
  std::size_t seed = value.index();
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
        } else if constexpr (std::is_same_v<T, CounterValue>) {
          hash_combine(seed, std::hash<std::uint64_t>{}(v.count));
        } else if constexpr (std::is_same_v<T, Word>) {
          hash_combine(seed, hash_range(v.symbols));
        } else if constexpr (std::is_same_v<T, HoStack>) {
          hash_combine(seed, hash_ho(v));
        } else if constexpr (std::is_same_v<T, MultiStackValue>) {
          for (const auto& w : v.stacks) hash_combine(seed, hash_range(w.symbols, w.symbols.size()));
        } else {
          hash_combine(seed, hash_range(v.tokens));
        }
      },
      value);
  return seed;
}

std::optional<std::uint32_t> PetriNet::place_index(std::string_view name) const {
  for (std::uint32_t i = 0; i < places.size(); ++i)
    if (places[i] == name) return i;
  return std::nullopt;
}

std::optional<std::uint32_t> PetriNet::transition_index(std::string_view name) const {
  for (std::uint32_t i = 0; i < transitions.size(); ++i)
    if (transitions[i].name == name) return i;
  return std::nullopt;
}

namespace {

HoStack initial_ho(std::uint32_t level) {
  HoStack s;
  if (level > 1) s.elems.push_back(initial_ho(level - 1));
  return s;
}

}  // namespace

AdtType AdtType::trivial() {
  AdtType type;
  type.initial = std::monostate{};
  return type;
}

AdtType AdtType::counter() {
  AdtType type;
  type.kind = AdtKind::Counter;
  type.initial = CounterValue{};
  return type;
}

AdtType AdtType::weak_counter() {
  AdtType type = counter();
  type.kind = AdtKind::WeakCounter;
  return type;
}

AdtType AdtType::stack(std::vector<std::string> alphabet) {
  AdtType type;
  type.kind = AdtKind::Stack;
  type.alphabet = std::move(alphabet);
  type.initial = Word{};
  return type;
}

AdtType AdtType::ho_stack(std::uint32_t level, std::vector<std::string> alphabet) {
  if (level < 1) throw AdtError("higher-order stack level must be at least 1");
  AdtType type;
  type.kind = AdtKind::HoStack;
  type.level = level;
  type.alphabet = std::move(alphabet);
  type.initial = initial_ho(level);
  return type;
}

AdtType AdtType::ho_counter(std::uint32_t level) {
  AdtType type = ho_stack(level, {"c"});
  type.kind = AdtKind::HoCounter;
  return type;
}

AdtType AdtType::ho_weak_counter(std::uint32_t level) {
  AdtType type = ho_stack(level, {"c"});
  type.kind = AdtKind::HoWeakCounter;
  return type;
}

AdtType AdtType::multi_stack(std::uint32_t count, std::vector<std::string> alphabet) {
  if (count < 1) throw AdtError("multi-stack needs at least one stack");
  AdtType type;
  type.kind = AdtKind::MultiStack;
  type.level = count;
  type.alphabet = std::move(alphabet);
  type.initial = MultiStackValue{std::vector<Word>(count)};
  return type;
}

AdtType AdtType::petri(PetriNet net) {
  AdtType type;
  type.kind = AdtKind::Petri;
  if (net.initial.tokens.empty()) net.initial.tokens.assign(net.places.size(), 0);
  if (net.initial.tokens.size() != net.places.size()) throw AdtError("initial marking does not match place count");
  for (const auto& t : net.transitions)
    if (t.input.size() != net.places.size() || t.output.size() != net.places.size())
      throw AdtError("transition '" + t.name + "' does not match place count");
  type.initial = net.initial;
  type.net = std::move(net);
  return type;
}

std::optional<Symbol> AdtType::symbol_index(std::string_view name) const {
  for (Symbol i = 0; i < alphabet.size(); ++i)
    if (alphabet[i] == name) return i;
  return std::nullopt;
}

std::string_view kind_name(AdtKind kind) {
  switch (kind) {
    case AdtKind::Trivial: return "trivial";
    case AdtKind::Counter: return "counter";
    case AdtKind::WeakCounter: return "weakcounter";
    case AdtKind::Stack: return "stack";
    case AdtKind::HoStack: return "hostack";
    case AdtKind::HoCounter: return "hocounter";
    case AdtKind::HoWeakCounter: return "howeakcounter";
    case AdtKind::MultiStack: return "multistack";
    case AdtKind::Petri: return "petri";
  }
  return "?";
}

namespace {

[[noreturn]] void bad_op(const AdtType& type, const std::string& what) {
  throw AdtError(std::string("operation not supported by ") + std::string(kind_name(type.kind)) + ": " + what);
}

std::string code_name(OpCode code) {
  switch (code) {
    case OpCode::Inc: return "inc";
    case OpCode::Dec: return "dec";
    case OpCode::IsZero: return "iszero";
    case OpCode::Push: return "push";
    case OpCode::Pop: return "pop";
    case OpCode::IsEmpty: return "isempty";
    case OpCode::Fire: return "fire";
    case OpCode::Reset: return "reset";
  }
  return "?";
}

}  // namespace

void validate_op(const AdtType& type, const AdtOp& op) {
  const auto describe = [&] { return code_name(op.code) + "/" + std::to_string(op.index); };
  const bool sym_ok = op.symbol < type.alphabet.size();
  switch (type.kind) {
    case AdtKind::Trivial:
      bad_op(type, describe());
    case AdtKind::Counter:
    case AdtKind::WeakCounter:
      if (op.index != 0) bad_op(type, describe());
      if (op.code == OpCode::Inc || op.code == OpCode::Dec) return;
      if (op.code == OpCode::IsZero && type.kind == AdtKind::Counter) return;
      bad_op(type, describe());
    case AdtKind::Stack:
      if (op.index != 0) bad_op(type, describe());
      if ((op.code == OpCode::Push || op.code == OpCode::Pop) && sym_ok) return;
      if (op.code == OpCode::IsEmpty) return;
      bad_op(type, describe());
    case AdtKind::HoStack: {
      if (op.code == OpCode::Reset) return;
      const bool level_ok = op.index == 0 || (op.index >= 2 && op.index <= type.level);
      if (!level_ok) bad_op(type, describe());
      if (op.code == OpCode::IsEmpty) return;
      if (op.code == OpCode::Push || op.code == OpCode::Pop) {
        if (op.index == 0 && !sym_ok) bad_op(type, describe());
        return;
      }
      bad_op(type, describe());
    }
    case AdtKind::HoCounter:
    case AdtKind::HoWeakCounter: {
      if (op.code == OpCode::Reset) return;
      const bool level_ok = op.index == 0 || (op.index >= 2 && op.index <= type.level);
      if (!level_ok) bad_op(type, describe());
      if (op.code == OpCode::Inc || op.code == OpCode::Dec) return;
      if (op.code == OpCode::IsZero && type.kind == AdtKind::HoCounter) return;
      bad_op(type, describe());
    }
    case AdtKind::MultiStack:
      if (op.index < 1 || op.index > type.level) bad_op(type, describe());
      if ((op.code == OpCode::Push || op.code == OpCode::Pop) && sym_ok) return;
      if (op.code == OpCode::IsEmpty) return;
      bad_op(type, describe());
    case AdtKind::Petri:
      if (op.code == OpCode::Fire && op.symbol < type.net.transitions.size()) return;
      bad_op(type, describe());
  }
  bad_op(type, describe());
}

namespace {

bool ho_well_formed(const HoStack& v, std::uint32_t level, std::size_t alphabet) {
  if (level == 1) {
    if (!v.elems.empty()) return false;
    return std::all_of(v.word.begin(), v.word.end(), [&](Symbol s) { return s < alphabet; });
  }
  if (!v.word.empty()) return false;
  return std::all_of(v.elems.begin(), v.elems.end(), [&](const HoStack& e) { return ho_well_formed(e, level - 1, alphabet); });
}

bool word_ok(const Word& w, std::size_t alphabet) {
  return std::all_of(w.symbols.begin(), w.symbols.end(), [&](Symbol s) { return s < alphabet; });
}

}  // namespace

void validate_value(const AdtType& type, const AdtValue& value) {
  bool ok = false;
  switch (type.kind) {
    case AdtKind::Trivial: ok = std::holds_alternative<std::monostate>(value); break;
    case AdtKind::Counter:
    case AdtKind::WeakCounter: ok = std::holds_alternative<CounterValue>(value); break;
    case AdtKind::Stack:
      ok = std::holds_alternative<Word>(value) && word_ok(std::get<Word>(value), type.alphabet.size());
      break;
    case AdtKind::HoStack:
    case AdtKind::HoCounter:
    case AdtKind::HoWeakCounter:
      ok = std::holds_alternative<HoStack>(value) &&
           ho_well_formed(std::get<HoStack>(value), type.level, type.alphabet.size());
      break;
    case AdtKind::MultiStack:
      if (const auto* m = std::get_if<MultiStackValue>(&value)) {
        ok = m->stacks.size() == type.level &&
             std::all_of(m->stacks.begin(), m->stacks.end(), [&](const Word& w) { return word_ok(w, type.alphabet.size()); });
      }
      break;
    case AdtKind::Petri:
      if (const auto* m = std::get_if<Marking>(&value)) ok = m->tokens.size() == type.net.places.size();
      break;
  }
  if (!ok) throw AdtError(std::string("value is not well-formed for ") + std::string(kind_name(type.kind)));
}

namespace {

bool word_apply(std::vector<Symbol>& word, OpCode code, Symbol symbol) {
  switch (code) {
    case OpCode::Push: word.push_back(symbol); return true;
    case OpCode::Pop:
      if (word.empty() || word.back() != symbol) return false;
      word.pop_back();
      return true;
    case OpCode::IsEmpty: return word.empty();
    default: return false;
  }
}

// Base operations recurse to the level-1 top.
bool ho_base(HoStack& v, std::uint32_t level, OpCode code, Symbol symbol) {
  if (level == 1) return word_apply(v.word, code, symbol);
  if (v.elems.empty()) return false;
  return ho_base(v.elems.back(), level - 1, code, symbol);
}

// push_k / pop_k / isEmpty_k recurse to the level-k top, then copy, remove
// or test the level-(k-1) top element.
bool ho_level(HoStack& v, std::uint32_t level, OpCode code, std::uint32_t k) {
  if (v.elems.empty()) return false;
  if (level > k) return ho_level(v.elems.back(), level - 1, code, k);
  switch (code) {
    case OpCode::Push: {
      HoStack copy = v.elems.back();
      v.elems.push_back(std::move(copy));
      return true;
    }
    case OpCode::Pop: v.elems.pop_back(); return true;
    case OpCode::IsEmpty: {
      const HoStack& top = v.elems.back();
      return k == 2 ? top.word.empty() : top.elems.empty();
    }
    default: return false;
  }
}

OpCode counter_as_stack(OpCode code) {
  switch (code) {
    case OpCode::Inc: return OpCode::Push;
    case OpCode::Dec: return OpCode::Pop;
    case OpCode::IsZero: return OpCode::IsEmpty;
    default: return code;
  }
}

template <typename T>
const T& expect(const AdtType& type, const AdtValue& value) {
  const T* v = std::get_if<T>(&value);
  if (v == nullptr) throw AdtError(std::string("value kind does not match ADT ") + std::string(kind_name(type.kind)));
  return *v;
}

}  // namespace

std::optional<AdtValue> adt_apply(const AdtType& type, const AdtValue& value, const AdtOp& op) {
  validate_op(type, op);
  switch (type.kind) {
    case AdtKind::Trivial: return std::nullopt;
    case AdtKind::Counter:
    case AdtKind::WeakCounter: {
      auto c = expect<CounterValue>(type, value);
      switch (op.code) {
        case OpCode::Inc: ++c.count; return c;
        case OpCode::Dec:
          if (c.count == 0) return std::nullopt;
          --c.count;
          return c;
        case OpCode::IsZero:
          if (c.count != 0) return std::nullopt;
          return c;
        default: return std::nullopt;
      }
    }
    case AdtKind::Stack: {
      auto w = expect<Word>(type, value);
      if (!word_apply(w.symbols, op.code, op.symbol)) return std::nullopt;
      return w;
    }
    case AdtKind::HoStack:
    case AdtKind::HoCounter:
    case AdtKind::HoWeakCounter: {
      if (op.code == OpCode::Reset) return type.initial;
      auto v = expect<HoStack>(type, value);
      const OpCode code = type.kind == AdtKind::HoStack ? op.code : counter_as_stack(op.code);
      const Symbol symbol = type.kind == AdtKind::HoStack ? op.symbol : 0;
      const bool ok = op.index == 0 ? ho_base(v, type.level, code, symbol) : ho_level(v, type.level, code, op.index);
      if (!ok) return std::nullopt;
      return v;
    }
    case AdtKind::MultiStack: {
      auto m = expect<MultiStackValue>(type, value);
      const std::uint32_t i = op.index - 1;
      if (op.code == OpCode::Pop) {
        for (std::uint32_t j = 0; j < i; ++j)
          if (!m.stacks[j].symbols.empty()) return std::nullopt;
      }
      if (!word_apply(m.stacks[i].symbols, op.code, op.symbol)) return std::nullopt;
      return m;
    }
    case AdtKind::Petri: {
      auto m = expect<Marking>(type, value);
      const auto& t = type.net.transitions[op.symbol];
      for (std::size_t p = 0; p < m.tokens.size(); ++p) {
        if (m.tokens[p] < t.input[p]) return std::nullopt;
      }
      for (std::size_t p = 0; p < m.tokens.size(); ++p) m.tokens[p] = m.tokens[p] - t.input[p] + t.output[p];
      return m;
    }
  }
  return std::nullopt;
}

std::vector<AdtValue> adt_step(const AdtType& type, const AdtValue& value, const AdtOp& op) {
  std::vector<AdtValue> out;
  if (auto next = adt_apply(type, value, op)) out.push_back(std::move(*next));
  return out;
}

std::vector<AdtOp> all_ops(const AdtType& type) {
  std::vector<AdtOp> ops;
  const auto n_sym = static_cast<Symbol>(type.alphabet.size());
  switch (type.kind) {
    case AdtKind::Trivial: break;
    case AdtKind::Counter: ops.push_back({OpCode::IsZero, 0, 0}); [[fallthrough]];
    case AdtKind::WeakCounter:
      ops.push_back({OpCode::Inc, 0, 0});
      ops.push_back({OpCode::Dec, 0, 0});
      break;
    case AdtKind::Stack:
      for (Symbol s = 0; s < n_sym; ++s) {
        ops.push_back({OpCode::Push, s, 0});
        ops.push_back({OpCode::Pop, s, 0});
      }
      ops.push_back({OpCode::IsEmpty, 0, 0});
      break;
    case AdtKind::HoStack:
      for (Symbol s = 0; s < n_sym; ++s) {
        ops.push_back({OpCode::Push, s, 0});
        ops.push_back({OpCode::Pop, s, 0});
      }
      ops.push_back({OpCode::IsEmpty, 0, 0});
      for (std::uint32_t k = 2; k <= type.level; ++k) {
        ops.push_back({OpCode::Push, 0, k});
        ops.push_back({OpCode::Pop, 0, k});
        ops.push_back({OpCode::IsEmpty, 0, k});
      }
      break;
    case AdtKind::HoCounter:
    case AdtKind::HoWeakCounter:
      for (std::uint32_t k = 0; k <= type.level; ++k) {
        if (k == 1) continue;
        ops.push_back({OpCode::Inc, 0, k});
        ops.push_back({OpCode::Dec, 0, k});
        if (type.kind == AdtKind::HoCounter) ops.push_back({OpCode::IsZero, 0, k});
      }
      break;
    case AdtKind::MultiStack:
      for (std::uint32_t i = 1; i <= type.level; ++i) {
        for (Symbol s = 0; s < n_sym; ++s) {
          ops.push_back({OpCode::Push, s, i});
          ops.push_back({OpCode::Pop, s, i});
        }
        ops.push_back({OpCode::IsEmpty, 0, i});
      }
      break;
    case AdtKind::Petri:
      for (Symbol t = 0; t < type.net.transitions.size(); ++t) ops.push_back({OpCode::Fire, t, 0});
      break;
  }
  return ops;
}

namespace {

std::uint64_t ho_size(const HoStack& v, std::uint32_t level) {
  if (level == 1) return v.word.size();
  std::uint64_t total = v.elems.empty() ? 0 : v.elems.size() - 1;
  for (const auto& e : v.elems) total += ho_size(e, level - 1);
  return total;
}

}  // namespace

std::uint64_t value_size(const AdtType& type, const AdtValue& value) {
  switch (type.kind) {
    case AdtKind::Trivial: return 0;
    case AdtKind::Counter:
    case AdtKind::WeakCounter: return expect<CounterValue>(type, value).count;
    case AdtKind::Stack: return expect<Word>(type, value).symbols.size();
    case AdtKind::HoStack:
    case AdtKind::HoCounter:
    case AdtKind::HoWeakCounter: return ho_size(expect<HoStack>(type, value), type.level);
    case AdtKind::MultiStack: {
      std::uint64_t total = 0;
      for (const auto& w : expect<MultiStackValue>(type, value).stacks) total += w.symbols.size();
      return total;
    }
    case AdtKind::Petri: {
      std::uint64_t total = 0;
      for (auto t : expect<Marking>(type, value).tokens) total += t;
      return total;
    }
  }
  return 0;
}

bool has_wqo(AdtKind kind) {
  return kind == AdtKind::Trivial || kind == AdtKind::Counter || kind == AdtKind::WeakCounter ||
         kind == AdtKind::Petri;
}

bool is_well_structured(AdtKind kind) {
  return kind == AdtKind::Trivial || kind == AdtKind::WeakCounter || kind == AdtKind::Petri;
}

bool wqo_leq(const AdtType& type, const AdtValue& lhs, const AdtValue& rhs) {
  switch (type.kind) {
    case AdtKind::Trivial: return lhs == rhs;
    case AdtKind::Counter:
    case AdtKind::WeakCounter: return expect<CounterValue>(type, lhs).count <= expect<CounterValue>(type, rhs).count;
    case AdtKind::Petri: {
      const auto& a = expect<Marking>(type, lhs).tokens;
      const auto& b = expect<Marking>(type, rhs).tokens;
      if (a.size() != b.size()) throw AdtError("markings over different place sets");
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
      return true;
    }
    default:
      throw UnsupportedOrder(std::string("no well-quasi-ordering for ") + std::string(kind_name(type.kind)));
  }
}

UpwardBasis minimize(const AdtType& type, std::vector<AdtValue> values) {
  UpwardBasis basis;
  for (std::size_t i = 0; i < values.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < values.size() && !dominated; ++j) {
      if (i == j || !wqo_leq(type, values[j], values[i])) continue;
      dominated = !wqo_leq(type, values[i], values[j]) || j < i;
    }
    if (!dominated) basis.elements.push_back(values[i]);
  }
  return basis;
}

AdtValue wqo_bottom(const AdtType& type) {
  switch (type.kind) {
    case AdtKind::Trivial: return std::monostate{};
    case AdtKind::Counter:
    case AdtKind::WeakCounter: return CounterValue{};
    case AdtKind::Petri: return Marking{std::vector<std::uint32_t>(type.net.places.size(), 0)};
    default:
      throw UnsupportedOrder(std::string("no well-quasi-ordering for ") + std::string(kind_name(type.kind)));
  }
}

UpwardBasis pre_min_upward(const AdtType& type, const AdtOp& op, const UpwardBasis& basis) {
  if (!has_wqo(type.kind))
    throw UnsupportedOrder(std::string("no well-quasi-ordering for ") + std::string(kind_name(type.kind)));
  validate_op(type, op);
  std::vector<AdtValue> pre;
  for (const auto& element : basis.elements) {
    switch (type.kind) {
      case AdtKind::Counter:
      case AdtKind::WeakCounter: {
        const auto k = expect<CounterValue>(type, element).count;
        if (op.code == OpCode::Inc) pre.push_back(CounterValue{k == 0 ? 0 : k - 1});
        else if (op.code == OpCode::Dec) pre.push_back(CounterValue{k + 1});
        else if (op.code == OpCode::IsZero && k == 0) pre.push_back(CounterValue{0});
        break;
      }
      case AdtKind::Petri: {
        const auto& m = expect<Marking>(type, element).tokens;
        const auto& t = type.net.transitions[op.symbol];
        Marking result;
        result.tokens.resize(m.size());
        for (std::size_t p = 0; p < m.size(); ++p)
          result.tokens[p] = (m[p] > t.output[p] ? m[p] - t.output[p] : 0) + t.input[p];
        pre.push_back(std::move(result));
        break;
      }
      default: break;
    }
  }
  return minimize(type, std::move(pre));
}

std::string format_op(const AdtType& type, const AdtOp& op) {
  std::string name = code_name(op.code);
  if (op.index != 0) name += "_" + std::to_string(op.index);
  const bool has_symbol = (op.code == OpCode::Push || op.code == OpCode::Pop) &&
                          (type.kind == AdtKind::Stack || type.kind == AdtKind::MultiStack ||
                           (type.kind == AdtKind::HoStack && op.index == 0));
  if (has_symbol && op.symbol < type.alphabet.size()) name += " " + type.alphabet[op.symbol];
  if (op.code == OpCode::Fire && op.symbol < type.net.transitions.size())
    name += " " + type.net.transitions[op.symbol].name;
  return name;
}

namespace {

void format_ho(std::ostringstream& out, const AdtType& type, const HoStack& v, std::uint32_t level) {
  out << '[';
  if (level == 1) {
    for (std::size_t i = 0; i < v.word.size(); ++i) out << (i ? "," : "") << type.alphabet[v.word[i]];
  } else {
    for (std::size_t i = 0; i < v.elems.size(); ++i) {
      if (i) out << ',';
      format_ho(out, type, v.elems[i], level - 1);
    }
  }
  out << ']';
}

void format_word(std::ostringstream& out, const AdtType& type, const Word& w) {
  out << '[';
  for (std::size_t i = 0; i < w.symbols.size(); ++i) out << (i ? "," : "") << type.alphabet[w.symbols[i]];
  out << ']';
}

}  // namespace

std::string format_value(const AdtType& type, const AdtValue& value) {
  std::ostringstream out;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          out << "()";
        } else if constexpr (std::is_same_v<T, CounterValue>) {
          out << v.count;
        } else if constexpr (std::is_same_v<T, Word>) {
          format_word(out, type, v);
        } else if constexpr (std::is_same_v<T, HoStack>) {
          format_ho(out, type, v, type.level);
        } else if constexpr (std::is_same_v<T, MultiStackValue>) {
          out << '(';
          for (std::size_t i = 0; i < v.stacks.size(); ++i) {
            if (i) out << ',';
            format_word(out, type, v.stacks[i]);
          }
          out << ')';
        } else {
          out << '{';
          bool first = true;
          for (std::size_t p = 0; p < v.tokens.size(); ++p) {
            if (v.tokens[p] == 0) continue;
            out << (first ? "" : ",") << type.net.places[p] << ':' << v.tokens[p];
            first = false;
          }
          out << '}';
        }
      },
      value);
  return out.str();
}

AdtOp parse_op(const AdtType& type, std::span<const std::string> tokens) {
  if (tokens.empty()) throw AdtError("missing operation name");
  std::string name = tokens[0];
  std::uint32_t index = 0;
  if (const auto us = name.rfind('_'); us != std::string::npos && us + 1 < name.size()) {
    const auto* first = name.data() + us + 1;
    const auto* last = name.data() + name.size();
    std::uint32_t parsed = 0;
    const auto [ptr, ec] = std::from_chars(first, last, parsed);
    if (ec == std::errc{} && ptr == last) {
      index = parsed;
      name = name.substr(0, us);
    }
  }
  AdtOp op;
  op.index = index;
  if (name == "inc") op.code = OpCode::Inc;
  else if (name == "dec") op.code = OpCode::Dec;
  else if (name == "iszero") op.code = OpCode::IsZero;
  else if (name == "push") op.code = OpCode::Push;
  else if (name == "pop") op.code = OpCode::Pop;
  else if (name == "isempty") op.code = OpCode::IsEmpty;
  else if (name == "fire") op.code = OpCode::Fire;
  else if (name == "reset") op.code = OpCode::Reset;
  else throw AdtError("unknown operation '" + tokens[0] + "'");

  const bool wants_symbol = (op.code == OpCode::Push || op.code == OpCode::Pop) &&
                            (type.kind == AdtKind::Stack || type.kind == AdtKind::MultiStack ||
                             (type.kind == AdtKind::HoStack && index == 0));
  std::size_t expected_args = 0;
  if (wants_symbol) {
    expected_args = 1;
    if (tokens.size() < 2) throw AdtError("operation '" + tokens[0] + "' needs a stack symbol");
    const auto sym = type.symbol_index(tokens[1]);
    if (!sym) throw AdtError("unknown stack symbol '" + tokens[1] + "'");
    op.symbol = *sym;
  } else if (op.code == OpCode::Fire) {
    expected_args = 1;
    if (tokens.size() < 2) throw AdtError("fire needs a transition name");
    const auto t = type.net.transition_index(tokens[1]);
    if (!t) throw AdtError("unknown Petri transition '" + tokens[1] + "'");
    op.symbol = *t;
  }
  if (tokens.size() != expected_args + 1) throw AdtError("wrong number of arguments for '" + tokens[0] + "'");
  validate_op(type, op);
  return op;
}

}  // namespace ptso
