#include "ptso/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

namespace ptso {

DslError::DslError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based
};

struct Line {
  std::size_t number = 0;
  std::string raw;  // comment stripped
  std::vector<Token> tokens;

  [[noreturn]] void fail(std::size_t token, const std::string& message) const {
    const std::size_t column = token < tokens.size() ? tokens[token].column : raw.size() + 1;
    throw DslError(number, column, message);
  }
  const std::string& at(std::size_t i, const char* what) const {
    if (i >= tokens.size()) fail(i, std::string("expected ") + what);
    return tokens[i].text;
  }
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string raw(text.substr(start, end - start));
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    Line line{number, raw, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i >= raw.size()) break;
      const std::size_t begin = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      line.tokens.push_back({raw.substr(begin, i - begin), begin + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

std::optional<std::uint32_t> to_uint(std::string_view s) {
  std::uint32_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

/// Joins tokens [from, to) and splits the result on commas.
std::vector<std::string> name_list(const Line& line, std::size_t from, std::size_t to) {
  std::string joined;
  for (std::size_t i = from; i < to; ++i) joined += line.tokens[i].text;
  std::vector<std::string> names;
  if (joined.empty()) return names;
  for (auto& part : split(joined, ',')) {
    if (part.empty()) line.fail(from, "empty name in list");
    if (std::find(names.begin(), names.end(), part) != names.end()) line.fail(from, "duplicate name '" + part + "'");
    names.push_back(std::move(part));
  }
  return names;
}

std::size_t find_token(const Line& line, std::size_t from, std::string_view text) {
  for (std::size_t i = from; i < line.tokens.size(); ++i)
    if (line.tokens[i].text == text) return i;
  return line.tokens.size();
}

/// Parses `0..k`.
std::uint32_t parse_domain(const Line& line, std::size_t index) {
  const auto& text = line.at(index, "domain 0..k");
  if (text.rfind("0..", 0) != 0) line.fail(index, "domain must have the form 0..k");
  const auto value = to_uint(std::string_view(text).substr(3));
  if (!value) line.fail(index, "domain must have the form 0..k");
  return *value;
}

std::uint32_t parse_uint(const Line& line, std::size_t index, const char* what) {
  const auto value = to_uint(line.at(index, what));
  if (!value) line.fail(index, std::string("expected ") + what + ", got '" + line.tokens[index].text + "'");
  return *value;
}

// Petri arc list: `p + q*2`, possibly empty.
std::vector<std::uint32_t> parse_arcs(const Line& line, std::size_t token, const std::vector<std::string>& places,
                                      const std::string& text) {
  std::vector<std::uint32_t> arcs(places.size(), 0);
  if (trim(text).empty()) return arcs;
  for (const auto& term : split(text, '+')) {
    std::string name = term;
    std::uint32_t weight = 1;
    if (const auto star = term.find('*'); star != std::string::npos) {
      name = trim(term.substr(0, star));
      const auto w = to_uint(trim(term.substr(star + 1)));
      if (!w) line.fail(token, "bad arc weight in '" + term + "'");
      weight = *w;
    }
    const auto it = std::find(places.begin(), places.end(), name);
    if (it == places.end()) line.fail(token, "unknown place '" + name + "'");
    arcs[it - places.begin()] += weight;
  }
  return arcs;
}

Marking parse_marking(const Line& line, std::size_t from, const std::vector<std::string>& places) {
  Marking m;
  m.tokens.assign(places.size(), 0);
  std::string joined;
  for (std::size_t i = from; i < line.tokens.size(); ++i) joined += line.tokens[i].text;
  if (joined.empty()) return m;
  for (const auto& item : split(joined, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) line.fail(from, "expected place=count, got '" + item + "'");
    const auto name = item.substr(0, eq);
    const auto it = std::find(places.begin(), places.end(), name);
    if (it == places.end()) line.fail(from, "unknown place '" + name + "'");
    const auto count = to_uint(item.substr(eq + 1));
    if (!count) line.fail(from, "bad token count in '" + item + "'");
    m.tokens[it - places.begin()] = *count;
  }
  return m;
}

// `line.tokens[first]` is the ADT kind keyword.
AdtType parse_adt_tokens(const Line& line, std::size_t first) {
  const auto& kind = line.at(first, "ADT kind");
  const std::size_t end = line.tokens.size();
  const auto expect_end = [&](std::size_t i) {
    if (i < end) line.fail(i, "unexpected '" + line.tokens[i].text + "'");
  };
  const auto alphabet_after = [&](std::size_t i) {
    if (i >= end || line.tokens[i].text != "alphabet") line.fail(i, "expected 'alphabet'");
    return name_list(line, i + 1, end);
  };
  if (kind == "trivial") {
    expect_end(first + 1);
    return AdtType::trivial();
  }
  if (kind == "counter") {
    expect_end(first + 1);
    return AdtType::counter();
  }
  if (kind == "weakcounter") {
    expect_end(first + 1);
    return AdtType::weak_counter();
  }
  if (kind == "stack") return AdtType::stack(alphabet_after(first + 1));
  if (kind == "hostack" || kind == "hocounter" || kind == "howeakcounter") {
    if (line.at(first + 1, "'level'") != "level") line.fail(first + 1, "expected 'level'");
    const auto level = parse_uint(line, first + 2, "level");
    if (level < 1) line.fail(first + 2, "level must be at least 1");
    if (kind == "hostack") return AdtType::ho_stack(level, alphabet_after(first + 3));
    expect_end(first + 3);
    return kind == "hocounter" ? AdtType::ho_counter(level) : AdtType::ho_weak_counter(level);
  }
  if (kind == "multistack") {
    if (line.at(first + 1, "'count'") != "count") line.fail(first + 1, "expected 'count'");
    const auto count = parse_uint(line, first + 2, "stack count");
    if (count < 1) line.fail(first + 2, "count must be at least 1");
    return AdtType::multi_stack(count, alphabet_after(first + 3));
  }
  if (kind == "petri") {
    if (line.at(first + 1, "'places'") != "places") line.fail(first + 1, "expected 'places'");
    const auto trans_at = find_token(line, first + 2, "transitions");
    const auto init_at = find_token(line, first + 2, "initial");
    PetriNet net;
    net.places = name_list(line, first + 2, std::min(trans_at, init_at));
    if (trans_at < end) {
      const auto from = line.tokens[trans_at].column - 1 + std::string("transitions").size();
      const auto to = init_at < end ? line.tokens[init_at].column - 1 : line.raw.size();
      const auto body = trim(std::string_view(line.raw).substr(from, to - from));
      if (!body.empty()) {
        for (const auto& item : split(body, ';')) {
          if (item.empty()) continue;
          const auto colon = item.find(':');
          const auto arrow = item.find("->");
          if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
            line.fail(trans_at, "transition must look like 'name: pre -> post'");
          PetriTransition t;
          t.name = trim(item.substr(0, colon));
          if (t.name.empty()) line.fail(trans_at, "transition without a name");
          for (const auto& other : net.transitions)
            if (other.name == t.name) line.fail(trans_at, "duplicate transition '" + t.name + "'");
          t.input = parse_arcs(line, trans_at, net.places, item.substr(colon + 1, arrow - colon - 1));
          t.output = parse_arcs(line, trans_at, net.places, item.substr(arrow + 2));
          net.transitions.push_back(std::move(t));
        }
      }
    }
    if (init_at < end) net.initial = parse_marking(line, init_at + 1, net.places);
    return AdtType::petri(std::move(net));
  }
  line.fail(first, "unknown ADT kind '" + kind + "'");
}

struct StateDecl {
  std::vector<std::string> names;
  std::optional<std::uint32_t> init;
  std::optional<std::uint32_t> target;
  std::vector<std::uint32_t> accepting;
};

// `state q [init] [target|accept]`
void parse_state(const Line& line, StateDecl& decl, bool accept_keyword) {
  const auto& name = line.at(1, "state name");
  if (std::find(decl.names.begin(), decl.names.end(), name) != decl.names.end())
    line.fail(1, "duplicate state '" + name + "'");
  const auto index = static_cast<std::uint32_t>(decl.names.size());
  decl.names.push_back(name);
  for (std::size_t i = 2; i < line.tokens.size(); ++i) {
    const auto& flag = line.tokens[i].text;
    if (flag == "init") {
      if (decl.init) line.fail(i, "second initial state");
      decl.init = index;
    } else if (!accept_keyword && (flag == "target" || flag == "final")) {
      if (decl.target) line.fail(i, "second target state");
      decl.target = index;
    } else if (accept_keyword && flag == "accept") {
      decl.accepting.push_back(index);
    } else {
      line.fail(i, "unknown state flag '" + flag + "'");
    }
  }
}

std::uint32_t resolve_state(const Line& line, std::size_t token, const StateDecl& decl) {
  const auto& name = line.at(token, "state name");
  const auto it = std::find(decl.names.begin(), decl.names.end(), name);
  if (it == decl.names.end()) line.fail(token, "undeclared state '" + name + "'");
  return static_cast<std::uint32_t>(it - decl.names.begin());
}

AdtOp parse_op_tokens(const Line& line, std::size_t first, const AdtType& adt) {
  std::vector<std::string> tokens;
  for (std::size_t i = first; i < line.tokens.size(); ++i) tokens.push_back(line.tokens[i].text);
  try {
    return parse_op(adt, tokens);
  } catch (const AdtError& e) {
    line.fail(first, e.what());
  }
}

// `trans a -> b : ...`; returns the index of the first instruction token.
std::size_t parse_arrow(const Line& line) {
  if (line.at(2, "'->'") != "->") line.fail(2, "expected '->'");
  if (line.at(4, "':'") != ":") line.fail(4, "expected ':'");
  line.at(5, "instruction");
  return 5;
}

void require_initial_and_target(const StateDecl& decl, const Line* section, const char* what) {
  const std::size_t number = section ? section->number : 0;
  if (decl.names.empty()) throw DslError(number, 1, std::string(what) + " declares no states");
  if (!decl.init) throw DslError(number, 1, std::string(what) + " has no initial state");
  if (!decl.target) throw DslError(number, 1, std::string(what) + " has no target state");
}

}  // namespace

AdtType parse_adt(std::string_view declaration) {
  auto lines = split_lines(declaration);
  if (lines.size() != 1) throw DslError(1, 1, "expected a single ADT declaration");
  return parse_adt_tokens(lines.front(), 0);
}

DocumentKind detect_kind(std::string_view text) {
  for (const auto& line : split_lines(text)) {
    const auto& head = line.tokens.front().text;
    if (head == "process") return DocumentKind::Program;
    if (head == "machine") return DocumentKind::Machine;
    if (head == "pda" || head == "fsa") return DocumentKind::Automata;
    if (head == "cover") return DocumentKind::Coverability;
  }
  throw DslError(1, 1, "cannot tell the document kind (no process, machine, pda, fsa or cover line)");
}

Program parse_program(std::string_view text) {
  const auto lines = split_lines(text);
  Program program;
  bool have_memory = false;
  bool have_adt = false;
  const Line* section = nullptr;
  StateDecl decl;
  std::vector<const Line*> pending;
  for (const auto& line : lines) {
    const auto& head = line.tokens[0].text;
    if (head == "memory") {
      if (have_memory) line.fail(0, "second memory declaration");
      if (line.at(1, "'vars'") != "vars") line.fail(1, "expected 'vars'");
      const auto dom = find_token(line, 2, "domain");
      if (dom == line.tokens.size()) line.fail(dom, "expected 'domain'");
      program.memory.vars = name_list(line, 2, dom);
      program.memory.d_max = parse_domain(line, dom + 1);
      if (dom + 2 < line.tokens.size()) line.fail(dom + 2, "unexpected token");
      have_memory = true;
    } else if (head == "adt") {
      if (have_adt) line.fail(0, "second adt declaration");
      program.adt = parse_adt_tokens(line, 1);
      have_adt = true;
    } else if (head == "process") {
      if (section) line.fail(0, "only one process section is allowed");
      program.process.name = line.at(1, "process name");
      section = &line;
    } else if (head == "state") {
      if (!section) line.fail(0, "state outside a process section");
      parse_state(line, decl, false);
    } else if (head == "trans") {
      if (!section) line.fail(0, "transition outside a process section");
      pending.push_back(&line);
    } else {
      line.fail(0, "unknown keyword '" + head + "'");
    }
  }
  if (!section) throw DslError(lines.empty() ? 1 : lines.back().number, 1, "missing process section");
  require_initial_and_target(decl, section, "process");
  if (!have_memory) throw DslError(section->number, 1, "missing memory declaration");
  auto& p = program.process;
  p.states = decl.names;
  p.init = *decl.init;
  p.target = *decl.target;
  const auto& mem = program.memory;
  for (const Line* lp : pending) {
    const Line& line = *lp;
    const auto from = resolve_state(line, 1, decl);
    const auto to = resolve_state(line, 3, decl);
    const auto at = parse_arrow(line);
    const auto& op = line.tokens[at].text;
    Instruction instr;
    std::size_t used = at + 1;
    if (op == "rd" || op == "wr") {
      const auto var = mem.var_index(line.at(at + 1, "variable"));
      if (!var) line.fail(at + 1, "undeclared variable '" + line.tokens[at + 1].text + "'");
      const auto value = parse_uint(line, at + 2, "value");
      if (value > mem.d_max) line.fail(at + 2, "value " + std::to_string(value) + " outside the domain");
      instr = op == "rd" ? Instruction::read(*var, value) : Instruction::write(*var, value);
      used = at + 3;
    } else if (op == "skip") {
      instr = Instruction::skip();
    } else if (op == "mf") {
      instr = Instruction::fence();
    } else if (op == "op") {
      instr = Instruction::adt(parse_op_tokens(line, at + 1, program.adt));
      used = line.tokens.size();
    } else {
      line.fail(at, "unknown instruction '" + op + "'");
    }
    if (used < line.tokens.size()) line.fail(used, "unexpected token");
    p.add(from, instr, to);
  }
  return program;
}

RegisterMachine parse_machine(std::string_view text) {
  const auto lines = split_lines(text);
  RegisterMachine rm;
  bool have_registers = false;
  bool have_adt = false;
  const Line* section = nullptr;
  StateDecl decl;
  std::vector<const Line*> pending;
  for (const auto& line : lines) {
    const auto& head = line.tokens[0].text;
    if (head == "adt") {
      if (have_adt) line.fail(0, "second adt declaration");
      rm.adt = parse_adt_tokens(line, 1);
      have_adt = true;
    } else if (head == "machine") {
      if (section) line.fail(0, "only one machine section is allowed");
      rm.name = line.at(1, "machine name");
      section = &line;
    } else if (head == "registers") {
      if (have_registers) line.fail(0, "second registers declaration");
      const auto dom = find_token(line, 1, "domain");
      if (dom == line.tokens.size()) line.fail(dom, "expected 'domain'");
      rm.registers = name_list(line, 1, dom);
      rm.bound = parse_domain(line, dom + 1);
      if (dom + 2 < line.tokens.size()) line.fail(dom + 2, "unexpected token");
      have_registers = true;
    } else if (head == "state") {
      if (!section) line.fail(0, "state outside a machine section");
      parse_state(line, decl, false);
    } else if (head == "trans") {
      if (!section) line.fail(0, "transition outside a machine section");
      pending.push_back(&line);
    } else {
      line.fail(0, "unknown keyword '" + head + "'");
    }
  }
  if (!section) throw DslError(lines.empty() ? 1 : lines.back().number, 1, "missing machine section");
  require_initial_and_target(decl, section, "machine");
  rm.states = decl.names;
  rm.init = *decl.init;
  rm.target = *decl.target;

  for (const Line* lp : pending) {
    const Line& line = *lp;
    const auto from = resolve_state(line, 1, decl);
    const auto to = resolve_state(line, 3, decl);
    const auto at = parse_arrow(line);
    const auto& op = line.tokens[at].text;
    const auto reg = [&](std::size_t i) {
      const auto r = rm.register_index(line.at(i, "register"));
      if (!r) line.fail(i, "undeclared register '" + line.tokens[i].text + "'");
      return *r;
    };
    const auto literal = [&](std::size_t i) {
      const auto v = parse_uint(line, i, "value");
      if (v > rm.bound) line.fail(i, "value " + std::to_string(v) + " exceeds the register bound");
      return v;
    };
    const auto operand = [&](std::size_t i) {
      const auto& t = line.at(i, "operand");
      if (to_uint(t)) return Operand::lit(literal(i));
      return Operand::reg(reg(i));
    };
    RmAction action;
    std::size_t used = at + 1;
    if (op == "skp") {
      action = RmAction::skip();
    } else if (op == "write" || op == "read") {
      const auto r = reg(at + 1);
      const auto d = literal(at + 2);
      action = op == "write" ? RmAction::write(r, d) : RmAction::read(r, d);
      used = at + 3;
    } else if (op == "inc" || op == "dec" || op == "ckz") {
      const auto r = reg(at + 1);
      action = op == "inc" ? RmAction::inc(r) : op == "dec" ? RmAction::dec(r) : RmAction::check_zero(r);
      used = at + 2;
    } else if (op == "set") {
      action = RmAction::set(reg(at + 1), operand(at + 2));
      used = at + 3;
    } else if (op == "cke" || op == "ckne" || op == "ckl" || op == "ckg" || op == "ckle" || op == "ckge") {
      const ActionKind kind = op == "cke"    ? ActionKind::CheckEq
                              : op == "ckne" ? ActionKind::CheckNe
                              : op == "ckl"  ? ActionKind::CheckLt
                              : op == "ckg"  ? ActionKind::CheckGt
                              : op == "ckle" ? ActionKind::CheckLe
                                             : ActionKind::CheckGe;
      action = RmAction::compare(kind, operand(at + 1), operand(at + 2));
      used = at + 3;
    } else if (op == "op") {
      action = RmAction::adt(parse_op_tokens(line, at + 1, rm.adt));
      used = line.tokens.size();
    } else {
      line.fail(at, "unknown action '" + op + "'");
    }
    if (used < line.tokens.size()) line.fail(used, "unexpected token");
    rm.add(from, action, to);
  }
  return rm;
}

namespace {

std::uint32_t symbol_of(const Line& line, std::size_t token, const std::vector<std::string>& alphabet,
                        const std::string& text, const char* what) {
  const auto it = std::find(alphabet.begin(), alphabet.end(), text);
  if (it == alphabet.end()) line.fail(token, std::string("unknown ") + what + " '" + text + "'");
  return static_cast<std::uint32_t>(it - alphabet.begin());
}

}  // namespace

AutomataInput parse_automata(std::string_view text) {
  const auto lines = split_lines(text);
  AutomataInput input;
  bool have_pda = false;

  struct Section {
    const Line* header = nullptr;
    bool is_pda = false;
    StateDecl decl;
    std::vector<std::string> alphabet;
    std::vector<std::string> stack;
    std::optional<std::string> start;
    const Line* start_line = nullptr;
    std::vector<const Line*> trans;
  };
  std::vector<Section> sections;

  for (const auto& line : lines) {
    const auto& head = line.tokens[0].text;
    if (head == "pda" || head == "fsa") {
      if (head == "pda") {
        if (have_pda) line.fail(0, "only one pda section is allowed");
        have_pda = true;
      }
      Section s;
      s.header = &line;
      s.is_pda = head == "pda";
      line.at(1, "automaton name");
      sections.push_back(std::move(s));
      continue;
    }
    if (sections.empty()) line.fail(0, "'" + head + "' outside a pda/fsa section");
    auto& s = sections.back();
    if (head == "alphabet") {
      s.alphabet = name_list(line, 1, line.tokens.size());
    } else if (head == "stack") {
      if (!s.is_pda) line.fail(0, "stack alphabet in an fsa section");
      s.stack = name_list(line, 1, line.tokens.size());
    } else if (head == "start") {
      if (!s.is_pda) line.fail(0, "start symbol in an fsa section");
      s.start = line.at(1, "start symbol");
      s.start_line = &line;
    } else if (head == "state") {
      parse_state(line, s.decl, true);
    } else if (head == "trans") {
      s.trans.push_back(&line);
    } else {
      line.fail(0, "unknown keyword '" + head + "'");
    }
  }
  if (!have_pda) throw DslError(lines.empty() ? 1 : lines.back().number, 1, "missing pda section");

  for (auto& s : sections) {
    if (s.decl.names.empty()) throw DslError(s.header->number, 1, "automaton declares no states");
    if (!s.decl.init) throw DslError(s.header->number, 1, "automaton has no initial state");
    if (s.is_pda) {
      auto& k = input.pda;
      k.name = s.header->tokens[1].text;
      k.states = s.decl.names;
      k.init = *s.decl.init;
      k.accepting = s.decl.accepting;
      k.alphabet = s.alphabet;
      k.stack_alphabet = s.stack;
      if (!s.start) throw DslError(s.header->number, 1, "pda has no start symbol");
      k.start = symbol_of(*s.start_line, 1, k.stack_alphabet, *s.start, "stack symbol");
      for (const Line* lp : s.trans) {
        const Line& line = *lp;
        // trans q a [g/w1 w2] -> q'
        PdaTransition t;
        t.from = resolve_state(line, 1, s.decl);
        const auto& sym = line.at(2, "input symbol or eps");
        if (sym != "eps") t.symbol = symbol_of(line, 2, k.alphabet, sym, "input symbol");
        const auto open = line.raw.find('[');
        const auto close = line.raw.find(']');
        if (open == std::string::npos || close == std::string::npos || close < open)
          line.fail(3, "expected '[pop/push]'");
        const auto body = line.raw.substr(open + 1, close - open - 1);
        const auto slash = body.find('/');
        if (slash == std::string::npos) line.fail(3, "expected '[pop/push]'");
        t.pop = symbol_of(line, 3, k.stack_alphabet, trim(body.substr(0, slash)), "stack symbol");
        std::istringstream pushed(body.substr(slash + 1));
        for (std::string w; pushed >> w;) t.push.push_back(symbol_of(line, 3, k.stack_alphabet, w, "stack symbol"));
        std::size_t arrow = line.tokens.size();
        for (std::size_t i = 3; i < line.tokens.size(); ++i)
          if (line.tokens[i].text == "->") arrow = i;
        if (arrow + 2 != line.tokens.size()) line.fail(arrow, "expected '-> state'");
        t.to = resolve_state(line, arrow + 1, s.decl);
        k.delta.push_back(std::move(t));
      }
    } else {
      FiniteAutomaton f;
      f.name = s.header->tokens[1].text;
      f.states = s.decl.names;
      f.init = *s.decl.init;
      f.accepting = s.decl.accepting;
      f.alphabet = s.alphabet;
      for (const Line* lp : s.trans) {
        const Line& line = *lp;
        FiniteAutomaton::Edge e;
        e.from = resolve_state(line, 1, s.decl);
        e.symbol = symbol_of(line, 2, f.alphabet, line.at(2, "input symbol"), "input symbol");
        if (line.at(3, "'->'") != "->") line.fail(3, "expected '->'");
        e.to = resolve_state(line, 4, s.decl);
        if (line.tokens.size() > 5) line.fail(5, "unexpected token");
        f.delta.push_back(e);
      }
      input.fsas.push_back(std::move(f));
    }
  }
  return input;
}

CoverabilityInstance parse_coverability(std::string_view text) {
  const auto lines = split_lines(text);
  std::optional<AdtType> adt;
  const Line* cover = nullptr;
  for (const auto& line : lines) {
    const auto& head = line.tokens[0].text;
    if (head == "adt") {
      if (adt) line.fail(0, "second adt declaration");
      adt = parse_adt_tokens(line, 1);
      if (adt->kind != AdtKind::Petri) line.fail(1, "coverability instances need 'adt petri'");
    } else if (head == "cover") {
      if (cover) line.fail(0, "second cover line");
      cover = &line;
    } else {
      line.fail(0, "unknown keyword '" + head + "'");
    }
  }
  if (!adt) throw DslError(1, 1, "missing 'adt petri' declaration");
  if (!cover) throw DslError(lines.empty() ? 1 : lines.back().number, 1, "missing cover line");
  CoverabilityInstance instance;
  instance.net = adt->net;
  instance.target = parse_marking(*cover, 1, instance.net.places);
  return instance;
}

namespace {

std::string join(const std::vector<std::string>& items, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string print_arcs(const std::vector<std::string>& places, const std::vector<std::uint32_t>& arcs) {
  std::vector<std::string> terms;
  for (std::size_t p = 0; p < arcs.size(); ++p) {
    if (arcs[p] == 0) continue;
    terms.push_back(arcs[p] == 1 ? places[p] : places[p] + "*" + std::to_string(arcs[p]));
  }
  return join(terms, " + ");
}

std::string print_marking(const std::vector<std::string>& places, const Marking& m) {
  std::vector<std::string> items;
  for (std::size_t p = 0; p < m.tokens.size(); ++p)
    if (m.tokens[p] != 0) items.push_back(places[p] + "=" + std::to_string(m.tokens[p]));
  return join(items);
}

void print_states(std::ostringstream& out, const std::vector<std::string>& states, std::uint32_t init,
                  std::uint32_t target) {
  for (std::uint32_t q = 0; q < states.size(); ++q) {
    out << "state " << states[q];
    if (q == init) out << " init";
    if (q == target) out << " target";
    out << '\n';
  }
}

}  // namespace

std::string print_adt(const AdtType& type) {
  std::string out = "adt ";
  switch (type.kind) {
    case AdtKind::Trivial: return out + "trivial";
    case AdtKind::Counter: return out + "counter";
    case AdtKind::WeakCounter: return out + "weakcounter";
    case AdtKind::Stack: return out + "stack alphabet " + join(type.alphabet);
    case AdtKind::HoStack:
      return out + "hostack level " + std::to_string(type.level) + " alphabet " + join(type.alphabet);
    case AdtKind::HoCounter: return out + "hocounter level " + std::to_string(type.level);
    case AdtKind::HoWeakCounter: return out + "howeakcounter level " + std::to_string(type.level);
    case AdtKind::MultiStack:
      return out + "multistack count " + std::to_string(type.level) + " alphabet " + join(type.alphabet);
    case AdtKind::Petri: {
      const auto& net = type.net;
      out += "petri places " + join(net.places);
      if (!net.transitions.empty()) {
        out += " transitions ";
        for (std::size_t i = 0; i < net.transitions.size(); ++i) {
          const auto& t = net.transitions[i];
          if (i) out += "; ";
          out += t.name + ": " + print_arcs(net.places, t.input) + " -> " + print_arcs(net.places, t.output);
        }
      }
      const auto initial = print_marking(net.places, std::get<Marking>(type.initial));
      if (!initial.empty()) out += " initial " + initial;
      return out;
    }
  }
  return out;
}

std::string print_program(const Program& program) {
  std::ostringstream out;
  out << "memory vars " << join(program.memory.vars) << " domain 0.." << program.memory.d_max << '\n';
  out << print_adt(program.adt) << '\n';
  const auto& p = program.process;
  out << "process " << p.name << '\n';
  print_states(out, p.states, p.init, p.target);
  for (const auto& t : p.delta)
    out << "trans " << p.states[t.from] << " -> " << p.states[t.to] << " : " << format_instruction(program, t.instr) << '\n';
  return out.str();
}

std::string print_machine(const RegisterMachine& rm) {
  std::ostringstream out;
  out << print_adt(rm.adt) << '\n';
  out << "machine " << rm.name << '\n';
  out << "registers " << join(rm.registers) << (rm.registers.empty() ? "" : " ") << "domain 0.." << rm.bound << '\n';
  print_states(out, rm.states, rm.init, rm.target);
  for (const auto& t : rm.delta)
    out << "trans " << rm.states[t.from] << " -> " << rm.states[t.to] << " : " << format_action(rm, t.action) << '\n';
  return out.str();
}

std::string print_automata(const AutomataInput& input) {
  std::ostringstream out;
  const auto& k = input.pda;
  const auto flags = [&](std::uint32_t q, std::uint32_t init, const std::vector<std::uint32_t>& accepting) {
    std::string s;
    if (q == init) s += " init";
    if (std::find(accepting.begin(), accepting.end(), q) != accepting.end()) s += " accept";
    return s;
  };
  out << "pda " << k.name << '\n';
  out << "alphabet " << join(k.alphabet) << '\n';
  out << "stack " << join(k.stack_alphabet) << '\n';
  out << "start " << k.stack_alphabet[k.start] << '\n';
  for (std::uint32_t q = 0; q < k.states.size(); ++q) out << "state " << k.states[q] << flags(q, k.init, k.accepting) << '\n';
  for (const auto& t : k.delta) {
    out << "trans " << k.states[t.from] << ' ' << (t.symbol ? k.alphabet[*t.symbol] : "eps") << " ["
        << k.stack_alphabet[t.pop] << '/';
    for (std::size_t i = 0; i < t.push.size(); ++i) out << (i ? " " : "") << k.stack_alphabet[t.push[i]];
    out << "] -> " << k.states[t.to] << '\n';
  }
  for (const auto& f : input.fsas) {
    out << "fsa " << f.name << '\n';
    out << "alphabet " << join(f.alphabet) << '\n';
    for (std::uint32_t q = 0; q < f.states.size(); ++q) out << "state " << f.states[q] << flags(q, f.init, f.accepting) << '\n';
    for (const auto& e : f.delta)
      out << "trans " << f.states[e.from] << ' ' << f.alphabet[e.symbol] << " -> " << f.states[e.to] << '\n';
  }
  return out.str();
}

std::string print_coverability(const CoverabilityInstance& instance) {
  std::ostringstream out;
  out << print_adt(AdtType::petri(instance.net)) << '\n';
  out << "cover " << print_marking(instance.net.places, instance.target) << '\n';
  return out.str();
}

}  // namespace ptso
