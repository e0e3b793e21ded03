#pragma once

// Line-oriented text format for programs, register machines, automata and
// coverability instances.  `#` starts a comment.
//
//   memory vars x,y domain 0..1
//   adt stack alphabet a,b
//   process P
//   state q0 init
//   state q1 target
//   trans q0 -> q1 : wr x 1
//
// Machines use `machine M`, `registers r1,r2 domain 0..N` and tier actions
// (`skp`, `write r d`, `read r d`, `inc r`, `dec r`, `ckz r`, `set r y`,
// `cke x y`, `ckne`, `ckl`, `ckg`, `ckle`, `ckge`, `op ...`).

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ptso/automata.hpp"
#include "ptso/program.hpp"
#include "ptso/register_machine.hpp"

namespace ptso {

class DslError : public std::runtime_error {
 public:
  DslError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

enum class DocumentKind { Program, Machine, Automata, Coverability };

/// Guesses the document kind from its section keywords.
DocumentKind detect_kind(std::string_view text);

Program parse_program(std::string_view text);
RegisterMachine parse_machine(std::string_view text);

struct AutomataInput {
  PushdownAutomaton pda;
  std::vector<FiniteAutomaton> fsas;
};
AutomataInput parse_automata(std::string_view text);

/// An `adt petri ...` line plus a `cover p=1,...` line.
CoverabilityInstance parse_coverability(std::string_view text);

/// Parses the part of an `adt` line after the keyword.
AdtType parse_adt(std::string_view declaration);

std::string print_adt(const AdtType& type);
std::string print_program(const Program& program);
std::string print_machine(const RegisterMachine& rm);
std::string print_automata(const AutomataInput& input);
std::string print_coverability(const CoverabilityInstance& instance);

}  // namespace ptso
