#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ptso/dsl.hpp"
#include "ptso/generators.hpp"
#include "ptso/lowering.hpp"
#include "ptso/pipeline.hpp"
#include "ptso/translation.hpp"

namespace {

using namespace ptso;

constexpr int kExitError = 3;
constexpr int kExitDisagreement = 4;

struct Config {
  std::vector<std::string> inputs;
  std::string adt;
  std::string backend = "auto";
  std::optional<std::uint64_t> cap;
  std::uint32_t n_max = 3;
  std::uint32_t steps = 12;
  std::uint32_t buffer = 4;
  std::uint64_t value_bound = 8;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string out;
  bool reverse = false;
  int tier = 1;
  std::string family = "program";
  std::uint32_t count = 100;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

ReportFormat report_format(const Config& cfg) {
  return cfg.format == "lines" ? ReportFormat::Lines : ReportFormat::Text;
}

const std::string& single_input(const Config& cfg) {
  if (cfg.inputs.size() != 1) throw std::runtime_error("expected exactly one input file");
  return cfg.inputs.front();
}

Program load_program(const Config& cfg, const std::string& text) {
  Program p = parse_program(text);
  if (!cfg.adt.empty()) p.adt = parse_adt(cfg.adt);
  p.validate();
  return p;
}

RegisterMachine load_machine(const Config& cfg, const std::string& text) {
  RegisterMachine rm = parse_machine(text);
  if (!cfg.adt.empty()) rm.adt = parse_adt(cfg.adt);
  rm.validate();
  return rm;
}

CheckOptions check_options(const Config& cfg) {
  CheckOptions options;
  const auto backend = parse_backend(cfg.backend);
  if (!backend) throw std::runtime_error("unknown backend " + cfg.backend);
  options.backend = *backend;
  options.cap = cfg.cap;
  options.value_bound = cfg.value_bound;
  return options;
}

OracleBounds oracle_bounds(const Config& cfg) {
  OracleBounds b;
  b.n_max = cfg.n_max;
  b.step_max = cfg.steps;
  b.buffer_max = cfg.buffer;
  b.value_bound = cfg.value_bound;
  return b;
}

int cmd_check(const Config& cfg) {
  const auto text = read_file(single_input(cfg));
  Verdict v;
  switch (detect_kind(text)) {
    case DocumentKind::Machine: v = solve_machine(load_machine(cfg, text), check_options(cfg)); break;
    case DocumentKind::Coverability:
      v = solve_machine(coverability_to_rm(parse_coverability(text)), check_options(cfg));
      break;
    case DocumentKind::Automata: {
      const auto input = parse_automata(text);
      v = solve_machine(encode_intersection(input.pda, input.fsas), check_options(cfg));
      break;
    }
    default: v = check_program(load_program(cfg, text), check_options(cfg)); break;
  }
  Output out(cfg.out);
  out.stream() << format_report(v, report_format(cfg));
  return exit_code(v.outcome);
}

int cmd_oracle(const Config& cfg) {
  const auto program = load_program(cfg, read_file(single_input(cfg)));
  const auto result = bounded_reach(program, oracle_bounds(cfg));
  Output out(cfg.out);
  out.stream() << format_report(result.verdict, report_format(cfg));
  return exit_code(result.verdict.outcome);
}

int cmd_pivot(const Config& cfg) {
  const auto program = load_program(cfg, read_file(single_input(cfg)));
  PivotOptions options;
  options.value_bound = cfg.value_bound;
  const auto result = pivot_reach(program, options);
  Output out(cfg.out);
  out.stream() << format_report(result.verdict, report_format(cfg));
  return exit_code(result.verdict.outcome);
}

int cmd_translate(const Config& cfg) {
  const auto text = read_file(single_input(cfg));
  Output out(cfg.out);
  if (cfg.reverse) {
    auto rm = load_machine(cfg, text);
    if (rm.max_tier() > 1) rm = lower_to_tier1(rm);
    out.stream() << print_program(build_tso_from_rm(rm));
  } else {
    out.stream() << print_machine(build_register_machine(load_program(cfg, text)));
  }
  return 0;
}

int cmd_lower(const Config& cfg) {
  const auto rm = load_machine(cfg, read_file(single_input(cfg)));
  Output out(cfg.out);
  out.stream() << print_machine(cfg.tier == 2 ? lower_tier3_to_tier2(rm) : lower_to_tier1(rm));
  return 0;
}

int cmd_gen(const Config& cfg, const std::string& what) {
  Output out(cfg.out);
  auto& os = out.stream();
  if (what == "intersection") {
    const auto input = parse_automata(read_file(single_input(cfg)));
    os << print_machine(encode_intersection(input.pda, input.fsas));
  } else if (what == "coverability") {
    os << print_coverability(encode_rm_to_coverability(load_machine(cfg, read_file(single_input(cfg)))));
  } else if (what == "cover-to-rm") {
    os << print_machine(coverability_to_rm(parse_coverability(read_file(single_input(cfg)))));
  } else if (what == "random") {
    if (cfg.family == "program") os << print_program(random_program(cfg.seed));
    else if (cfg.family == "counter-program") os << print_program(random_bounded_counter_program(cfg.seed));
    else if (cfg.family == "machine") {
      RandomMachineOptions options;
      options.tier = cfg.tier;
      os << print_machine(random_machine(cfg.seed, options));
    } else if (cfg.family == "counter") os << print_machine(random_counter_machine(cfg.seed));
    else if (cfg.family == "stack") os << print_machine(random_stack_machine(cfg.seed));
    else if (cfg.family == "net") os << print_coverability(random_net(cfg.seed));
    else throw std::runtime_error("unknown family " + cfg.family);
  } else {
    throw std::runtime_error("unknown generator " + what);
  }
  return 0;
}

int cmd_crosscheck(const Config& cfg) {
  std::vector<std::pair<std::string, Program>> programs;
  for (const auto& path : cfg.inputs) programs.emplace_back(path, load_program(cfg, read_file(path)));
  if (programs.empty())
    for (std::uint32_t i = 0; i < cfg.count; ++i)
      programs.emplace_back("seed " + std::to_string(cfg.seed + i), random_program(cfg.seed + i));

  PivotOptions pivot_options;
  pivot_options.value_bound = cfg.value_bound;
  Output out(cfg.out);
  auto& os = out.stream();
  std::size_t bad = 0;
  for (const auto& [name, program] : programs) {
    const auto report = crosscheck(program, oracle_bounds(cfg), pivot_options, check_options(cfg));
    os << name << ": oracle " << outcome_name(report.oracle.outcome) << ", pivot "
       << outcome_name(report.pivot.outcome) << ", machine " << outcome_name(report.machine.outcome) << '\n';
    for (const auto& issue : report.disagreements) os << "  disagreement: " << issue << '\n';
    if (!report.consistent()) ++bad;
  }
  os << "disagreements: " << bad << '\n';
  return bad == 0 ? 0 : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parameterized reachability for TSO programs with abstract data types"};
  app.require_subcommand(1);
  Config cfg;

  const auto add_input = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("input", cfg.inputs, "Input file");
    if (required) opt->required();
  };
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--adt", cfg.adt, "Override the ADT declaration, e.g. \"stack alphabet a,b\"");
    sub->add_option("--out", cfg.out, "Write output to this file instead of stdout");
  };
  const auto add_report = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"text", "lines"}));
  };
  const auto add_oracle = [&](CLI::App* sub) {
    sub->add_option("--n-max", cfg.n_max, "Oracle: maximum number of processes")->check(CLI::PositiveNumber);
    sub->add_option("--steps", cfg.steps, "Oracle: maximum run length")->check(CLI::PositiveNumber);
    sub->add_option("--buffer", cfg.buffer, "Oracle: maximum store buffer length")->check(CLI::PositiveNumber);
  };
  const auto add_solver = [&](CLI::App* sub) {
    sub->add_option("--backend", cfg.backend, "auto|finite|counter|stack|petri|wsts|bounded")
        ->check(CLI::IsMember({"auto", "finite", "counter", "stack", "petri", "wsts", "bounded"}));
    sub->add_option("--cap", cfg.cap, "Counter backend: largest counter value searched")->check(CLI::PositiveNumber);
  };
  const auto add_value_bound = [&](CLI::App* sub) {
    sub->add_option("--value-bound", cfg.value_bound, "Largest ADT value size explored")->check(CLI::PositiveNumber);
  };

  auto* check = app.add_subcommand("check", "Decide reachability of a program, machine, coverability instance or PDA/FSA intersection");
  add_input(check), add_common(check), add_report(check), add_solver(check), add_value_bound(check);
  auto* oracle = app.add_subcommand("oracle", "Bounded search of the concrete TSO semantics");
  add_input(oracle), add_common(oracle), add_report(oracle), add_oracle(oracle), add_value_bound(oracle);
  auto* pivot = app.add_subcommand("pivot", "Search the pivot abstraction directly");
  add_input(pivot), add_common(pivot), add_report(pivot), add_value_bound(pivot);
  auto* translate = app.add_subcommand("translate", "Program to register machine, or back with --reverse");
  add_input(translate), add_common(translate);
  translate->add_flag("--reverse", cfg.reverse, "Translate a register machine into a TSO program");
  auto* lower = app.add_subcommand("lower", "Lower a machine to tier-1 (or tier-2) actions");
  add_input(lower), add_common(lower);
  lower->add_option("--tier", cfg.tier, "Target tier")->check(CLI::IsMember({1, 2}));

  auto* gen = app.add_subcommand("gen", "Generate benchmark instances");
  gen->require_subcommand(1);
  auto* gen_inter = gen->add_subcommand("intersection", "PDA and FSA file to a stack machine");
  add_input(gen_inter), add_common(gen_inter);
  auto* gen_cover = gen->add_subcommand("coverability", "Tier-1 Petri machine to a coverability instance");
  add_input(gen_cover), add_common(gen_cover);
  auto* gen_back = gen->add_subcommand("cover-to-rm", "Coverability instance to a Petri machine");
  add_input(gen_back), add_common(gen_back);
  auto* gen_random = gen->add_subcommand(
      "random",
      "Seeded random instance.  Families: program (<=4 states, <=2 vars, domain 0..1), counter-program (same, inc "
      "never on a cycle), machine (<=5 states, <=2 registers, domain 0..2), counter (<=4 states, 1 register), stack "
      "(<=5 states, alphabet a,b), net (<=3 places, <=3 transitions)");
  gen_random->add_option("--seed", cfg.seed, "Random seed");
  gen_random->add_option("--family", cfg.family, "Instance family")
      ->check(CLI::IsMember({"program", "counter-program", "machine", "counter", "stack", "net"}));
  gen_random->add_option("--tier", cfg.tier, "Machine family: highest action tier")->check(CLI::IsMember({1, 2, 3}));
  gen_random->add_option("--out", cfg.out, "Write output to this file instead of stdout");

  auto* cross = app.add_subcommand("crosscheck", "Compare oracle, pivot and machine verdicts");
  add_input(cross, false), add_common(cross), add_solver(cross), add_oracle(cross), add_value_bound(cross);
  cross->add_option("--seed", cfg.seed, "First seed when no input files are given");
  cross->add_option("--count", cfg.count, "Number of random programs when no input files are given");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*check) return cmd_check(cfg);
    if (*oracle) return cmd_oracle(cfg);
    if (*pivot) return cmd_pivot(cfg);
    if (*translate) return cmd_translate(cfg);
    if (*lower) return cmd_lower(cfg);
    if (*gen) {
      for (auto* sub : gen->get_subcommands())
        if (*sub) return cmd_gen(cfg, sub->get_name());
    }
    if (*cross) return cmd_crosscheck(cfg);
  } catch (const DslError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
