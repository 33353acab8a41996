#include "alias_calc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "alias_calc/modvars.hpp"
#include "alias_calc/oracle.hpp"
#include "alias_calc/parser.hpp"

namespace aliasing {

std::string emit_dot(const CanonicalForm& form) {
  std::string out = "digraph aliases {\n";
  out += "  current [label=\"Current\", shape=box];\n";
  for (std::size_t i = 0; i < form.cliques.size(); ++i) {
    out += "  v" + std::to_string(i + 1) + " [label=\"\", shape=circle];\n";
  }
  for (std::size_t i = 0; i < form.cliques.size(); ++i) {
    std::string label;
    for (const auto& e : form.cliques[i]) {
      if (!label.empty()) label += ", ";
      label += e.str();
    }
    out += "  current -> v" + std::to_string(i + 1) + " [label=\"" + label +
           "\"];\n";
  }
  out += "}\n";
  return out;
}

namespace {

void diagnostic(std::ostream& err, const std::string& file, std::size_t line,
                std::size_t column, const std::string& message) {
  err << file << ":" << line << ":" << column << ": error: " << message << "\n";
}

}  // namespace

int run(const CliOptions& options, std::istream& in, std::ostream& out,
        std::ostream& err) {
  const bool from_stdin = options.input.empty() || options.input == "-";
  const std::string name = from_stdin ? "<stdin>" : options.input;
  std::string text;
  if (from_stdin) {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream file(options.input, std::ios::binary);
    if (!file) {
      err << "alias-calc: cannot open '" << options.input << "'\n";
      return exit_code::usage;
    }
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }

  if (options.output == OutputKind::Soundness && options.level != Level::E0) {
    err << "alias-calc: soundness checking requires --level e0\n";
    return exit_code::usage;
  }

  Program program;
  try {
    program = parse(text, options.level);
  } catch (const ParseError& e) {
    diagnostic(err, name, e.loc().line, e.loc().column, e.message());
    return exit_code::invalid_input;
  }

  AliasRelation initial;
  try {
    initial = parse_relation(options.init);
  } catch (const RelationSyntaxError& e) {
    diagnostic(err, "<init>", 1, e.column(), e.what());
    return exit_code::invalid_input;
  }

  AnalysisConfig config = default_config(program);
  config.mode = options.mode;
  config.drop_formals = !options.keep_formals;
  if (options.max_dots) {
    const std::size_t needed =
        std::max(max_dot_count(program), initial.max_dot_count());
    if (*options.max_dots < needed) {
      err << "alias-calc: --max-dots " << *options.max_dots
          << " is below the largest dot count in the input (" << needed << ")\n";
      return exit_code::usage;
    }
    config.dot_bound = *options.max_dots;
  }

  try {
    switch (options.output) {
      case OutputKind::Relation:
        out << canonical(analyze_program(program, initial, config).relation).str()
            << "\n";
        break;
      case OutputKind::Trace:
        config.trace = true;
        for (const auto& point : analyze_program(program, initial, config).trace) {
          out << point.point << ": " << canonical(point.relation).str() << "\n";
        }
        break;
      case OutputKind::Assertion:
        out << to_assertion(analyze_program(program, initial, config).relation,
                            expressions_of(program))
            << "\n";
        break;
      case OutputKind::Dot:
        out << emit_dot(
            canonical(analyze_program(program, initial, config).relation));
        break;
      case OutputKind::ModVars: {
        ModVars mv(program, config.dot_bound);
        for (const auto& proc : program.procedures) {
          const std::string list = to_string(mv.of(proc.name));
          out << proc.name << ":" << (list.empty() ? "" : " " + list) << "\n";
        }
        break;
      }
      case OutputKind::Soundness: {
        SoundnessOptions so;
        so.bounds.loop_unroll = options.unroll;
        so.trials = options.trials;
        so.seed = options.seed;
        SoundnessReport report = check_soundness(program, so);
        out << report.text();
        if (!report.ok()) return exit_code::unsound;
        break;
      }
    }
  } catch (const std::exception& e) {
    err << "alias-calc: " << e.what() << "\n";
    return exit_code::usage;
  }
  return exit_code::ok;
}

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"Alias calculus: computes may- or must-alias relations of "
               "E0/E1/E2 programs.",
               "alias-calc"};
  CliOptions options;
  std::string level = "e2";
  std::string mode = "may";
  std::string output = "relation";
  std::size_t max_dots = 0;
  bool check_soundness = false;
  bool modified_vars = false;

  app.add_option("file", options.input, "Program file (default: stdin)");
  app.add_option("--level", level, "Language level")
      ->check(CLI::IsMember({"e0", "e1", "e2"}))
      ->capture_default_str();
  app.add_option("--init", options.init,
                 "Initial alias relation, e.g. \"{b,c},{f,g}\"");
  app.add_option("--mode", mode, "Analysis mode")
      ->check(CLI::IsMember({"may", "must"}))
      ->capture_default_str();
  auto* dots = app.add_option("--max-dots", max_dots, "Dot-count bound")
                   ->check(CLI::NonNegativeNumber);
  app.add_option("--output", output, "What to print")
      ->check(CLI::IsMember(
          {"relation", "trace", "assertion", "dot", "modvars", "soundness"}))
      ->capture_default_str();
  app.add_option("--unroll", options.unroll, "Loop unrolling for the oracle")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", options.seed, "Seed for random initial states")
      ->capture_default_str();
  app.add_option("--trials", options.trials,
                 "Random initial states checked besides the all-created one")
      ->capture_default_str();
  app.add_flag("--keep-formals", options.keep_formals,
               "Keep x.f pairs for formals f after qualified calls");
  app.add_flag("--check-soundness", check_soundness,
               "Same as --output soundness");
  app.add_flag("--modified-vars", modified_vars, "Same as --output modvars");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "alias-calc: " << e.what() << "\n";
    err << "Run with --help for more information.\n";
    return exit_code::usage;
  }

  if (check_soundness && modified_vars) {
    err << "alias-calc: --check-soundness and --modified-vars are exclusive\n";
    return exit_code::usage;
  }
  static const std::map<std::string, OutputKind> kinds{
      {"relation", OutputKind::Relation}, {"trace", OutputKind::Trace},
      {"assertion", OutputKind::Assertion}, {"dot", OutputKind::Dot},
      {"modvars", OutputKind::ModVars}, {"soundness", OutputKind::Soundness}};
  options.output = kinds.at(output);
  if (check_soundness) options.output = OutputKind::Soundness;
  if (modified_vars) options.output = OutputKind::ModVars;
  options.level = *level_from_string(level);
  options.mode = mode == "must" ? Mode::Must : Mode::May;
  if (dots->count() > 0) options.max_dots = max_dots;
  return run(options, in, out, err);
}

}  // namespace aliasing
