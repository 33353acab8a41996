#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "alias_calc/ast.hpp"
#include "alias_calc/calculus.hpp"
#include "alias_calc/relation.hpp"

namespace aliasing {

enum class OutputKind { Relation, Trace, Assertion, Dot, ModVars, Soundness };

struct CliOptions {
  /// Empty or "-" reads standard input.
  std::string input;
  Level level = Level::E2;
  std::string init;
  Mode mode = Mode::May;
  std::optional<std::size_t> max_dots;
  OutputKind output = OutputKind::Relation;
  std::uint64_t seed = 1;
  std::size_t unroll = 4;
  std::size_t trials = 0;
  bool keep_formals = false;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int invalid_input = 2;
inline constexpr int unsound = 3;
}  // namespace exit_code

/// Source node `Current` plus one value node and one labeled edge per clique.
std::string emit_dot(const CanonicalForm& form);

/// Runs one invocation with already-parsed options.
int run(const CliOptions& options, std::istream& in, std::ostream& out,
        std::ostream& err);

/// Parses command-line arguments (without the program name) and runs.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace aliasing
