#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "alias_calc/path_expr.hpp"
#include "alias_calc/relation.hpp"

namespace aliasing {

/// Language tiers: E0 basic instructions, E1 adds procedures, E2 adds dot
/// expressions, Current and qualified calls.
enum class Level { E0 = 0, E1 = 1, E2 = 2 };

std::string to_string(Level level);
std::optional<Level> level_from_string(std::string_view text);

struct SourceLoc {
  int line = 0;
  int column = 0;
  bool operator==(const SourceLoc&) const = default;
};

struct Instruction;
using InstructionList = std::vector<Instruction>;

struct Skip {
  bool operator==(const Skip&) const = default;
};
struct Forget {
  std::string var;
  bool operator==(const Forget&) const = default;
};
struct Create {
  std::string var;
  bool operator==(const Create&) const = default;
};
struct Cut {
  PathExpr lhs;
  PathExpr rhs;
  bool operator==(const Cut&) const = default;
};
struct Assign {
  std::string target;
  PathExpr source;
  bool operator==(const Assign&) const = default;
};
struct Conditional {
  InstructionList then_branch;
  InstructionList else_branch;
  bool operator==(const Conditional&) const;
};
struct Loop {
  InstructionList body;
  bool operator==(const Loop&) const;
};
/// p^n: n consecutive executions of the body.
struct Repeat {
  std::size_t count = 0;
  InstructionList body;
  bool operator==(const Repeat&) const;
};
struct UnqualifiedCall {
  std::string proc;
  std::vector<PathExpr> actuals;
  bool operator==(const UnqualifiedCall&) const = default;
};
struct QualifiedCall {
  PathExpr target;
  std::string proc;
  std::vector<PathExpr> actuals;
  bool operator==(const QualifiedCall&) const = default;
};

struct Instruction {
  using Node = std::variant<Skip, Forget, Create, Cut, Assign, Conditional,
                            Loop, Repeat, UnqualifiedCall, QualifiedCall>;
  Node node;
  SourceLoc loc;

  template <typename T>
    requires(!std::is_same_v<std::decay_t<T>, Instruction> &&
             std::is_constructible_v<Node, T>)
  Instruction(T n, SourceLoc l = {}) : node(std::move(n)), loc(l) {}

  /// Structural equality; locations are ignored.
  bool operator==(const Instruction& other) const { return node == other.node; }
};

struct Procedure {
  std::string name;
  std::vector<std::string> formals;
  InstructionList body;
  SourceLoc loc;

  bool operator==(const Procedure& o) const {
    return name == o.name && formals == o.formals && body == o.body;
  }
};

struct Program {
  std::vector<Procedure> procedures;
  std::string main = "Main";
  Level level = Level::E2;
  /// True when the source was a bare instruction list wrapped into Main.
  bool implicit_main = false;

  const Procedure* find(const std::string& name) const;
  const Procedure& main_procedure() const;

  bool operator==(const Program& o) const {
    return procedures == o.procedures && main == o.main &&
           implicit_main == o.implicit_main;
  }
};

/// Every path expression occurring in the program, plus Current.
PathSet expressions_of(const Program& program);
/// Largest dot count over expressions_of(program).
std::size_t max_dot_count(const Program& program);
/// Variables (single-segment expressions) of the program, sorted.
std::vector<std::string> variables_of(const Program& program);

/// Source text that parses back to an equal AST.
std::string to_source(const Program& program);
std::string to_source(const InstructionList& list, int indent = 0);

}  // namespace aliasing
