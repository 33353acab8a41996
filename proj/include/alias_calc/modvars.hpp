#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>

#include "alias_calc/ast.hpp"
#include "alias_calc/path_expr.hpp"

namespace aliasing {

/// Variables assigned on every terminating execution. Entries coming from a
/// qualified call `call x.r` keep their x prefix.
using ModSet = std::set<PathExpr>;

/// The p← under-approximation for every procedure, keyed by name. Prefixed
/// entries longer than `dot_bound` dots are dropped, which only shrinks the
/// sets.
class ModVars {
 public:
  explicit ModVars(const Program& program);
  ModVars(const Program& program, std::size_t dot_bound);

  const ModSet& of(const std::string& proc) const;
  const std::map<std::string, ModSet>& table() const { return table_; }

  ModSet of(const Instruction& instr) const;
  ModSet of(const InstructionList& list) const;

 private:
  ModSet eval(const Instruction& instr) const;
  ModSet eval(const InstructionList& list) const;

  const Program& program_;
  std::size_t dot_bound_;
  std::map<std::string, ModSet> table_;
};

ModSet modified_vars(const InstructionList& list, const Program& program);
ModSet modified_vars(const Procedure& proc, const Program& program);

/// Sorted, comma-separated.
std::string to_string(const ModSet& set);

}  // namespace aliasing
