#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "alias_calc/ast.hpp"
#include "alias_calc/relation.hpp"

namespace aliasing {

/// A concrete E0 state: the defined variables and the address each one holds.
struct ConcreteState {
  std::map<std::string, std::size_t> value;
  std::set<std::size_t> addr;
  std::size_t next_address = 0;

  bool defined(const std::string& var) const { return value.contains(var); }
  std::set<std::string> def() const;
  /// Allocate a fresh address and attach `var` to it.
  void create(const std::string& var);
  void forget(const std::string& var) { value.erase(var); }
  /// x := y; an undefined source leaves x undefined.
  void assign(const std::string& target, const std::string& source);
};

/// Every pair of distinct defined variables holding the same address.
AliasRelation aliases_of(const ConcreteState& state);

/// The state in which every listed variable was created in order.
ConcreteState all_created(const std::vector<std::string>& vars);

struct ExecBounds {
  std::size_t loop_unroll = 4;
  std::size_t max_paths = 200000;
};

/// One enumerated execution: its state, the variables written along the
/// way, and the branch decisions taken.
struct Execution {
  ConcreteState state;
  std::set<std::string> assigned;
  std::vector<std::string> path;

  std::string path_text() const;
};

struct AssumptionViolation {
  PathExpr lhs;
  PathExpr rhs;
  SourceLoc loc;
  /// First witness.
  std::vector<std::string> path;
  /// Number of pruned executions reaching this cut with aliased operands.
  std::size_t occurrences = 1;
};

struct ExploreResult {
  std::vector<Execution> finals;
  std::vector<AssumptionViolation> assumptions;
  /// A loop still produced new states at the unroll limit, or the path
  /// budget ran out.
  bool bounded = false;
};

/// Bounded enumeration of the A.1 relations for E0 programs. Executions that
/// agree on alias structure, definedness and assigned variables are merged;
/// the first witness path is kept.
class Interpreter {
 public:
  explicit Interpreter(ExecBounds bounds = {}) : bounds_(bounds) {}

  ExploreResult run(const InstructionList& list, const Execution& start);
  ExploreResult run(const Program& program, const ConcreteState& start);

 private:
  using Frontier = std::vector<Execution>;

  Frontier exec(Frontier in, const InstructionList& list);
  Frontier exec(Frontier in, const Instruction& instr);
  Frontier exec_loop(const Frontier& in, const Instruction& instr,
                     const InstructionList& body);
  Frontier dedup(Frontier in);

  ExecBounds bounds_;
  std::vector<AssumptionViolation> assumptions_;
  bool bounded_ = false;
};

/// All successor states of one instruction.
std::vector<ConcreteState> step(const ConcreteState& state,
                                const Instruction& instr,
                                const ExecBounds& bounds = {});

struct SoundnessOptions {
  ExecBounds bounds;
  /// Extra runs from random initial states, on top of the all-created one.
  std::size_t trials = 0;
  std::uint64_t seed = 1;
};

struct SoundnessReport {
  std::size_t paths = 0;
  std::vector<std::string> violations;
  /// One entry per cut site.
  std::vector<AssumptionViolation> assumptions;
  bool bounded = false;

  bool ok() const { return violations.empty(); }
  /// One line per violation or broken assumption, then the summary line.
  std::string text() const;
};

/// Checks aliases_of(σ') ⊆ (aliases_of(σ0) ≫ p) for every enumerated final
/// state σ', and that every variable of Main's p← is assigned on each path.
/// Requires an E0 program.
SoundnessReport check_soundness(const Program& program,
                                const SoundnessOptions& options = {});

}  // namespace aliasing
