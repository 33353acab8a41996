#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alias_calc/ast.hpp"
#include "alias_calc/relation.hpp"

namespace aliasing {

enum class Mode { May, Must };

struct AnalysisConfig {
  Mode mode = Mode::May;
  /// Largest dot count kept in any pair element.
  std::size_t dot_bound = 3;
  bool trace = false;
  /// Drop pairs involving x.f for the formals f of r after `call x.r (...)`.
  bool drop_formals = true;
  std::size_t max_loop_iterations = 100000;
  std::size_t max_rounds = 100000;
};

/// May mode, dot bound max(max_dot_count(program), 3).
AnalysisConfig default_config(const Program& program);

struct TracePoint {
  std::string point;
  AliasRelation relation;
};

/// Exit relations of procedure invocations, keyed by (procedure, entry).
class SummaryTable {
 public:
  struct Entry {
    std::optional<AliasRelation> exit;
    bool in_progress = false;
    std::size_t evaluated_round = 0;
  };
  using Key = std::pair<std::string, AliasRelation>;

  Entry& slot(const std::string& proc, const AliasRelation& entry) {
    return entries_[Key{proc, entry}];
  }
  const std::map<Key, Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<Key, Entry> entries_;
};

struct AnalysisResult {
  AliasRelation relation;
  /// Per procedure, the union (must mode: intersection) of its exit
  /// relations over the invocations reached in the final round.
  std::map<std::string, AliasRelation> exits;
  std::vector<TracePoint> trace;
  std::size_t rounds = 0;
};

/// The a ≫ p engine. One Analyzer serves one program; it is not thread-safe
/// but distinct instances share nothing.
class Analyzer {
 public:
  Analyzer(const Program& program, AnalysisConfig config);

  /// a0 ≫ call Main, iterated until no procedure summary changes.
  AnalysisResult run(const AliasRelation& initial);

  AliasRelation transfer(const AliasRelation& a, const Instruction& instr);
  AliasRelation transfer(const AliasRelation& a, const InstructionList& list);

  /// The first t_N with t_N = t_{N+1}, t_0 = a, t_{n+1} = t_n ∪ (t_n ≫ body)
  /// (∩ in must mode).
  AliasRelation loop_fixpoint(const AliasRelation& a, const InstructionList& body);
  /// t_0 .. t_N of the loop sequence; the last element is the fixpoint.
  std::vector<AliasRelation> loop_iterates(const AliasRelation& a,
                                           const InstructionList& body);

  AliasRelation call_unqualified(const AliasRelation& a, const Procedure& proc,
                                 const std::vector<PathExpr>& actuals);
  AliasRelation call_qualified(const AliasRelation& a, const PathExpr& target,
                               const Procedure& proc,
                               const std::vector<PathExpr>& actuals);

  const AnalysisConfig& config() const { return config_; }
  const SummaryTable& summaries() const { return table_; }

 private:
  template <typename F>
  AliasRelation stabilize(F&& body);

  AliasRelation exec(const AliasRelation& a, const Instruction& instr);
  AliasRelation exec_list(const AliasRelation& a, const InstructionList& list);
  AliasRelation exec_body(const AliasRelation& a, const Procedure& proc);
  AliasRelation exec_loop(const AliasRelation& a, const InstructionList& body,
                          std::vector<AliasRelation>* iterates);
  AliasRelation exec_unqualified(const AliasRelation& a, const Procedure& proc,
                                 const std::vector<PathExpr>& actuals);
  AliasRelation exec_qualified(const AliasRelation& a, const PathExpr& target,
                               const Procedure& proc,
                               const std::vector<PathExpr>& actuals);
  AliasRelation invoke(const Procedure& proc, const AliasRelation& entry);
  AliasRelation prefix_all(const AliasRelation& a, const PathExpr& path) const;
  AliasRelation join(const AliasRelation& a, const AliasRelation& b) const;
  AliasRelation bottom() const;
  void record(const std::string& suffix, const AliasRelation& r);

  const Program& program_;
  AnalysisConfig config_;
  SummaryTable table_;
  AliasRelation top_;
  std::size_t round_ = 0;
  bool changed_ = false;
  std::string point_;
  std::vector<TracePoint> trace_;
};

AnalysisResult analyze_program(const Program& program,
                               const AliasRelation& initial,
                               const AnalysisConfig& config);

/// The relation after each top-level instruction of each analyzed body (and
/// every loop iterate), in analysis order of the final round.
std::vector<TracePoint> trace(const Program& program,
                              const AliasRelation& initial,
                              AnalysisConfig config);

}  // namespace aliasing
