#include "alias_calc/calculus.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace aliasing {

AnalysisConfig default_config(const Program& program) {
  AnalysisConfig config;
  config.dot_bound = std::max<std::size_t>(max_dot_count(program), 3);
  return config;
}

Analyzer::Analyzer(const Program& program, AnalysisConfig config)
    : program_(program), config_(config) {
  if (config_.dot_bound < max_dot_count(program_)) {
    throw std::invalid_argument(
        "dot bound " + std::to_string(config_.dot_bound) +
        " is below the program's maximum dot count " +
        std::to_string(max_dot_count(program_)));
  }
  if (config_.mode == Mode::Must) top_ = overline(expressions_of(program_));
}

template <typename F>
AliasRelation Analyzer::stabilize(F&& body) {
  for (std::size_t i = 0; i < config_.max_rounds; ++i) {
    ++round_;
    changed_ = false;
    trace_.clear();
    AliasRelation r = body();
    if (!changed_) return r;
  }
  throw std::logic_error("interprocedural fixpoint did not stabilize");
}

AnalysisResult Analyzer::run(const AliasRelation& initial) {
  if (config_.mode == Mode::Must) {
    PathSet universe = expressions_of(program_);
    for (const auto& e : initial.elements()) universe.insert(e);
    top_ = overline(universe);
  }
  const Procedure& main = program_.main_procedure();
  const std::size_t first_round = round_ + 1;
  AnalysisResult result;
  result.relation = stabilize([&] { return invoke(main, initial); });
  result.rounds = round_ - first_round + 1;
  result.trace = trace_;
  for (const auto& [key, entry] : table_.entries()) {
    if (entry.evaluated_round != round_ || !entry.exit) continue;
    auto [it, inserted] = result.exits.emplace(key.first, *entry.exit);
    if (!inserted) it->second = join(it->second, *entry.exit);
  }
  return result;
}

AliasRelation Analyzer::transfer(const AliasRelation& a,
                                 const Instruction& instr) {
  return stabilize([&] { return exec(a, instr); });
}

AliasRelation Analyzer::transfer(const AliasRelation& a,
                                 const InstructionList& list) {
  return stabilize([&] { return exec_list(a, list); });
}

AliasRelation Analyzer::loop_fixpoint(const AliasRelation& a,
                                      const InstructionList& body) {
  return stabilize([&] { return exec_loop(a, body, nullptr); });
}

std::vector<AliasRelation> Analyzer::loop_iterates(const AliasRelation& a,
                                                   const InstructionList& body) {
  std::vector<AliasRelation> iterates;
  stabilize([&] {
    iterates.clear();
    return exec_loop(a, body, &iterates);
  });
  return iterates;
}

AliasRelation Analyzer::call_unqualified(const AliasRelation& a,
                                         const Procedure& proc,
                                         const std::vector<PathExpr>& actuals) {
  return stabilize([&] { return exec_unqualified(a, proc, actuals); });
}

AliasRelation Analyzer::call_qualified(const AliasRelation& a,
                                       const PathExpr& target,
                                       const Procedure& proc,
                                       const std::vector<PathExpr>& actuals) {
  return stabilize([&] { return exec_qualified(a, target, proc, actuals); });
}

AliasRelation Analyzer::join(const AliasRelation& a,
                             const AliasRelation& b) const {
  return combine(a, b,
                 config_.mode == Mode::May ? SetOp::Union : SetOp::Intersection);
}

AliasRelation Analyzer::bottom() const {
  return config_.mode == Mode::May ? AliasRelation{} : top_;
}

void Analyzer::record(const std::string& suffix, const AliasRelation& r) {
  if (!config_.trace) return;
  trace_.push_back({suffix.empty() ? point_ : point_ + " " + suffix, r});
}

namespace {
template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;
}  // namespace

AliasRelation Analyzer::exec(const AliasRelation& a, const Instruction& instr) {
  const std::size_t bound = config_.dot_bound;
  return std::visit(
      Overloaded{
          [&](const Skip&) { return a; },
          [&](const Forget& f) { return restrict(a, {f.var}); },
          [&](const Create& c) { return restrict(a, {c.var}); },
          [&](const Cut& c) { return cut_pair(a, c.lhs, c.rhs); },
          [&](const Assign& s) { return subst(a, s.target, s.source, bound); },
          [&](const Conditional& c) {
            return join(exec_list(a, c.then_branch), exec_list(a, c.else_branch));
          },
          [&](const Loop& l) { return exec_loop(a, l.body, nullptr); },
          [&](const Repeat& r) {
            AliasRelation t = a;
            for (std::size_t i = 0; i < r.count; ++i) t = exec_list(t, r.body);
            return t;
          },
          [&](const UnqualifiedCall& c) {
            return exec_unqualified(a, *program_.find(c.proc), c.actuals);
          },
          [&](const QualifiedCall& c) {
            return exec_qualified(a, c.target, *program_.find(c.proc), c.actuals);
          },
      },
      instr.node);
}

AliasRelation Analyzer::exec_list(const AliasRelation& a,
                                  const InstructionList& list) {
  AliasRelation t = a;
  for (const auto& instr : list) t = exec(t, instr);
  return t;
}

AliasRelation Analyzer::exec_body(const AliasRelation& a,
                                  const Procedure& proc) {
  std::string saved = std::move(point_);
  AliasRelation t = a;
  for (std::size_t i = 0; i < proc.body.size(); ++i) {
    point_ = proc.name + ":" + std::to_string(i + 1);
    t = exec(t, proc.body[i]);
    record("", t);
  }
  point_ = std::move(saved);
  return t;
}

AliasRelation Analyzer::exec_loop(const AliasRelation& a,
                                  const InstructionList& body,
                                  std::vector<AliasRelation>* iterates) {
  AliasRelation t = a;
  for (std::size_t n = 0;; ++n) {
    if (n > config_.max_loop_iterations) {
      throw std::logic_error("loop fixpoint exceeded " +
                             std::to_string(config_.max_loop_iterations) +
                             " iterations");
    }
    record("t" + std::to_string(n), t);
    if (iterates) iterates->push_back(t);
    AliasRelation next = join(t, exec_list(t, body));
    if (next == t) return t;
    t = std::move(next);
  }
}

AliasRelation Analyzer::exec_unqualified(const AliasRelation& a,
                                         const Procedure& proc,
                                         const std::vector<PathExpr>& actuals) {
  return invoke(proc, subst_list(a, proc.formals, actuals, config_.dot_bound));
}

AliasRelation Analyzer::prefix_all(const AliasRelation& a,
                                   const PathExpr& path) const {
  AliasRelation r;
  for (const auto& [e, f] : a.pairs()) {
    PathExpr pe = concat(path, e);
    PathExpr pf = concat(path, f);
    if (pe.dot_count() > config_.dot_bound || pf.dot_count() > config_.dot_bound) {
      continue;
    }
    r.add(pe, pf);
  }
  return r;
}

AliasRelation Analyzer::exec_qualified(const AliasRelation& a,
                                       const PathExpr& target,
                                       const Procedure& proc,
                                       const std::vector<PathExpr>& actuals) {
  // Supplier view: every client expression is reached back through x'.
  const PathExpr back = target.inverse();
  std::vector<PathExpr> supplier_actuals;
  supplier_actuals.reserve(actuals.size());
  for (const auto& act : actuals) supplier_actuals.push_back(concat(back, act));
  AliasRelation entry = subst_list(prefix_all(a, back), proc.formals,
                                   supplier_actuals, config_.dot_bound);

  AliasRelation result = prefix_all(invoke(proc, entry), target);

  std::vector<PathExpr> formal_paths;
  if (config_.drop_formals) {
    for (const auto& f : proc.formals) {
      formal_paths.push_back(concat(target, PathExpr::variable(f)));
    }
  }
  // Back references through the target are meaningless here; negations the
  // caller already had (it may itself be a supplier) stay.
  std::set<std::string> through;
  for (const auto& s : target.segments()) through.insert(s.name);
  auto stale = [&](const PathExpr& e) {
    for (const auto& s : e.segments()) {
      if (s.negated && through.contains(s.name)) return true;
    }
    for (const auto& fp : formal_paths) {
      if (e.starts_with(fp)) return true;
    }
    return false;
  };
  result.remove_if(
      [&](const PathExpr& e, const PathExpr& f) { return stale(e) || stale(f); });
  return result;
}

AliasRelation Analyzer::invoke(const Procedure& proc,
                               const AliasRelation& entry) {
  SummaryTable::Entry& slot = table_.slot(proc.name, entry);
  if (slot.in_progress || slot.evaluated_round == round_) {
    return slot.exit ? *slot.exit : bottom();
  }
  slot.in_progress = true;
  AliasRelation out = exec_body(entry, proc);
  slot.in_progress = false;
  slot.evaluated_round = round_;
  AliasRelation merged = slot.exit ? join(*slot.exit, out) : out;
  if (!slot.exit || merged != *slot.exit) {
    slot.exit = std::move(merged);
    changed_ = true;
  }
  return *slot.exit;
}

AnalysisResult analyze_program(const Program& program,
                               const AliasRelation& initial,
                               const AnalysisConfig& config) {
  Analyzer analyzer(program, config);
  return analyzer.run(initial);
}

std::vector<TracePoint> trace(const Program& program,
                              const AliasRelation& initial,
                              AnalysisConfig config) {
  config.trace = true;
  return analyze_program(program, initial, config).trace;
}

}  // namespace aliasing
