#include "alias_calc/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

#include "alias_calc/calculus.hpp"
#include "alias_calc/modvars.hpp"

namespace aliasing {

std::set<std::string> ConcreteState::def() const {
  std::set<std::string> out;
  for (const auto& [var, _] : value) out.insert(var);
  return out;
}

void ConcreteState::create(const std::string& var) {
  const std::size_t na = next_address++;
  addr.insert(na);
  value[var] = na;
}

void ConcreteState::assign(const std::string& target,
                           const std::string& source) {
  auto it = value.find(source);
  if (it == value.end()) {
    value.erase(target);
    return;
  }
  value[target] = it->second;
}

AliasRelation aliases_of(const ConcreteState& state) {
  AliasRelation r;
  for (auto i = state.value.begin(); i != state.value.end(); ++i) {
    for (auto j = std::next(i); j != state.value.end(); ++j) {
      if (i->second == j->second) {
        r.add(PathExpr::variable(i->first), PathExpr::variable(j->first));
      }
    }
  }
  return r;
}

ConcreteState all_created(const std::vector<std::string>& vars) {
  ConcreteState s;
  for (const auto& v : vars) s.create(v);
  return s;
}

std::string Execution::path_text() const {
  std::string out = "[";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += ", ";
    out += path[i];
  }
  return out + "]";
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string where(const SourceLoc& loc) {
  return std::to_string(loc.line) + ":" + std::to_string(loc.column);
}

// Executions with equal keys have the same future behavior: addresses are
// only compared for equality and fresh ones never collide.
using ExecKey =
    std::pair<std::vector<std::pair<std::string, std::size_t>>, std::set<std::string>>;

ExecKey key_of(const Execution& e) {
  ExecKey key;
  std::map<std::size_t, std::size_t> rename;
  for (const auto& [var, a] : e.state.value) {
    auto [it, _] = rename.emplace(a, rename.size());
    key.first.emplace_back(var, it->second);
  }
  key.second = e.assigned;
  return key;
}

}  // namespace

Interpreter::Frontier Interpreter::dedup(Frontier in) {
  std::set<ExecKey> seen;
  Frontier out;
  for (auto& e : in) {
    if (seen.insert(key_of(e)).second) out.push_back(std::move(e));
  }
  if (out.size() > bounds_.max_paths) {
    out.resize(bounds_.max_paths);
    bounded_ = true;
  }
  return out;
}

Interpreter::Frontier Interpreter::exec(Frontier in, const InstructionList& list) {
  for (const auto& instr : list) in = exec(std::move(in), instr);
  return in;
}

Interpreter::Frontier Interpreter::exec(Frontier in, const Instruction& instr) {
  auto each = [&](auto&& f) {
    for (auto& e : in) f(e);
    return std::move(in);
  };
  return std::visit(
      Overloaded{
          [&](const Skip&) { return std::move(in); },
          [&](const Forget& f) {
            return each([&](Execution& e) {
              e.state.forget(f.var);
              e.assigned.insert(f.var);
            });
          },
          [&](const Create& c) {
            return each([&](Execution& e) {
              e.state.create(c.var);
              e.assigned.insert(c.var);
            });
          },
          [&](const Assign& a) {
            if (!a.source.is_variable()) {
              throw std::invalid_argument("the interpreter only runs E0 programs");
            }
            const std::string source = a.source.segments().front().name;
            return each([&](Execution& e) {
              e.state.assign(a.target, source);
              e.assigned.insert(a.target);
            });
          },
          [&](const Cut& c) {
            const std::string x = c.lhs.str();
            const std::string y = c.rhs.str();
            Frontier out;
            for (auto& e : in) {
              auto vx = e.state.value.find(x);
              auto vy = e.state.value.find(y);
              if (vx != e.state.value.end() && vy != e.state.value.end() &&
                  vx->second == vy->second) {
                assumptions_.push_back({c.lhs, c.rhs, instr.loc, e.path});
                continue;
              }
              out.push_back(std::move(e));
            }
            return out;
          },
          [&](const Conditional& c) {
            Frontier left = in;
            for (auto& e : left) e.path.push_back("then " + where(instr.loc));
            for (auto& e : in) e.path.push_back("else " + where(instr.loc));
            Frontier out = exec(std::move(left), c.then_branch);
            Frontier right = exec(std::move(in), c.else_branch);
            out.insert(out.end(), std::make_move_iterator(right.begin()),
                       std::make_move_iterator(right.end()));
            return dedup(std::move(out));
          },
          [&](const Loop& l) { return exec_loop(in, instr, l.body); },
          [&](const Repeat& r) {
            for (std::size_t i = 0; i < r.count; ++i) in = exec(std::move(in), r.body);
            return std::move(in);
          },
          [&](const UnqualifiedCall&) -> Frontier {
            throw std::invalid_argument("the interpreter only runs E0 programs");
          },
          [&](const QualifiedCall&) -> Frontier {
            throw std::invalid_argument("the interpreter only runs E0 programs");
          },
      },
      instr.node);
}

Interpreter::Frontier Interpreter::exec_loop(const Frontier& in,
                                             const Instruction& instr,
                                             const InstructionList& body) {
  std::set<ExecKey> seen;
  Frontier results;
  for (const auto& e : in) {
    if (seen.insert(key_of(e)).second) results.push_back(e);
  }
  Frontier current = results;
  for (std::size_t k = 1; k <= bounds_.loop_unroll && !current.empty(); ++k) {
    Frontier next;
    for (auto& e : exec(std::move(current), body)) {
      if (!seen.insert(key_of(e)).second) continue;
      Execution tagged = e;
      tagged.path.push_back("loop " + where(instr.loc) + " x" + std::to_string(k));
      results.push_back(std::move(tagged));
      next.push_back(std::move(e));
    }
    current = std::move(next);
  }
  if (!current.empty()) bounded_ = true;
  return dedup(std::move(results));
}

ExploreResult Interpreter::run(const InstructionList& list,
                               const Execution& start) {
  assumptions_.clear();
  bounded_ = false;
  ExploreResult result;
  result.finals = exec(Frontier{start}, list);
  result.assumptions = std::move(assumptions_);
  result.bounded = bounded_;
  return result;
}

ExploreResult Interpreter::run(const Program& program,
                               const ConcreteState& start) {
  return run(program.main_procedure().body, Execution{start, {}, {}});
}

std::vector<ConcreteState> step(const ConcreteState& state,
                                const Instruction& instr,
                                const ExecBounds& bounds) {
  Interpreter interp(bounds);
  std::vector<ConcreteState> out;
  for (auto& e : interp.run(InstructionList{instr}, Execution{state, {}, {}}).finals) {
    out.push_back(std::move(e.state));
  }
  return out;
}

std::string SoundnessReport::text() const {
  std::string out;
  for (const auto& v : violations) out += v + "\n";
  for (const auto& a : assumptions) {
    Execution e;
    e.path = a.path;
    out += "assumption violation: cut " + a.lhs.str() + ", " + a.rhs.str() +
           " at " + where(a.loc) + " on " + std::to_string(a.occurrences) +
           (a.occurrences == 1 ? " path" : " paths") + ", first " +
           e.path_text() + "\n";
  }
  out += "checked " + std::to_string(paths) + " paths, " +
         std::to_string(violations.size()) + " violations, bounded: " +
         (bounded ? "yes" : "no") + "\n";
  return out;
}

namespace {

bool is_e0(const Program& program) {
  if (program.procedures.size() != 1) return false;
  for (const auto& e : expressions_of(program)) {
    if (!e.is_current() && !e.is_variable()) return false;
  }
  bool calls = false;
  auto scan = [&](auto&& self, const InstructionList& list) -> void {
    for (const auto& instr : list) {
      std::visit(Overloaded{
                     [&](const Conditional& c) {
                       self(self, c.then_branch);
                       self(self, c.else_branch);
                     },
                     [&](const Loop& l) { self(self, l.body); },
                     [&](const Repeat& r) { self(self, r.body); },
                     [&](const UnqualifiedCall&) { calls = true; },
                     [&](const QualifiedCall&) { calls = true; },
                     [](const auto&) {},
                 },
                 instr.node);
    }
  };
  scan(scan, program.main_procedure().body);
  return !calls;
}

ConcreteState random_state(const std::vector<std::string>& vars,
                           std::mt19937_64& rng) {
  ConcreteState s;
  if (vars.empty()) return s;
  std::uniform_int_distribution<std::size_t> group(0, vars.size());
  std::map<std::size_t, std::size_t> address;
  for (const auto& v : vars) {
    const std::size_t g = group(rng);
    if (g == vars.size()) continue;
    auto it = address.find(g);
    if (it == address.end()) {
      s.create(v);
      address.emplace(g, s.value.at(v));
    } else {
      s.value[v] = it->second;
    }
  }
  return s;
}

}  // namespace

SoundnessReport check_soundness(const Program& program,
                                const SoundnessOptions& options) {
  if (!is_e0(program)) {
    throw std::invalid_argument("soundness checking requires an E0 program");
  }
  const std::vector<std::string> vars = variables_of(program);
  const ModSet must_assign = ModVars(program).of(program.main);
  const AnalysisConfig config = default_config(program);

  std::vector<ConcreteState> starts{all_created(vars)};
  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 0; i < options.trials; ++i) {
    starts.push_back(random_state(vars, rng));
  }

  SoundnessReport report;
  Interpreter interp(options.bounds);
  for (const auto& start : starts) {
    const AliasRelation a0 = aliases_of(start);
    const AliasRelation computed = analyze_program(program, a0, config).relation;
    ExploreResult explored = interp.run(program, start);
    report.paths += explored.finals.size();
    report.bounded = report.bounded || explored.bounded;
    for (auto& a : explored.assumptions) {
      auto same_site = [&](const AssumptionViolation& b) { return b.loc == a.loc; };
      auto it = std::find_if(report.assumptions.begin(), report.assumptions.end(),
                             same_site);
      if (it == report.assumptions.end()) {
        report.assumptions.push_back(std::move(a));
      } else {
        it->occurrences += a.occurrences;
      }
    }
    for (const auto& e : explored.finals) {
      for (const auto& [x, y] : aliases_of(e.state).pairs()) {
        if (computed.contains(x, y)) continue;
        report.violations.push_back(
            "soundness violation: [" + x.str() + ", " + y.str() +
            "] reachable from " + canonical(a0).str() + " on path " +
            e.path_text() + " but absent from " + canonical(computed).str());
      }
      for (const auto& v : must_assign) {
        if (e.assigned.contains(v.str())) continue;
        report.violations.push_back("modified-variables violation: " + v.str() +
                                    " not assigned on path " + e.path_text());
      }
    }
  }
  return report;
}

}  // namespace aliasing
