#include "alias_calc/modvars.hpp"

#include <algorithm>
#include <iterator>

namespace aliasing {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

ModSet intersect(const ModSet& a, const ModSet& b) {
  ModSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

}  // namespace

ModVars::ModVars(const Program& program)
    : ModVars(program, std::max<std::size_t>(max_dot_count(program), 3)) {}

ModVars::ModVars(const Program& program, std::size_t dot_bound)
    : program_(program), dot_bound_(dot_bound) {
  for (const auto& proc : program_.procedures) table_[proc.name] = {};
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& proc : program_.procedures) {
      ModSet next = eval(proc.body);
      if (next != table_[proc.name]) {
        table_[proc.name] = std::move(next);
        changed = true;
      }
    }
  }
}

const ModSet& ModVars::of(const std::string& proc) const {
  return table_.at(proc);
}

ModSet ModVars::of(const Instruction& instr) const { return eval(instr); }
ModSet ModVars::of(const InstructionList& list) const { return eval(list); }

ModSet ModVars::eval(const InstructionList& list) const {
  ModSet out;
  for (const auto& instr : list) out.merge(eval(instr));
  return out;
}

ModSet ModVars::eval(const Instruction& instr) const {
  return std::visit(
      Overloaded{
          [](const Skip&) { return ModSet{}; },
          [](const Forget& f) { return ModSet{PathExpr::variable(f.var)}; },
          [](const Create& c) { return ModSet{PathExpr::variable(c.var)}; },
          [](const Cut& c) {
            ModSet out;
            if (c.lhs.is_variable()) out.insert(c.lhs);
            if (c.rhs.is_variable()) out.insert(c.rhs);
            return out;
          },
          [](const Assign& a) { return ModSet{PathExpr::variable(a.target)}; },
          [&](const Conditional& c) {
            return intersect(eval(c.then_branch), eval(c.else_branch));
          },
          [](const Loop&) { return ModSet{}; },
          [&](const Repeat& r) {
            return r.count == 0 ? ModSet{} : eval(r.body);
          },
          [&](const UnqualifiedCall& c) {
            ModSet out = table_.at(c.proc);
            for (const auto& f : program_.find(c.proc)->formals) {
              out.insert(PathExpr::variable(f));
            }
            return out;
          },
          [&](const QualifiedCall& c) {
            ModSet inner = table_.at(c.proc);
            for (const auto& f : program_.find(c.proc)->formals) {
              inner.insert(PathExpr::variable(f));
            }
            ModSet out;
            for (const auto& v : inner) {
              PathExpr p = concat(c.target, v);
              if (p.dot_count() <= dot_bound_) out.insert(std::move(p));
            }
            return out;
          },
      },
      instr.node);
}

ModSet modified_vars(const InstructionList& list, const Program& program) {
  return ModVars(program).of(list);
}

ModSet modified_vars(const Procedure& proc, const Program& program) {
  return ModVars(program).of(proc.name);
}

std::string to_string(const ModSet& set) {
  std::vector<std::string> names;
  for (const auto& e : set) names.push_back(e.str());
  std::sort(names.begin(), names.end());
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += names[i];
  }
  return out;
}

}  // namespace aliasing
