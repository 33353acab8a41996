#include "alias_calc/ast.hpp"

#include <algorithm>
#include <stdexcept>

namespace aliasing {

std::string to_string(Level level) {
  switch (level) {
    case Level::E0: return "e0";
    case Level::E1: return "e1";
    case Level::E2: return "e2";
  }
  return "e2";
}

std::optional<Level> level_from_string(std::string_view text) {
  if (text == "e0" || text == "E0") return Level::E0;
  if (text == "e1" || text == "E1") return Level::E1;
  if (text == "e2" || text == "E2") return Level::E2;
  return std::nullopt;
}

bool Conditional::operator==(const Conditional& o) const {
  return then_branch == o.then_branch && else_branch == o.else_branch;
}
bool Loop::operator==(const Loop& o) const { return body == o.body; }
bool Repeat::operator==(const Repeat& o) const {
  return count == o.count && body == o.body;
}

const Procedure* Program::find(const std::string& name) const {
  for (const auto& p : procedures) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

const Procedure& Program::main_procedure() const {
  const Procedure* p = find(main);
  if (!p) throw std::logic_error("program has no procedure '" + main + "'");
  return *p;
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void collect(const InstructionList& list, PathSet& out) {
  for (const auto& instr : list) {
    std::visit(
        Overloaded{
            [](const Skip&) {},
            [&](const Forget& f) { out.insert(PathExpr::variable(f.var)); },
            [&](const Create& c) { out.insert(PathExpr::variable(c.var)); },
            [&](const Cut& c) {
              out.insert(c.lhs);
              out.insert(c.rhs);
            },
            [&](const Assign& a) {
              out.insert(PathExpr::variable(a.target));
              out.insert(a.source);
            },
            [&](const Conditional& c) {
              collect(c.then_branch, out);
              collect(c.else_branch, out);
            },
            [&](const Loop& l) { collect(l.body, out); },
            [&](const Repeat& r) { collect(r.body, out); },
            [&](const UnqualifiedCall& c) {
              out.insert(c.actuals.begin(), c.actuals.end());
            },
            [&](const QualifiedCall& c) {
              out.insert(c.target);
              out.insert(c.actuals.begin(), c.actuals.end());
            },
        },
        instr.node);
  }
}

std::string pad(int indent) { return std::string(indent * 2, ' '); }

std::string join_paths(const std::vector<PathExpr>& paths) {
  std::string out;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (i) out += ", ";
    out += paths[i].str();
  }
  return out;
}

}  // namespace

PathSet expressions_of(const Program& program) {
  PathSet out;
  out.insert(PathExpr::current());
  for (const auto& proc : program.procedures) collect(proc.body, out);
  return out;
}

std::size_t max_dot_count(const Program& program) {
  std::size_t m = 0;
  for (const auto& e : expressions_of(program)) m = std::max(m, e.dot_count());
  return m;
}

std::vector<std::string> variables_of(const Program& program) {
  std::set<std::string> names;
  for (const auto& e : expressions_of(program)) {
    if (auto h = e.head(); h && !h->negated) names.insert(h->name);
  }
  for (const auto& proc : program.procedures) {
    names.insert(proc.formals.begin(), proc.formals.end());
  }
  return {names.begin(), names.end()};
}

std::string to_source(const InstructionList& list, int indent) {
  std::string out;
  for (const auto& instr : list) {
    out += pad(indent);
    std::visit(
        Overloaded{
            [&](const Skip&) { out += "skip\n"; },
            [&](const Forget& f) { out += "forget " + f.var + "\n"; },
            [&](const Create& c) { out += "create " + c.var + "\n"; },
            [&](const Cut& c) {
              out += "cut " + c.lhs.str() + ", " + c.rhs.str() + "\n";
            },
            [&](const Assign& a) {
              out += a.target + " := " + a.source.str() + "\n";
            },
            [&](const Conditional& c) {
              out += "then\n" + to_source(c.then_branch, indent + 1);
              out += pad(indent) + "else\n" +
                     to_source(c.else_branch, indent + 1);
              out += pad(indent) + "end\n";
            },
            [&](const Loop& l) {
              out += "loop\n" + to_source(l.body, indent + 1) + pad(indent) +
                     "end\n";
            },
            [&](const Repeat& r) {
              out += "iterate " + std::to_string(r.count) + "\n" +
                     to_source(r.body, indent + 1) + pad(indent) + "end\n";
            },
            [&](const UnqualifiedCall& c) {
              out += "call " + c.proc;
              if (!c.actuals.empty()) out += " (" + join_paths(c.actuals) + ")";
              out += "\n";
            },
            [&](const QualifiedCall& c) {
              out += "call " + c.target.str() + "." + c.proc;
              if (!c.actuals.empty()) out += " (" + join_paths(c.actuals) + ")";
              out += "\n";
            },
        },
        instr.node);
  }
  return out;
}

std::string to_source(const Program& program) {
  if (program.implicit_main) {
    return to_source(program.main_procedure().body);
  }
  std::string out;
  for (const auto& proc : program.procedures) {
    out += "procedure " + proc.name;
    if (!proc.formals.empty()) {
      out += " (";
      for (std::size_t i = 0; i < proc.formals.size(); ++i) {
        if (i) out += ", ";
        out += proc.formals[i];
      }
      out += ")";
    }
    out += "\n" + to_source(proc.body, 1) + "end\n";
  }
  return out;
}

}  // namespace aliasing
