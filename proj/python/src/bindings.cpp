#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <map>
#include <optional>

#include "alias_calc/calculus.hpp"
#include "alias_calc/modvars.hpp"
#include "alias_calc/oracle.hpp"
#include "alias_calc/parser.hpp"

namespace py = pybind11;
using namespace aliasing;

namespace {

Level level_of(const std::string& text) {
  auto level = level_from_string(text);
  if (!level) throw py::value_error("unknown language level '" + text + "'");
  return *level;
}

Mode mode_of(const std::string& text) {
  if (text == "may") return Mode::May;
  if (text == "must") return Mode::Must;
  throw py::value_error("unknown mode '" + text + "'");
}

AnalysisConfig config_for(const Program& program, const std::string& mode,
                          std::optional<std::size_t> max_dots, bool keep_formals) {
  AnalysisConfig config = default_config(program);
  config.mode = mode_of(mode);
  config.drop_formals = !keep_formals;
  if (max_dots) config.dot_bound = *max_dots;
  return config;
}

}  // namespace

PYBIND11_MODULE(_alias_calc, m) {
  m.doc() = "Alias calculus for E0/E1/E2 programs";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<PathExpr>(m, "PathExpr")
      .def(py::init(&PathExpr::parse), py::arg("text"))
      .def("dot_count", &PathExpr::dot_count)
      .def("inverse", &PathExpr::inverse)
      .def("__truediv__", [](const PathExpr& a, const PathExpr& b) { return concat(a, b); })
      .def("__str__", &PathExpr::str)
      .def("__repr__", [](const PathExpr& e) { return "PathExpr('" + e.str() + "')"; })
      .def("__eq__", [](const PathExpr& a, const PathExpr& b) { return a == b; })
      .def("__hash__", [](const PathExpr& e) { return py::hash(py::str(e.str())); });

  py::class_<AliasRelation>(m, "AliasRelation")
      .def(py::init<>())
      .def(py::init([](const std::string& text) { return parse_relation(text); }),
           py::arg("text"))
      .def("contains",
           [](const AliasRelation& a, const std::string& e, const std::string& f) {
             return a.contains(PathExpr::parse(e), PathExpr::parse(f));
           })
      .def("pairs",
           [](const AliasRelation& a) {
             std::vector<std::pair<std::string, std::string>> out;
             for (const auto& [e, f] : a.pairs()) out.emplace_back(e.str(), f.str());
             return out;
           })
      .def("cliques",
           [](const AliasRelation& a) {
             std::vector<std::vector<std::string>> out;
             for (const auto& c : canonical(a).cliques) {
               auto& row = out.emplace_back();
               for (const auto& e : c) row.push_back(e.str());
             }
             return out;
           })
      .def("issubset", &AliasRelation::is_subset_of)
      .def("__len__", &AliasRelation::size)
      .def("__eq__", [](const AliasRelation& a, const AliasRelation& b) { return a == b; })
      .def("__str__", [](const AliasRelation& a) { return canonical(a).str(); })
      .def("__repr__", [](const AliasRelation& a) {
        return "AliasRelation('" + canonical(a).str() + "')";
      });

  py::class_<Program>(m, "Program")
      .def_property_readonly("procedures",
                             [](const Program& p) {
                               std::vector<std::string> names;
                               for (const auto& proc : p.procedures) names.push_back(proc.name);
                               return names;
                             })
      .def("max_dot_count", [](const Program& p) { return max_dot_count(p); })
      .def("__str__", [](const Program& p) { return to_source(p); });

  m.def("parse", [](const std::string& text, const std::string& level) {
    return parse(text, level_of(level));
  }, py::arg("text"), py::arg("level") = "e2");

  m.def("analyze",
        [](const Program& p, const AliasRelation& init, const std::string& mode,
           std::optional<std::size_t> max_dots, bool keep_formals) {
          return analyze_program(p, init, config_for(p, mode, max_dots, keep_formals))
              .relation;
        },
        py::arg("program"), py::arg("init") = AliasRelation{}, py::arg("mode") = "may",
        py::arg("max_dots") = py::none(), py::arg("keep_formals") = false);

  m.def("trace",
        [](const Program& p, const AliasRelation& init, const std::string& mode) {
          std::vector<std::pair<std::string, AliasRelation>> out;
          for (auto& tp : trace(p, init, config_for(p, mode, std::nullopt, false))) {
            out.emplace_back(tp.point, tp.relation);
          }
          return out;
        },
        py::arg("program"), py::arg("init") = AliasRelation{}, py::arg("mode") = "may");

  m.def("modified_vars", [](const Program& p) {
    std::map<std::string, std::vector<std::string>> out;
    ModVars mv(p);
    for (const auto& [name, set] : mv.table()) {
      auto& row = out[name];
      for (const auto& e : set) row.push_back(e.str());
      std::sort(row.begin(), row.end());
    }
    return out;
  }, py::arg("program"));

  py::class_<SoundnessReport>(m, "SoundnessReport")
      .def_readonly("paths", &SoundnessReport::paths)
      .def_readonly("violations", &SoundnessReport::violations)
      .def_readonly("bounded", &SoundnessReport::bounded)
      .def_property_readonly("ok", &SoundnessReport::ok)
      .def("__str__", &SoundnessReport::text);

  m.def("check_soundness",
        [](const Program& p, std::size_t unroll, std::size_t trials, std::uint64_t seed) {
          SoundnessOptions options;
          options.bounds.loop_unroll = unroll;
          options.trials = trials;
          options.seed = seed;
          return check_soundness(p, options);
        },
        py::arg("program"), py::arg("unroll") = 4, py::arg("trials") = 0,
        py::arg("seed") = 1);
}
