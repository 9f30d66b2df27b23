#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "c2ka/error.hpp"
#include "c2ka/exploit.hpp"
#include "c2ka/report.hpp"
#include "c2ka/semimodule.hpp"
#include "c2ka/specfile.hpp"

namespace py = pybind11;
using namespace c2ka;

namespace {

std::vector<std::string> names(const gcl::VarSet& vars) {
  std::vector<std::string> out;
  for (const auto& v : vars) out.push_back(gcl::to_string(v));
  return out;
}

py::dict edges(const CommGraph& g) {
  py::dict d;
  d["S"] = std::vector<std::pair<std::string, std::string>>(g.s_edges.begin(), g.s_edges.end());
  d["E"] = std::vector<std::pair<std::string, std::string>>(g.e_edges.begin(), g.e_edges.end());
  return d;
}

py::dict attack_dict(const AttackResult& r) {
  py::dict d;
  d["interaction"] = to_string(r.interaction);
  d["kind"] = to_string(r.kind);
  d["attack"] = r.members();
  d["trivial_only"] = r.trivial_only;
  return d;
}

py::dict exploit_dict(const Exploitability& e) {
  py::dict d;
  d["num"] = e.numerator();
  d["den"] = e.denominator();
  d["decimal"] = e.decimal3;
  py::list steps;
  for (const auto& s : e.steps) {
    py::dict step;
    step["agent"] = s.agent;
    step["edge"] = std::string(1, edge_letter(s.edge));
    step["influencing"] = s.influencing;
    step["attack"] = s.attack;
    step["factor"] = py::make_tuple(s.factor.num(), s.factor.den());
    steps.append(step);
  }
  d["steps"] = steps;
  return d;
}

}  // namespace

PYBIND11_MODULE(_c2ka, m) {
  m.doc() = "Implicit interaction and exploitability analysis for C2KA specifications";

  py::register_exception<Error>(m, "Error");
  py::register_exception<SyntaxError>(m, "SyntaxError");
  py::register_exception<EdgeMismatch>(m, "EdgeMismatch");

  py::class_<SystemModel>(m, "SystemModel")
      .def_property_readonly("name", &SystemModel::name)
      .def_property_readonly("agents", &SystemModel::agent_names)
      .def_property_readonly("stimuli", &SystemModel::stimuli)
      .def_property_readonly("behaviours", &SystemModel::behaviours)
      .def_property_readonly("intended",
                             [](const SystemModel& s) {
                               std::vector<std::string> out;
                               for (const auto& p : s.intended()) out.push_back(to_string(p));
                               return out;
                             })
      .def("term", [](const SystemModel& s, const std::string& a) { return to_string(s.agent(a).term()); })
      .def("infl", &infl_agent, py::arg("agent"))
      .def("infl_atom", &infl_atom, py::arg("agent"), py::arg("atom"))
      .def("ref", [](const SystemModel& s, const std::string& a) { return names(ref_agent(s, a)); })
      .def("defs", [](const SystemModel& s, const std::string& a) { return names(def_agent(s, a)); })
      .def("emitted", &emitted_stimuli, py::arg("agent"))
      .def("graph", [](const SystemModel& s) { return edges(build_graph(s)); })
      .def("lint", [](const SystemModel& s) {
        std::vector<std::string> out;
        for (const auto& d : lint(s)) out.push_back(to_string(d));
        return out;
      });

  m.def("load_model", &load_model, py::arg("text"), "Parse and compile specification text");
  m.def("load_model_file", &load_model_file, py::arg("path"));

  py::class_<AttackAnalyzer>(m, "Analyzer")
      .def(py::init<const SystemModel&>(), py::keep_alive<1, 2>())
      .def("graph", [](const AttackAnalyzer& a) { return edges(a.graph()); })
      .def("interactions",
           [](AttackAnalyzer& a, std::optional<std::string> from, std::optional<std::string> to,
              std::optional<std::size_t> max_len) {
             std::vector<std::string> out;
             for (const auto& p : enumerate_interactions(a.graph(), {from, to, max_len})) out.push_back(to_string(p));
             return out;
           },
           py::arg("source") = py::none(), py::arg("sink") = py::none(), py::arg("max_len") = py::none())
      .def("classify",
           [](AttackAnalyzer& a, const std::string& path) {
             return std::string(to_string(classify(parse_interaction(path), a.model().intended())));
           })
      .def("attack", [](AttackAnalyzer& a, const std::string& path) {
        return attack_dict(a.attack_scenarios(parse_interaction(path)));
      })
      .def("exploitability", [](AttackAnalyzer& a, const std::string& path) {
        return exploit_dict(exploitability(a, parse_interaction(path)));
      })
      .def("report",
           [](AttackAnalyzer& a, std::optional<std::string> from, std::optional<std::string> to,
              std::optional<std::size_t> max_len, bool implicit_only, const std::string& format) {
             ReportOptions opts;
             opts.filter = {from, to, max_len};
             opts.implicit_only = implicit_only;
             auto r = build_report(a, opts);
             if (format == "json") return render_json(r);
             if (format == "csv") return render_csv(r);
             return render_text(r);
           },
           py::arg("source") = py::none(), py::arg("sink") = py::none(), py::arg("max_len") = py::none(),
           py::arg("implicit_only") = false, py::arg("format") = "text");

  m.def("normalize_term", [](const std::string& t) { return to_string(normalize(parse_behaviour_term(t))); });
  m.def("def_ref", [](const std::string& text, const std::set<std::string>& stimuli) {
    auto p = gcl::parse_program(text, stimuli);
    return py::make_tuple(names(gcl::def_vars(p)), names(gcl::ref_vars(p)));
  }, py::arg("program"), py::arg("stimuli") = std::set<std::string>{});
}
