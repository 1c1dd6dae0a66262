#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chaindeck/config.hpp"
#include "chaindeck/constructions.hpp"
#include "chaindeck/oracle.hpp"
#include "chaindeck/spectrum.hpp"
#include "chaindeck/taskgen.hpp"
#include "chaindeck/verifier.hpp"

namespace py = pybind11;
using namespace chaindeck;

namespace {

std::vector<std::pair<int, int>> arcs_as_pairs(const std::vector<Arc>& arcs) {
  std::vector<std::pair<int, int>> out;
  out.reserve(arcs.size());
  for (const Arc& a : arcs) out.emplace_back(a.tail, a.head);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Balanced path decompositions of complete digraphs";

  py::class_<DirectedPath>(m, "DirectedPath")
      .def(py::init<std::vector<int>>())
      .def_property_readonly("vertices", &DirectedPath::vertices)
      .def_property_readonly("length", &DirectedPath::length)
      .def("arcs", [](const DirectedPath& p) { return arcs_as_pairs(p.arcs()); })
      .def("reversed", &DirectedPath::reversed)
      .def("__len__", [](const DirectedPath& p) { return p.vertices().size(); })
      .def("__eq__", [](const DirectedPath& a, const DirectedPath& b) { return a == b; })
      .def("__repr__", [](const DirectedPath& p) {
        std::string out = "DirectedPath([";
        for (std::size_t i = 0; i < p.vertices().size(); ++i)
          out += (i ? "," : "") + std::to_string(p.vertices()[i]);
        return out + "])";
      });

  py::class_<Decomposition>(m, "Decomposition")
      .def(py::init([](int n, const std::vector<std::vector<int>>& paths) {
        std::vector<DirectedPath> ps;
        for (const auto& p : paths) ps.emplace_back(p);
        return Decomposition(n, std::move(ps));
      }))
      .def_property_readonly("n", &Decomposition::n)
      .def_property_readonly("paths", &Decomposition::paths)
      .def("__eq__", [](const Decomposition& a, const Decomposition& b) { return a == b; });

  py::class_<LengthProfile>(m, "LengthProfile")
      .def(py::init<int, std::vector<std::int64_t>>())
      .def_property_readonly("n", &LengthProfile::n)
      .def_property_readonly("counts", &LengthProfile::counts)
      .def("size", &LengthProfile::size)
      .def("arc_total", &LengthProfile::arc_total)
      .def("incidence_total", &LengthProfile::incidence_total)
      .def("interior_total", &LengthProfile::interior_total)
      .def("__eq__", [](const LengthProfile& a, const LengthProfile& b) { return a == b; })
      .def("__repr__",
           [](const LengthProfile& p) { return "LengthProfile(" + p.to_string() + ")"; });

  py::class_<ConditionReport>(m, "ConditionReport")
      .def_readonly("arc_count_ok", &ConditionReport::arc_count_ok)
      .def_readonly("k", &ConditionReport::k)
      .def_readonly("path_count_divisible", &ConditionReport::path_count_divisible)
      .def_readonly("interior_divisible", &ConditionReport::interior_divisible)
      .def_readonly("admissible", &ConditionReport::admissible);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("is_partition", &VerificationReport::is_partition)
      .def_readonly("paths_valid", &VerificationReport::paths_valid)
      .def_readonly("non_hamiltonian", &VerificationReport::non_hamiltonian)
      .def_readonly("vertex_path_counts", &VerificationReport::vertex_path_counts)
      .def_readonly("balanced", &VerificationReport::balanced)
      .def_readonly("k", &VerificationReport::k)
      .def_readonly("profile", &VerificationReport::profile)
      .def("ok", &VerificationReport::ok)
      .def_property_readonly("failures", [](const VerificationReport& r) {
        std::vector<std::string> out;
        for (const Defect& f : r.failures)
          out.push_back("[" + defect_kind_name(f.kind) + "] " + f.message);
        return out;
      });

  py::enum_<SearchStatus>(m, "SearchStatus")
      .value("Found", SearchStatus::Found)
      .value("Exhausted", SearchStatus::Exhausted)
      .value("BudgetExceeded", SearchStatus::BudgetExceeded);

  py::class_<SearchOutcome>(m, "SearchOutcome")
      .def_readonly("status", &SearchOutcome::status)
      .def_readonly("witness", &SearchOutcome::witness)
      .def_readonly("nodes_explored", &SearchOutcome::nodes_explored)
      .def_readonly("budget", &SearchOutcome::budget);

  py::class_<Labeling>(m, "Labeling")
      .def_property_readonly("n", [](const Labeling& lab) { return lab.n; })
      .def("__repr__", [](const Labeling& lab) {
        return "Labeling(" + labeling_to_string(lab) + ")";
      });

  py::class_<Task>(m, "Task")
      .def_readonly("path", &Task::path)
      .def_readonly("latex", &Task::latex)
      .def_readonly("text", &Task::text);

  py::class_<TaskSet>(m, "TaskSet")
      .def_readonly("n", &TaskSet::n)
      .def_readonly("profile", &TaskSet::profile)
      .def_readonly("k", &TaskSet::k)
      .def_readonly("labeling", &TaskSet::labeling)
      .def_readonly("seed", &TaskSet::seed)
      .def_readonly("source", &TaskSet::source)
      .def_readonly("tasks", &TaskSet::tasks);

  py::enum_<EftClass>(m, "EftClass")
      .value("Feasible", EftClass::Feasible)
      .value("SemiFeasible", EftClass::SemiFeasible)
      .value("Infeasible", EftClass::Infeasible);

  m.def("all_arcs", [](int n) { return arcs_as_pairs(all_arcs(n)); }, py::arg("n"));
  m.def("parse_decomposition", &parse_decomposition, py::arg("text"));
  m.def("emit_decomposition", &emit_decomposition, py::arg("d"));
  m.def("to_dot", &to_dot, py::arg("d"));

  m.def("parse_profile", &parse_profile, py::arg("csv"));
  m.def("arc_count_ok", &arc_count_ok, py::arg("profile"));
  m.def("balanced_k", &balanced_k, py::arg("profile"));
  m.def("necessary_conditions", &necessary_conditions, py::arg("profile"));
  m.def("enumerate_profiles", &enumerate_profiles, py::arg("n"),
        py::arg("admissible_only") = false, py::arg("max_order") = kDefaultEnumerationBound);
  m.def("spectrum_histogram", &spectrum_histogram, py::arg("n"),
        py::arg("max_order") = kDefaultEnumerationBound);

  m.def("reverse_path", &reverse_path, py::arg("path"));
  m.def("construct_trivial", &construct_trivial, py::arg("n"));
  m.def("construct", &construct, py::arg("n"), py::arg("profile"));
  m.def("list_supported", &list_supported, py::arg("n"));

  m.def("verify", &verify, py::arg("d"));
  m.def("extract_profile", &extract_profile, py::arg("d"));

  m.def("search", &search, py::arg("n"), py::arg("profile"), py::arg("require_balanced"),
        py::arg("budget_nodes") = kUnlimitedBudget, py::arg("prune") = true);

  m.def("parse_labeling", &parse_labeling, py::arg("text"));
  m.def(
      "instantiate",
      [](const Labeling& spec, std::uint64_t seed, const std::string& redraw) {
        return instantiate(spec, seed, parse_redraw_policy(redraw));
      },
      py::arg("spec"), py::arg("seed"), py::arg("redraw") = "mixed");
  m.def(
      "generate_task_set",
      [](const Decomposition& d, const Labeling& spec, std::uint64_t seed,
         const std::string& redraw, bool allow_unbalanced, const std::string& source) {
        return generate_task_set(d, spec, seed, parse_redraw_policy(redraw), allow_unbalanced,
                                 source);
      },
      py::arg("d"), py::arg("spec"), py::arg("seed"), py::arg("redraw") = "mixed",
      py::arg("allow_unbalanced") = false, py::arg("source") = "");
  m.def("taskset_to_json", &taskset_to_json, py::arg("ts"));
  m.def("taskset_to_latex", &taskset_to_latex, py::arg("ts"));
  m.def("taskset_to_text", &taskset_to_text, py::arg("ts"));
  m.def("normalize_latex", &normalize_latex, py::arg("s"));

  m.def(
      "classify_eft",
      [](int order, const std::vector<std::pair<int, int>>& arcs, const Labeling& labels) {
        Eft t;
        t.order = order;
        for (const auto& [u, v] : arcs) t.arcs.push_back({u, v});
        t.labels = labels;
        return classify_eft(t);
      },
      py::arg("order"), py::arg("arcs"), py::arg("labels"));
}
