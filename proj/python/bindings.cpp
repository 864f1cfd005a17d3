#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dgc/analysis.hpp"
#include "dgc/blll.hpp"
#include "dgc/cfcm.hpp"
#include "dgc/game.hpp"
#include "dgc/recipes.hpp"

namespace py = pybind11;
using namespace dgc;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Distributed graph coverage: game, learning dynamics, analysis";

  py::class_<Graph>(m, "Graph")
      .def(py::init<>())
      .def(py::init<int, const std::vector<std::pair<int, int>>&>(),
           py::arg("node_count"), py::arg("edges"))
      .def_property_readonly("node_count", &Graph::node_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("neighbors", &Graph::neighbors)
      .def("has_edge", &Graph::has_edge)
      .def("edges", &Graph::edges)
      .def("distance", &Graph::distance)
      .def("delta_neighborhood", &Graph::delta_neighborhood)
      .def("closed_neighborhood", &Graph::closed_neighborhood)
      .def("is_connected", &Graph::is_connected)
      .def("nu", &Graph::nu)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph nodes=" + std::to_string(g.node_count()) +
               " edges=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("make_path", &make_path);
  m.def("make_star", &make_star);
  m.def("make_cycle", &make_cycle);
  m.def("generate_random_geometric", &generate_random_geometric,
        py::arg("node_count"), py::arg("radius"), py::arg("seed"));
  m.def("load_graph", &load_graph);
  m.def("save_graph", &save_graph);

  py::class_<ActionProfile>(m, "ActionProfile")
      .def(py::init<>())
      .def(py::init([](std::vector<int> positions, int delta) {
             return ActionProfile{std::move(positions), delta};
           }),
           py::arg("positions"), py::arg("delta") = 1)
      .def_readwrite("positions", &ActionProfile::positions)
      .def_readwrite("delta", &ActionProfile::delta)
      .def("__repr__", [](const ActionProfile& p) {
        return "<ActionProfile " + format_profile(p) +
               " delta=" + std::to_string(p.delta) + ">";
      });

  m.def("covered_set", &covered_set);
  m.def("potential", &potential);
  m.def("utility", &utility);
  m.def("partial_utility", &partial_utility);
  m.def("constrained_actions", &constrained_actions);
  m.def("experiment_path", &experiment_path, py::arg("graph"), py::arg("a1"),
        py::arg("a2"), py::arg("delta"));

  py::class_<NoiseParams>(m, "NoiseParams")
      .def(py::init([](double epsilon, double r) {
             return NoiseParams{epsilon, r};
           }),
           py::arg("epsilon") = 0.015, py::arg("r") = 1.5)
      .def_readwrite("epsilon", &NoiseParams::epsilon)
      .def_readwrite("r", &NoiseParams::r);

  py::class_<TraceRecord>(m, "TraceRecord")
      .def_readonly("tick", &TraceRecord::tick)
      .def_readonly("covered", &TraceRecord::covered)
      .def_readonly("positions", &TraceRecord::positions);

  m.def("run_blll", &run_blll, py::arg("graph"), py::arg("initial"),
        py::arg("params"), py::arg("steps"), py::arg("seed"));
  m.def("run_cfcm", &run_cfcm, py::arg("graph"), py::arg("initial"),
        py::arg("params"), py::arg("steps"), py::arg("seed"));
  m.def("save_trace_csv", &save_trace_csv);
  m.def("load_trace_csv", &load_trace_csv);
  m.def("binary_choice_probability", &binary_choice_probability);

  py::class_<CoverageOptimum>(m, "CoverageOptimum")
      .def_readonly("max_covered", &CoverageOptimum::max_covered)
      .def_readonly("maximizers", &CoverageOptimum::maximizers);

  m.def("brute_force_max_coverage", &brute_force_max_coverage,
        py::arg("graph"), py::arg("agent_count"), py::arg("delta"),
        py::arg("budget") = 10'000'000);
  m.def("local_maxima_below_optimum", &local_maxima_below_optimum,
        py::arg("graph"), py::arg("agent_count"), py::arg("delta"),
        py::arg("budget") = 10'000'000);

  py::class_<OccupancySummary>(m, "OccupancySummary")
      .def_readonly("mean_covered", &OccupancySummary::mean_covered)
      .def_readonly("fraction_at_target", &OccupancySummary::fraction_at_target)
      .def_readonly("ticks", &OccupancySummary::ticks);

  m.def("occupancy_statistics", &occupancy_statistics, py::arg("trace"),
        py::arg("lo"), py::arg("hi"), py::arg("target"));

  py::class_<TrapInstance>(m, "TrapInstance")
      .def_readonly("graph", &TrapInstance::graph)
      .def_readonly("profile", &TrapInstance::profile)
      .def_readonly("covered", &TrapInstance::covered)
      .def_readonly("optimum", &TrapInstance::optimum);

  m.def("find_greedy_trap", &find_greedy_trap, py::arg("max_nodes"),
        py::arg("agent_count"), py::arg("delta"));
}
