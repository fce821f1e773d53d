#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cftspan/experiment.hpp"
#include "cftspan/graph_io.hpp"
#include "cftspan/lowerbound.hpp"
#include "cftspan/modified_greedy.hpp"
#include "cftspan/oracle.hpp"

namespace py = pybind11;
using namespace cftspan;

namespace {

ColoredGraph graph_from_parts(const std::string& setting, int n,
                              const std::vector<std::vector<long long>>& vertex_lists,
                              const std::vector<py::tuple>& edges) {
  auto s = setting_from_name(setting);
  if (!s) throw std::invalid_argument("unknown setting '" + setting + "'");
  std::vector<EdgeSpec> specs;
  for (const auto& t : edges) {
    EdgeSpec e;
    e.id = t[0].cast<EdgeId>();
    e.u = t[1].cast<VertexId>();
    e.v = t[2].cast<VertexId>();
    e.weight = t[3].cast<Weight>();
    if (t.size() > 4) e.colors = t[4].cast<std::vector<long long>>();
    specs.push_back(std::move(e));
  }
  return ColoredGraph(*s, n, vertex_lists, std::move(specs));
}

py::object opt_int(const std::optional<int>& v) {
  if (!v) return py::none();
  return py::int_(*v);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "color fault-tolerant spanner toolkit";

  py::register_exception<ParseError>(m, "GraphParseError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceededError", PyExc_RuntimeError);
  py::register_exception<DensityExhausted>(m, "DensityExhaustedError", PyExc_RuntimeError);

  py::class_<Edge>(m, "Edge")
      .def_readonly("id", &Edge::id)
      .def_readonly("u", &Edge::u)
      .def_readonly("v", &Edge::v)
      .def_readonly("weight", &Edge::weight)
      .def_readonly("colors", &Edge::colors)
      .def("__repr__", [](const Edge& e) {
        return "Edge(id=" + std::to_string(e.id) + ", " + std::to_string(e.u) + "-" +
               std::to_string(e.v) + ", w=" + format_weight(e.weight) + ")";
      });

  py::class_<ColoredGraph>(m, "ColoredGraph")
      .def(py::init(&graph_from_parts), py::arg("setting"), py::arg("n"),
           py::arg("vertex_lists") = std::vector<std::vector<long long>>{},
           py::arg("edges") = std::vector<py::tuple>{},
           "edges are (id, u, v, weight[, colors]) tuples; colors are labels")
      .def_property_readonly("n", &ColoredGraph::vertex_count)
      .def_property_readonly("m", &ColoredGraph::edge_count)
      .def_property_readonly("setting",
                             [](const ColoredGraph& g) { return setting_name(g.setting()); })
      .def_property_readonly("palette_size", &ColoredGraph::palette_size)
      .def("edges", &ColoredGraph::edges)
      .def("vertex_colors", &ColoredGraph::vertex_colors, py::arg("v"))
      .def("color_label", &ColoredGraph::color_label, py::arg("color"))
      .def("color_display", &ColoredGraph::color_display, py::arg("color"))
      .def("color_from_label", &ColoredGraph::color_from_label, py::arg("label"))
      .def("damages", &ColoredGraph::damages, py::arg("fault"), py::arg("edge_id"))
      .def("subtract", &ColoredGraph::subtract, py::arg("faults"))
      .def("restrict_to", &ColoredGraph::restrict_to, py::arg("faults"))
      .def("subgraph", &ColoredGraph::subgraph, py::arg("edge_ids"))
      .def("shortest_dist", &ColoredGraph::shortest_dist, py::arg("u"), py::arg("v"))
      .def(
          "hop_dist",
          [](const ColoredGraph& g, VertexId u, VertexId v) { return opt_int(g.hop_dist(u, v)); },
          py::arg("u"), py::arg("v"))
      .def("girth", [](const ColoredGraph& g) { return opt_int(g.girth()); })
      .def("edge_ids", &ColoredGraph::edge_ids)
      .def("__repr__", [](const ColoredGraph& g) {
        return std::string("ColoredGraph(") + setting_name(g.setting()) +
               ", n=" + std::to_string(g.vertex_count()) + ", m=" + std::to_string(g.edge_count()) +
               ")";
      });

  m.def("parse_graph", &parse_graph, py::arg("text"));
  m.def("load_graph", &load_graph, py::arg("path"));
  m.def("serialize_graph", &serialize_graph, py::arg("graph"),
        py::arg("header") = std::vector<std::string>{});
  m.def("save_graph", &save_graph, py::arg("graph"), py::arg("path"),
        py::arg("header") = std::vector<std::string>{});
  m.def("identical_graphs", &identical_graphs, py::arg("a"), py::arg("b"));

  py::class_<BuildStats>(m, "BuildStats")
      .def_readonly("edges_examined", &BuildStats::edges_examined)
      .def_readonly("edges_kept", &BuildStats::edges_kept)
      .def_readonly("search_nodes", &BuildStats::search_nodes)
      .def_readonly("path_queries", &BuildStats::path_queries)
      .def_readonly("wall_ms", &BuildStats::wall_ms);

  py::class_<BuildReport>(m, "BuildReport")
      .def_readonly("spanner", &BuildReport::spanner)
      .def_readonly("witness", &BuildReport::witness)
      .def_readonly("stats", &BuildReport::stats);

  py::class_<BlockingPair>(m, "BlockingPair")
      .def_readonly("edge", &BlockingPair::edge)
      .def_readonly("fault", &BlockingPair::fault);

  py::class_<BlockingSet>(m, "BlockingSet")
      .def_readonly("pairs", &BlockingSet::pairs)
      .def_readonly("provenance", &BlockingSet::provenance);

  m.def(
      "build_greedy",
      [](const ColoredGraph& g, int k, int f, bool exhaustive_witness) {
        return build_ft_greedy(
            g, k, f, exhaustive_witness ? WitnessSearch::Exhaustive : WitnessSearch::Branching);
      },
      py::arg("graph"), py::arg("k"), py::arg("f"), py::arg("exhaustive_witness") = false);
  m.def("build_modified", &build_modified_greedy, py::arg("graph"), py::arg("k"), py::arg("f"));
  m.def("extract_blocking_set", &extract_blocking_set, py::arg("report"), py::arg("k"));
  m.def(
      "verify_blocking_set",
      [](const ColoredGraph& h, const BlockingSet& b, int k) {
        auto res = verify_blocking_set(h, b, k);
        py::dict out;
        out["ok"] = res.ok;
        out["bad_pair"] = res.bad_pair ? py::cast(*res.bad_pair) : py::none();
        out["unblocked_cycle"] = res.unblocked_cycle ? py::cast(*res.unblocked_cycle) : py::none();
        return out;
      },
      py::arg("spanner"), py::arg("blocking_set"), py::arg("k"));
  m.def("blame_bound_check", &blame_bound_check, py::arg("report"), py::arg("k"), py::arg("f"));

  auto outcome_dict = [](const VerifyOutcome& o) {
    py::dict out;
    out["ok"] = o.ok;
    if (o.counterexample) {
      py::dict ce;
      ce["faults"] = o.counterexample->faults;
      ce["u"] = o.counterexample->u;
      ce["v"] = o.counterexample->v;
      ce["dist_in_h"] = o.counterexample->dist_in_h;
      ce["dist_in_g"] = o.counterexample->dist_in_g;
      out["counterexample"] = ce;
    } else {
      out["counterexample"] = py::none();
    }
    return out;
  };
  m.def(
      "verify_spanner",
      [outcome_dict](const ColoredGraph& g, const ColoredGraph& h, int k, int f,
                     std::uint64_t budget) {
        return outcome_dict(verify_ft_spanner(g, h, k, f, budget));
      },
      py::arg("graph"), py::arg("spanner"), py::arg("k"), py::arg("f"),
      py::arg("budget") = kDefaultVerifyBudget);
  m.def(
      "verify_certificate",
      [outcome_dict](const ColoredGraph& g, const ColoredGraph& h, int lambda,
                     std::uint64_t budget) {
        return outcome_dict(verify_certificate(g, h, lambda, budget));
      },
      py::arg("graph"), py::arg("certificate"), py::arg("lam"),
      py::arg("budget") = kDefaultVerifyBudget);
  m.def("build_certificate", &build_certificate, py::arg("graph"), py::arg("lam"));
  m.def("sample_blocked_subgraph", &sample_blocked_subgraph, py::arg("spanner"),
        py::arg("blocking_set"), py::arg("p"), py::arg("seed"));

  py::class_<GirthBase>(m, "GirthBase")
      .def_readonly("graph", &GirthBase::graph)
      .def_readonly("girth", &GirthBase::girth)
      .def_property_readonly("source", [](const GirthBase& b) {
        return b.source == GirthBase::Source::HardcodedCage ? "hardcoded-cage" : "random-greedy";
      });
  m.def("girth_base", &girth_base, py::arg("n_hint"), py::arg("k"), py::arg("seed"));
  m.def("gen_ecft_lower", &gen_ecft_lower, py::arg("base"), py::arg("f"), py::arg("k"),
        py::arg("seed"));
  m.def("gen_mcft_lower", &gen_mcft_lower, py::arg("base_ec"), py::arg("f"), py::arg("seed"));
  m.def("gen_list_lower", &gen_list_lower, py::arg("base"), py::arg("f"), py::arg("k"),
        py::arg("mu"), py::arg("nu"), py::arg("seed"));

  m.def(
      "random_instance",
      [](int n, int k, const std::string& setting, std::uint64_t seed) {
        auto s = setting_from_name(setting);
        if (!s) throw std::invalid_argument("unknown setting '" + setting + "'");
        return random_instance(n, k, *s, seed);
      },
      py::arg("n"), py::arg("k"), py::arg("setting"), py::arg("seed"));
}
