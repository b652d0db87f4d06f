#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sepcirc/bounds.hpp"
#include "sepcirc/enumeration.hpp"
#include "sepcirc/io.hpp"
#include "sepcirc/rdivision.hpp"
#include "sepcirc/report.hpp"

namespace py = pybind11;
using namespace sepcirc;

namespace {

Support to_support(const std::vector<VertexId>& vertices, const std::vector<std::pair<VertexId, VertexId>>& edges,
                   bool multigraph) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& [a, b] : edges) es.push_back(make_edge(a, b));
  return Support(vertices, es, multigraph);
}

std::vector<std::pair<VertexId, VertexId>> edge_pairs(std::span<const Edge> edges) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const Edge& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

py::dict separation_dict(const EdgeSeparation& s) {
  py::dict d;
  d["A"] = s.a;
  d["B"] = s.b;
  d["cut"] = edge_pairs(s.cut);
  return d;
}

SearchOptions search_options(bool strict, bool exclusive, std::uint64_t max_states) {
  SearchOptions o;
  o.rules.strict_constraint1 = strict;
  o.rules.exclusive_sites = exclusive;
  o.limits.max_states = max_states;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Separators, r-divisions, multilayer circuits and counting bounds";

  static py::exception<Error> base(m, "SepcircError", PyExc_RuntimeError);
  static py::exception<PreconditionError> precondition(m, "PreconditionError", base.ptr());
  static py::exception<CapExceeded> cap(m, "CapExceeded", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const PreconditionError& e) {
      precondition(e.what());
    } catch (const CapExceeded& e) {
      cap(e.what());
    } catch (const Error& e) {
      base(e.what());
    }
  });

  py::class_<Support>(m, "Support")
      .def(py::init(&to_support), py::arg("vertices"), py::arg("edges"), py::arg("multigraph") = false)
      .def_property_readonly("order", &Support::order)
      .def_property_readonly("size", &Support::size)
      .def_property_readonly("vertices",
                             [](const Support& g) { return std::vector<VertexId>(g.vertices().begin(), g.vertices().end()); })
      .def_property_readonly("edges", [](const Support& g) { return edge_pairs(g.edges()); })
      .def("max_degree", &Support::max_degree)
      .def("has_edge", &Support::has_edge)
      .def("to_json", [](const Support& g) { return graph_to_json(g); })
      .def_static("from_json", [](const std::string& text) { return parse_graph(text).support; })
      .def("__eq__", &Support::operator==)
      .def("__repr__", [](const Support& g) {
        return "<Support order=" + std::to_string(g.order()) + " size=" + std::to_string(g.size()) + ">";
      });

  py::class_<GeometricLayout>(m, "GeometricLayout")
      .def_readonly("d", &GeometricLayout::d)
      .def_readonly("c_e", &GeometricLayout::c_e)
      .def_readonly("coords", &GeometricLayout::coords);

  py::class_<GridGraph>(m, "GridGraph")
      .def_readonly("support", &GridGraph::support)
      .def_readonly("layout", &GridGraph::layout)
      .def("to_json", [](const GridGraph& g) { return graph_to_json(g.support, &g.layout); });

  m.def("make_grid", [](const std::vector<int>& dims) { return make_grid(static_cast<int>(dims.size()), dims); },
        py::arg("dims"), "Box grid with dims[i] points along axis i.");
  m.def("degree_bound", &degree_bound, py::arg("c_e"), py::arg("d"));
  m.def("count_subgraphs", [](const Support& g, int p) { return count_subgraphs(g, p); }, py::arg("g"), py::arg("p"));

  m.def("plane_separator",
        [](const GridGraph& g, double alpha) { return separation_dict(plane_separator(g.support, g.layout, alpha)); },
        py::arg("grid"), py::arg("alpha") = 2.0 / 3.0);
  m.def("brute_force_min_cut",
        [](const Support& g, double alpha) { return separation_dict(brute_force_min_cut(g, alpha)); }, py::arg("g"),
        py::arg("alpha") = 2.0 / 3.0);

  m.def("delta_constant",
        [](double alpha, double beta, double lambda) {
          return delta_constant({alpha, beta, 2, SeparabilityFunction::power(lambda)}).delta_cut;
        },
        py::arg("alpha"), py::arg("beta"), py::arg("lambda_"));
  m.def(
      "r_partition",
      [](const GridGraph& g, int r, const std::string& alg, double alpha, double beta, double lambda) {
        const SeparabilityParams params{alpha, beta, 2, SeparabilityFunction::power(lambda)};
        const Splitter splitter = alg == "brute" ? make_brute_splitter(alpha) : make_plane_splitter(g.layout, alpha);
        const RDivision div = r_partition(g.support, r, splitter, params);
        py::dict d;
        d["r"] = div.r;
        d["pieces"] = div.pieces;
        d["cut"] = edge_pairs(div.cut_edges);
        d["p_bar"] = div.p_bar;
        d["s_bar"] = div.s_bar;
        return d;
      },
      py::arg("grid"), py::arg("r"), py::arg("alg") = "plane", py::arg("alpha") = 2.0 / 3.0, py::arg("beta") = 1.0,
      py::arg("lambda_") = 0.5);

  m.def(
      "validate",
      [](const std::string& circuit, const std::string& graph, const std::string& embedding, int k, bool strict,
         bool exclusive) {
        ValidationOptions rules;
        rules.strict_constraint1 = strict;
        rules.exclusive_sites = exclusive;
        const MultilayerCircuit mc{parse_circuit(circuit), parse_graph(graph).support,
                                   parse_embedding(embedding).embedding, k};
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& v : validate(mc, rules).violations) out.emplace_back(std::string(to_string(v.kind)), v.detail);
        return out;
      },
      py::arg("circuit_json"), py::arg("graph_json"), py::arg("embedding_json"), py::arg("k") = 1,
      py::arg("strict_constraint1") = false, py::arg("exclusive_sites") = false,
      "List of (kind, detail) violations; empty when the circuit is valid.");

  m.def(
      "enumerate_computable",
      [](const Support& t, int k, int n, int L, bool strict, bool exclusive, std::uint64_t max_states) {
        std::map<std::string, int> out;
        for (const auto& [table, w] :
             enumerate_computable(t, k, n, 1, L, search_options(strict, exclusive, max_states)).witnesses)
          out[table.to_string()] = w.complexity;
        return out;
      },
      py::arg("t"), py::arg("k"), py::arg("n"), py::arg("L"), py::arg("strict_constraint1") = false,
      py::arg("exclusive_sites") = false, py::arg("max_states") = EnumerationLimits{}.max_states);
  m.def(
      "shannon_value",
      [](const Support& t, int k, int n, bool strict, bool exclusive, std::uint64_t max_states) {
        const ShannonResult r = shannon_value(t, k, n, search_options(strict, exclusive, max_states));
        std::map<std::string, std::optional<int>> table;
        for (const auto& [tt, c] : r.complexity) table[tt.to_string()] = c;
        return std::make_pair(r.shannon, table);
      },
      py::arg("t"), py::arg("k"), py::arg("n"), py::arg("strict_constraint1") = false,
      py::arg("exclusive_sites") = false, py::arg("max_states") = EnumerationLimits{}.max_states,
      "(shannon value or None, {table: complexity or None}).");
  m.def("count_abstract", [](int n, int m_, int L) { return count_abstract(n, m_, L); }, py::arg("n"), py::arg("m"),
        py::arg("L"));
  m.def("z_oracle", [](int p, int s) { return z_oracle(p, s); }, py::arg("p"), py::arg("s"));

  m.def("log_count_bound", &log_count_bound, py::arg("n"), py::arg("m"), py::arg("L"), py::arg("c"));
  m.def("lower_bound_lambda", &lower_bound_lambda, py::arg("n"), py::arg("k"), py::arg("lambda_"));
  m.def("lower_bound_ddim", &lower_bound_ddim, py::arg("n"), py::arg("k"), py::arg("d"));
  m.def("corollary2_bound", &corollary2_bound, py::arg("n"), py::arg("k"), py::arg("lambda0"));
  m.def("bounds_sweep", [](const std::string& formula, const std::string& sweep) {
    return bounds_sweep(formula, sweep).to_string();
  }, py::arg("formula"), py::arg("sweep"), "CSV text, one row per sweep point.");
}
