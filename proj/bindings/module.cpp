#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "coxeter/canonical.hpp"
#include "coxeter/cli.hpp"
#include "coxeter/decompose.hpp"
#include "coxeter/enumerate.hpp"
#include "coxeter/errors.hpp"
#include "coxeter/report.hpp"
#include "coxeter/spectral.hpp"
#include "coxeter/textio.hpp"

namespace py = pybind11;
using namespace coxeter;
using nlohmann::json;

namespace {

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null:
      return py::none();
    case json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float:
      return py::float_(j.get<double>());
    case json::value_t::string:
      return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it) {
        out[py::str(it.key())] = json_to_py(it.value());
      }
      return out;
    }
    default:
      return py::none();
  }
}

Bond bond_from_py(const py::object& m) {
  if (py::isinstance<py::str>(m)) {
    std::string s = m.cast<std::string>();
    if (s == "inf") return Bond::infinity();
    throw DomainError("bond label string must be 'inf'");
  }
  if (py::isinstance<py::float_>(m) && std::isinf(m.cast<double>())) {
    return Bond::infinity();
  }
  return Bond::finite(m.cast<int>());
}

Graph build_graph_py(const std::vector<std::string>& vertices,
                     const std::vector<std::tuple<std::string, std::string, py::object>>& edges) {
  std::vector<Edge> built;
  built.reserve(edges.size());
  for (const auto& [u, v, m] : edges) {
    built.push_back(Edge{u, v, bond_from_py(m)});
  }
  return Graph::build(vertices, built);
}

py::object edges_to_py(const Graph& g) {
  py::list out;
  for (const Edge& e : g.edge_list()) {
    py::object m = e.label.infinite() ? py::object(py::str("inf")) : py::object(py::int_(e.label.m));
    out.append(py::make_tuple(e.u, e.v, m));
  }
  return out;
}

py::dict label_to_py(const Label& label) {
  py::dict out;
  for (size_t i = 0; i < label.vertices.size(); ++i) {
    out[py::str(label.vertices[i])] = label.values[i];
  }
  return out;
}

py::dict classification_to_py(const Classification& c) {
  return json_to_py(classification_to_json(c)).cast<py::dict>();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spectral classification of Coxeter graphs";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<ComputationError>(m, "ComputationError", PyExc_RuntimeError);
  py::register_exception<InvariantBreachError>(m, "InvariantBreachError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "GraphParseError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<>())
      .def_property_readonly("n", &Graph::size)
      .def_property_readonly("vertices",
                             [](const Graph& g) { return g.vertices(); })
      .def_property_readonly("edges", &edges_to_py)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__len__", &Graph::size)
      .def("__repr__", [](const Graph& g) {
        std::ostringstream out;
        out << "Graph(n=" << g.size() << ", edges=" << g.edge_count() << ")";
        return out.str();
      });

  m.def("build_graph", &build_graph_py, py::arg("vertices"), py::arg("edges"),
        "Build a graph from vertex names and (u, v, m) edges; m is an int >= 3 or 'inf'.");
  m.def("parse_graph_text",
        [](const std::string& text) { return parse_graph_text(text).graph; },
        py::arg("text"));
  m.def("serialize_graph", &serialize_graph, py::arg("graph"));
  m.def("canonical_form", &canonical_form, py::arg("graph"));
  m.def("graph_from_canonical_form", &graph_from_canonical_form, py::arg("form"));
  m.def("induced_subgraph",
        [](const Graph& g, const VertexSet& x) { return induced_subgraph(g, x); },
        py::arg("graph"), py::arg("vertices"));
  m.def("are_disjoint", &are_disjoint, py::arg("x"), py::arg("y"));
  m.def("are_separated", &are_separated, py::arg("graph"), py::arg("x"), py::arg("y"));
  m.def("connected_components", &connected_components, py::arg("graph"));
  m.def("is_connected", &is_connected, py::arg("graph"));

  m.def("form_matrix", &form_matrix, py::arg("graph"));
  m.def("generalized_adjacency", &generalized_adjacency, py::arg("graph"));
  m.def("default_tolerance", &default_tolerance, py::arg("n"));
  m.def(
      "spectrum",
      [](const Eigen::MatrixXd& a, double tau) {
        Spectrum s = spectrum(a, tau);
        return py::make_tuple(s.values, s.vectors);
      },
      py::arg("adjacency"), py::arg("tau"),
      "Descending eigenvalues and sign-fixed eigenvectors (as columns).");
  m.def(
      "inertia",
      [](const Eigen::MatrixXd& c, double tau) {
        Signature s = inertia(c, tau);
        return py::dict(py::arg("p") = s.p, py::arg("q") = s.q, py::arg("r") = s.r,
                        py::arg("exact") = s.exact);
      },
      py::arg("form"), py::arg("tau") = -1.0);
  m.def("classify",
        [](const Graph& g, double tau) { return classification_to_py(classify(g, tau)); },
        py::arg("graph"), py::arg("tau") = -1.0);
  m.def(
      "perron_data",
      [](const Graph& g, double tau) {
        PerronData d = perron_data(g, tau);
        return py::dict(py::arg("lambda1") = d.lambda1, py::arg("v1") = label_to_py(d.v1),
                        py::arg("gap") = d.gap);
      },
      py::arg("graph"), py::arg("tau") = -1.0);
  m.def("rayleigh_bound_check", &rayleigh_bound_check, py::arg("matrix"), py::arg("vector"),
        py::arg("mu"), py::arg("eps") = -1.0);
  m.def(
      "sign_split",
      [](const Graph& g, double zero_tol) {
        SignSplit s = sign_split(g, zero_tol);
        return py::dict(py::arg("pos") = s.pos, py::arg("neg") = s.neg, py::arg("zero") = s.zero,
                        py::arg("v2") = label_to_py(s.v2), py::arg("lambda2") = s.lambda2,
                        py::arg("degenerate") = s.degenerate, py::arg("zero_tol") = s.zero_tol);
      },
      py::arg("graph"), py::arg("zero_tol") = -1.0);
  m.def("decompose_higher_rank",
        [](const Graph& g) { return json_to_py(decomposition_to_json(decompose_higher_rank(g))); },
        py::arg("graph"));
  m.def("has_disjoint_hyperbolic_pair", &has_disjoint_hyperbolic_pair, py::arg("graph"),
        py::arg("search_bound") = kDefaultSearchBound);
  m.def(
      "find_separated_hyperbolic_pair",
      [](const Graph& g, int bound) -> py::object {
        auto cert = find_separated_hyperbolic_pair(g, bound);
        if (!cert) return py::none();
        return json_to_py(separation_to_json(*cert));
      },
      py::arg("graph"), py::arg("search_bound") = kDefaultSearchBound);
  m.def(
      "certify_higher_rank_via_separation",
      [](const Graph& g, const VertexSet& x, const VertexSet& y) {
        return json_to_py(separation_to_json(certify_higher_rank_via_separation(g, x, y)));
      },
      py::arg("graph"), py::arg("x"), py::arg("y"));

  m.def("connected_graphs", &connected_graphs, py::arg("n"));
  m.def("free_trees", &free_trees, py::arg("n"));
  m.def(
      "classical_diagram",
      [](const std::string& family, int n) {
        auto f = diagram_family_from_string(family);
        if (!f) throw DomainError("unknown diagram family '" + family + "'");
        return classical_diagram(*f, n);
      },
      py::arg("family"), py::arg("n"));
  m.def("figure", &figure, py::arg("name"));
  m.def(
      "make_subhyperbolic_triple",
      [](const Graph& g1, const std::string& v1, const Graph& g2, const std::string& v2,
         const Graph& g3, const std::string& v3, const py::object& m12, const py::object& m13,
         const py::object& m23) {
        auto join = [](const py::object& m) {
          if (py::isinstance<py::str>(m) || py::isinstance<py::float_>(m)) {
            return static_cast<int>(Bond::kInfinity);
          }
          return m.cast<int>();
        };
        TripleSpec spec{g1, g2, g3, v1, v2, v3, join(m12), join(m13), join(m23)};
        return make_subhyperbolic_triple(spec);
      },
      py::arg("g1"), py::arg("v1"), py::arg("g2"), py::arg("v2"), py::arg("g3"), py::arg("v3"),
      py::arg("m12") = 2, py::arg("m13") = 2, py::arg("m23") = 2);
  m.def(
      "cone_vertex_witness",
      [](const Graph& g) -> py::object {
        auto w = cone_vertex_witness(g);
        if (!w) return py::none();
        return py::str(*w);
      },
      py::arg("graph"));
  m.def("verify_corpus",
        [](const std::vector<Graph>& corpus) { return json_to_py(corpus_report_to_json(verify_corpus(corpus))); },
        py::arg("corpus"));
  m.def("sweep_subhyperbolic_triples",
        [](int k) { return json_to_py(corpus_report_to_json(sweep_subhyperbolic_triples(k))); },
        py::arg("max_component_vertices") = 4);
  m.def(
      "classification_report_json",
      [](const Graph& g, double tau) {
        return report_to_string(make_report("classify", g, classify(g, tau)));
      },
      py::arg("graph"), py::arg("tau") = -1.0,
      "The classify command's JSON report as a string.");
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command line in-process; returns (exit_code, stdout, stderr).");
}
