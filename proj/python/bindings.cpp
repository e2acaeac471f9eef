#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qgraph/bracketing.hpp"
#include "qgraph/discrete_spectra.hpp"
#include "qgraph/errors.hpp"
#include "qgraph/graph_io.hpp"
#include "qgraph/homology.hpp"
#include "qgraph/metric_spectra.hpp"
#include "qgraph/periodic.hpp"
#include "qgraph/report.hpp"

namespace py = pybind11;
using namespace qgraph;

namespace {

py::array_t<double> to_numpy(const SymmetricMatrix& m) {
  const std::size_t n = m.order();
  py::array_t<double> out({n, n});
  auto a = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
  return out;
}

using EdgeTuple = std::tuple<std::string, std::string>;

GraphSpec spec_from(const std::vector<std::string>& vertices, const std::vector<EdgeTuple>& edges,
                    const std::vector<std::string>& boundary, const std::vector<Label>& labels) {
  if (!labels.empty() && labels.size() != edges.size())
    throw ValidationError("need one label per edge");
  GraphSpec s;
  s.vertices = vertices;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    EdgeSpec e;
    e.id = "e" + std::to_string(i + 1);
    e.tail = std::get<0>(edges[i]);
    e.head = std::get<1>(edges[i]);
    if (!labels.empty()) e.label = labels[i];
    s.edges.push_back(std::move(e));
  }
  s.boundary = boundary;
  return s;
}

std::vector<std::pair<double, std::size_t>> pairs(const Spectrum& s) {
  std::vector<std::pair<double, std::size_t>> out;
  for (const auto& v : s.values) out.emplace_back(v.value, v.multiplicity);
  return out;
}

std::vector<std::pair<double, double>> pairs(const std::vector<Interval>& v) {
  std::vector<std::pair<double, double>> out;
  for (const auto& i : v) out.emplace_back(i.lo, i.hi);
  return out;
}

GapOptions gap_options(bool metric, int n_max, int grid, bool bands) {
  GapOptions o;
  o.metric = metric;
  o.n_max = n_max;
  o.grid = grid;
  o.bands = bands;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Discrete and equilateral metric graph spectra, KD intervals and certified gaps";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<TheoremViolation>(m, "TheoremViolation", PyExc_RuntimeError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  py::class_<WeightedGraph>(m, "Graph")
      .def(py::init([](const std::vector<std::string>& vertices, const std::vector<EdgeTuple>& edges,
                       const std::vector<std::string>& boundary) {
             return build_graph(spec_from(vertices, edges, boundary, {}));
           }),
           py::arg("vertices"), py::arg("edges"), py::arg("boundary") = std::vector<std::string>{})
      .def_property_readonly("vertex_count", &WeightedGraph::vertex_count)
      .def_property_readonly("edge_count", &WeightedGraph::edge_count)
      .def_property_readonly("vertices", &WeightedGraph::vertex_names)
      .def_property_readonly("edges",
                             [](const WeightedGraph& g) {
                               std::vector<EdgeTuple> out;
                               for (const Edge& e : g.edges()) out.emplace_back(g.vertex_name(e.tail), g.vertex_name(e.head));
                               return out;
                             })
      .def_property_readonly("boundary",
                             [](const WeightedGraph& g) {
                               std::vector<std::string> out;
                               for (VertexId v : g.boundary()) out.push_back(g.vertex_name(v));
                               return out;
                             })
      .def("with_boundary",
           [](const WeightedGraph& g, const std::vector<std::string>& names) {
             std::vector<VertexId> ids;
             for (const auto& n : names) ids.push_back(g.vertex(n));
             return g.with_boundary(ids);
           })
      .def("is_connected", [](const WeightedGraph& g) { return is_connected(g); })
      .def("is_bipartite", [](const WeightedGraph& g) { return is_bipartite(g).has_value(); })
      .def("__repr__", [](const WeightedGraph& g) {
        return "<Graph |V|=" + std::to_string(g.vertex_count()) + " |E|=" + std::to_string(g.edge_count()) +
               " |dV|=" + std::to_string(g.boundary().size()) + ">";
      });

  py::class_<PeriodicGraph>(m, "PeriodicGraph")
      .def(py::init([](const std::vector<std::string>& vertices, const std::vector<EdgeTuple>& edges,
                       const std::vector<Label>& labels) {
             return build_periodic(spec_from(vertices, edges, {}, labels));
           }),
           py::arg("vertices"), py::arg("edges"), py::arg("labels"))
      .def_readonly("rank", &PeriodicGraph::rank)
      .def_readonly("quotient", &PeriodicGraph::quotient)
      .def_readonly("labels", &PeriodicGraph::labels)
      .def("fundamental_domain", [](const PeriodicGraph& pg) { return derive_fundamental_domain(pg).graph; })
      .def("twisted_eigenvalues",
           [](const PeriodicGraph& pg, const std::vector<double>& theta) { return twisted_eigenvalues(pg, theta); },
           py::arg("theta"))
      .def("bands",
           [](const PeriodicGraph& pg, int grid) {
             std::vector<std::pair<double, double>> out;
             for (const Band& b : floquet_bands(pg, grid)) out.emplace_back(b.lo, b.hi);
             return out;
           },
           py::arg("grid") = kDefaultGrid)
      .def("verify_bracketing",
           [](const PeriodicGraph& pg, int grid) {
             const BracketReport r = verify_bracketing(pg, grid);
             py::dict d;
             d["samples"] = r.samples;
             d["checks"] = r.checks;
             d["violations"] = r.violations.size();
             d["worst_lower_margin"] = r.worst_lower_margin;
             d["worst_upper_margin"] = r.worst_upper_margin;
             return d;
           },
           py::arg("grid") = kDefaultGrid)
      .def("is_covering_bipartite", [](const PeriodicGraph& pg) { return covering_is_bipartite(pg); });

  m.def("parse_document", [](const std::string& text) -> py::object {
    const GraphSpec s = parse_graph(text);
    if (has_nonzero_label(s)) return py::cast(build_periodic(s));
    return py::cast(build_graph(s));
  }, py::arg("text"), "Graph, or PeriodicGraph when some edge has a nonzero label.");
  m.def("load_document", [](const std::string& path) -> py::object {
    const GraphSpec s = load_graph(path);
    if (has_nonzero_label(s)) return py::cast(build_periodic(s));
    return py::cast(build_graph(s));
  }, py::arg("path"));

  m.def("laplacian", [](const WeightedGraph& g, bool dirichlet) {
    return to_numpy(dirichlet ? dirichlet_laplacian_matrix(g) : laplacian_matrix(g));
  }, py::arg("graph"), py::arg("dirichlet") = false);
  m.def("spectrum", [](const WeightedGraph& g, bool dirichlet) { return pairs(spectrum_of(g, dirichlet)); },
        py::arg("graph"), py::arg("dirichlet") = false, "[(value, multiplicity)] ascending");
  m.def("metric_spectrum_json", [](const WeightedGraph& g, bool dirichlet, int n_max) {
    return to_json(equilateral_spectrum(g, dirichlet, n_max)).dump();
  }, py::arg("graph"), py::arg("dirichlet") = false, py::arg("n_max") = kDefaultNMax);
  m.def("betti_json", [](const WeightedGraph& g, bool relative) { return to_json(betti_numbers(g, relative)).dump(); },
        py::arg("graph"), py::arg("relative") = false);
  m.def("verify_betti_formula", &verify_betti_formula, py::arg("graph"));
  m.def("kd_intervals", [](const WeightedGraph& g, bool metric, int n_max) {
    return pairs(metric ? kd_intervals_metric(g, n_max) : kd_intervals_discrete(g));
  }, py::arg("graph"), py::arg("metric") = false, py::arg("n_max") = kDefaultNMax);
  m.def("kd_table_json", [](const WeightedGraph& g, bool metric, int n_max) {
    return to_json(metric ? classify_kd_intervals_metric(g, n_max) : classify_kd_intervals(g)).dump();
  }, py::arg("graph"), py::arg("metric") = false, py::arg("n_max") = kDefaultNMax);

  m.def("gap_report_json", [](const PeriodicGraph& pg, bool metric, int n_max, int grid, bool bands) {
    return to_json(gap_report(pg, gap_options(metric, n_max, grid, bands))).dump();
  }, py::arg("graph"), py::arg("metric") = false, py::arg("n_max") = kDefaultNMax, py::arg("grid") = kDefaultGrid,
        py::arg("bands") = true);
  m.def("gap_report_json", [](const WeightedGraph& h, bool metric, int n_max, int grid, bool bands) {
    return to_json(gap_report(h, gap_options(metric, n_max, grid, bands))).dump();
  }, py::arg("graph"), py::arg("metric") = false, py::arg("n_max") = kDefaultNMax, py::arg("grid") = kDefaultGrid,
        py::arg("bands") = true);
  m.def("gap_svg", [](const PeriodicGraph& pg, bool metric, int n_max, int grid) {
    return render_svg(gap_report(pg, gap_options(metric, n_max, grid, true)));
  }, py::arg("graph"), py::arg("metric") = false, py::arg("n_max") = kDefaultNMax, py::arg("grid") = kDefaultGrid);

  m.def("closed_form", &closed_form, py::arg("x"));
  m.attr("DEFAULT_GRID") = kDefaultGrid;
  m.attr("DEFAULT_NMAX") = kDefaultNMax;
}
