#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperspec/conformance.hpp"
#include "hyperspec/errors.hpp"
#include "hyperspec/families.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/io.hpp"
#include "hyperspec/spectral.hpp"
#include "hyperspec/structure.hpp"

namespace py = pybind11;
using namespace hyperspec;

namespace {

using EdgeTuple = std::pair<std::vector<VertexId>, std::vector<VertexId>>;

OrientedHypergraph make_hypergraph(std::size_t n, const std::vector<EdgeTuple>& edges) {
  std::vector<OrientedHyperedge> hs;
  hs.reserve(edges.size());
  for (const auto& [in, out] : edges) hs.emplace_back(in, out);
  return OrientedHypergraph(n, std::move(hs));
}

std::vector<double> to_list(const RealSpectrum& s) { return {s.values().begin(), s.values().end()}; }

std::vector<std::pair<double, std::size_t>> to_pairs(const MultiplicityList& m) {
  std::vector<std::pair<double, std::size_t>> out;
  for (const auto& c : m) out.emplace_back(c.value, c.multiplicity);
  return out;
}

py::dict prediction_dict(const SpectrumPrediction& p) {
  py::list entries;
  for (const auto& e : p.entries()) {
    entries.append(py::make_tuple(e.value, e.multiplicity,
                                  e.mode == Mode::exact ? "exact" : "at-least"));
  }
  py::dict d;
  d["order"] = p.order();
  d["entries"] = entries;
  d["fully_exact"] = p.fully_exact();
  if (const auto& r = p.residual()) {
    py::dict rd;
    rd["count"] = r->count;
    rd["sum"] = r->sum;
    rd["largest_exceeds"] = r->largest_exceeds ? py::cast(*r->largest_exceeds) : py::none();
    d["residual"] = rd;
  } else {
    d["residual"] = py::none();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Normalized and signless normalized Laplacian spectra of oriented hypergraphs";

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<DegenerateInput>(m, "DegenerateInput", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<OrientedHypergraph>(m, "OrientedHypergraph")
      .def(py::init(&make_hypergraph), py::arg("vertex_count"), py::arg("hyperedges"),
           "Hyperedges are (inputs, outputs) pairs of 0-based vertex lists.")
      .def_property_readonly("vertex_count", &OrientedHypergraph::vertex_count)
      .def_property_readonly("edge_count", &OrientedHypergraph::edge_count)
      .def_property_readonly("hyperedges",
                             [](const OrientedHypergraph& g) {
                               std::vector<EdgeTuple> out;
                               for (const auto& h : g.edges()) {
                                 out.emplace_back(
                                     std::vector<VertexId>(h.inputs().begin(), h.inputs().end()),
                                     std::vector<VertexId>(h.outputs().begin(), h.outputs().end()));
                               }
                               return out;
                             })
      .def("degree", &OrientedHypergraph::degree, py::arg("v"))
      .def_property_readonly("degrees",
                             [](const OrientedHypergraph& g) {
                               return std::vector<Count>(g.degrees().begin(), g.degrees().end());
                             })
      .def("is_all_input", &OrientedHypergraph::is_all_input)
      .def("is_simple_graph", &OrientedHypergraph::is_simple_graph)
      .def(py::self == py::self)
      .def("__repr__", [](const OrientedHypergraph& g) {
        return "<OrientedHypergraph N=" + std::to_string(g.vertex_count()) +
               " M=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("adjacency_matrix", &adjacency_matrix);
  m.def("normalized_laplacian",
        [](const OrientedHypergraph& g) { return normalized_laplacian(g).values; });
  m.def("signless_normalized_laplacian",
        [](const OrientedHypergraph& g) { return signless_normalized_laplacian(g).values; });
  m.def("underlying_hypergraph", &underlying_hypergraph);
  m.def("reorient", &reorient, py::arg("g"), py::arg("index"));

  m.def("spectrum", [](const OrientedHypergraph& g) { return to_list(spectrum(g)); });
  m.def("signless_spectrum",
        [](const OrientedHypergraph& g) { return to_list(signless_spectrum(g)); });
  m.def(
      "eigenpairs",
      [](const OrientedHypergraph& g, bool signless) {
        const auto l = signless ? signless_normalized_laplacian(g) : normalized_laplacian(g);
        std::vector<std::pair<double, Eigen::VectorXd>> out;
        for (auto& p : eigenpairs(l, g.degrees())) out.emplace_back(p.value, std::move(p.vector));
        return out;
      },
      py::arg("g"), py::arg("signless") = false);
  m.def(
      "cluster_multiplicities",
      [](std::vector<double> values, double tol) {
        return to_pairs(cluster_multiplicities(RealSpectrum(std::move(values)), tol));
      },
      py::arg("values"), py::arg("tol") = kDefaultClusterTolerance);
  m.def(
      "circulant_eigenvalues",
      [](const std::vector<Count>& weights, Count l) {
        return to_list(circulant_eigenvalues(weights, weights.size(), l));
      },
      py::arg("weights"), py::arg("l"));

  m.def("find_twin_classes", [](const OrientedHypergraph& g) { return find_twin_classes(g).classes; });
  m.def("find_duplicate_pairs", &find_duplicate_pairs);
  m.def("find_duplicate_twin_families", [](const OrientedHypergraph& g) {
    std::vector<std::vector<std::vector<VertexId>>> out;
    for (auto& f : find_duplicate_twin_families(g)) out.push_back(std::move(f.classes));
    return out;
  });
  m.def("is_bipartite", [](const OrientedHypergraph& g) -> py::object {
    const auto parts = is_bipartite(g);
    if (!parts) return py::none();
    return py::make_tuple(parts->part1, parts->part2);
  });
  m.def("is_vertex_bipartite", [](const OrientedHypergraph& g) -> py::object {
    const auto split = is_vertex_bipartite(g);
    if (!split) return py::none();
    return py::make_tuple(split->first, split->second);
  });

  m.def(
      "gen_hyperflower",
      [](std::size_t l, std::size_t r, std::size_t t, std::vector<std::size_t> cores) {
        if (cores.empty()) cores.assign(r, 1);
        return gen_hyperflower(l, r, t, cores);
      },
      py::arg("l"), py::arg("r") = 1, py::arg("t") = 1, py::arg("core_sizes") = std::vector<std::size_t>{});
  m.def("gen_complete", &gen_complete, py::arg("n"), py::arg("c"));
  m.def("gen_lattice", &gen_lattice, py::arg("l"));
  m.def("gen_hypercycle", &gen_hypercycle, py::arg("n"), py::arg("l"));
  m.def("gen_graph", [](const std::vector<std::pair<VertexId, VertexId>>& edges) {
    return gen_graph(edges);
  });
  m.def("reduce_hyperflower",
        [](const OrientedHypergraph& g, const std::vector<VertexId>& peripherals) {
          return reduce_hyperflower(g, peripherals);
        });

  m.def("predict_hyperflower_r1",
        [](std::size_t l, std::size_t t, std::size_t core) {
          return prediction_dict(predict_hyperflower_r1(l, t, core));
        },
        py::arg("l"), py::arg("t"), py::arg("core_size"));
  m.def("predict_hyperflower_l2",
        [](std::size_t l, std::size_t w1, std::size_t w2) {
          return prediction_dict(predict_hyperflower_l2(l, w1, w2));
        },
        py::arg("l"), py::arg("w1"), py::arg("w2"));
  m.def("predict_complete",
        [](std::size_t n, std::size_t c) { return prediction_dict(predict_complete(n, c)); },
        py::arg("n"), py::arg("c"));
  m.def("predict_lattice", [](std::size_t l) { return prediction_dict(predict_lattice(l)); },
        py::arg("l"));
  m.def("predict_hypercycle",
        [](std::size_t n, std::size_t l) { return prediction_dict(predict_hypercycle(n, l)); },
        py::arg("n"), py::arg("l"));
  m.def("hypercycle_weights", &hypercycle_weights, py::arg("n"), py::arg("l"));

  m.def("parse_hypergraph", [](const std::string& text) { return parse_hypergraph(text); });
  m.def("write_hypergraph", &write_hypergraph);
}
