#include "hyperspec/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "hyperspec/errors.hpp"

namespace hyperspec {

namespace {

void sort_unique(std::vector<VertexId>& v) {
  std::ranges::sort(v);
  const auto tail = std::ranges::unique(v);
  v.erase(tail.begin(), tail.end());
}

}  // namespace

OrientedHyperedge::OrientedHyperedge(std::vector<VertexId> inputs, std::vector<VertexId> outputs)
    : inputs_(std::move(inputs)), outputs_(std::move(outputs)) {
  sort_unique(inputs_);
  sort_unique(outputs_);
  if (inputs_.empty() && outputs_.empty()) {
    throw ValidationError("hyperedge has no vertices");
  }
  std::vector<VertexId> common;
  std::ranges::set_intersection(inputs_, outputs_, std::back_inserter(common));
  if (!common.empty()) {
    throw ValidationError("vertex " + std::to_string(common.front() + 1) +
                          " is both input and output of the same hyperedge");
  }
}

std::optional<Side> OrientedHyperedge::side_of(VertexId v) const noexcept {
  if (std::ranges::binary_search(inputs_, v)) return Side::input;
  if (std::ranges::binary_search(outputs_, v)) return Side::output;
  return std::nullopt;
}

std::vector<VertexId> OrientedHyperedge::vertices() const {
  std::vector<VertexId> all;
  all.reserve(cardinality());
  std::ranges::merge(inputs_, outputs_, std::back_inserter(all));
  return all;
}

VertexId OrientedHyperedge::max_vertex() const noexcept {
  VertexId m = 0;
  if (!inputs_.empty()) m = inputs_.back();
  if (!outputs_.empty()) m = std::max(m, outputs_.back());
  return m;
}

OrientedHypergraph::OrientedHypergraph(std::size_t vertex_count,
                                       std::vector<OrientedHyperedge> hyperedges)
    : edges_(std::move(hyperedges)), degrees_(vertex_count, 0) {
  if (vertex_count == 0) throw InvalidArgument("hypergraph needs at least one vertex");
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const auto& h = edges_[k];
    if (h.max_vertex() >= vertex_count) {
      throw InvalidArgument("hyperedge " + std::to_string(k + 1) + " references vertex " +
                            std::to_string(h.max_vertex() + 1) + " but N = " +
                            std::to_string(vertex_count));
    }
    for (VertexId v : h.inputs()) ++degrees_[v];
    for (VertexId v : h.outputs()) ++degrees_[v];
  }
  if (const auto it = std::ranges::find(degrees_, 0); it != degrees_.end()) {
    throw DegenerateInput("vertex " + std::to_string(it - degrees_.begin() + 1) +
                          " is isolated");
  }
}

const OrientedHyperedge& OrientedHypergraph::edge(std::size_t index) const {
  if (index >= edges_.size()) {
    throw InvalidArgument("hyperedge index " + std::to_string(index) + " out of range [0, " +
                          std::to_string(edges_.size()) + ")");
  }
  return edges_[index];
}

Count OrientedHypergraph::degree(VertexId v) const {
  if (v >= degrees_.size()) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range [0, " +
                          std::to_string(degrees_.size()) + ")");
  }
  return degrees_[v];
}

bool OrientedHypergraph::is_all_input() const noexcept {
  return std::ranges::all_of(edges_, [](const auto& h) { return h.outputs().empty(); });
}

bool OrientedHypergraph::is_simple_graph() const noexcept {
  return std::ranges::all_of(
      edges_, [](const auto& h) { return h.inputs().size() == 1 && h.outputs().size() == 1; });
}

SignedIntegerMatrix adjacency_matrix(const OrientedHypergraph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  SignedIntegerMatrix a = SignedIntegerMatrix::Zero(n, n);
  auto co_oriented = [&a](std::span<const VertexId> side) {
    for (std::size_t x = 0; x < side.size(); ++x) {
      for (std::size_t y = x + 1; y < side.size(); ++y) {
        --a(side[x], side[y]);
        --a(side[y], side[x]);
      }
    }
  };
  for (const auto& h : g.edges()) {
    co_oriented(h.inputs());
    co_oriented(h.outputs());
    for (VertexId i : h.inputs()) {
      for (VertexId o : h.outputs()) {
        ++a(i, o);
        ++a(o, i);
      }
    }
  }
  return a;
}

LaplacianMatrix normalized_laplacian(const OrientedHypergraph& g) {
  const auto a = adjacency_matrix(g);
  const auto n = a.rows();
  LaplacianMatrix l{Eigen::MatrixXd::Identity(n, n), LaplacianKind::normalized};
  const auto deg = g.degrees();
  for (Eigen::Index i = 0; i < n; ++i) {
    const double inv = 1.0 / static_cast<double>(deg[i]);
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i != j) l.values(i, j) = -static_cast<double>(a(i, j)) * inv;
    }
  }
  return l;
}

OrientedHypergraph underlying_hypergraph(const OrientedHypergraph& g) {
  std::vector<OrientedHyperedge> merged;
  merged.reserve(g.edge_count());
  for (const auto& h : g.edges()) merged.push_back(OrientedHyperedge::all_input(h.vertices()));
  return OrientedHypergraph(g.vertex_count(), std::move(merged));
}

LaplacianMatrix signless_normalized_laplacian(const OrientedHypergraph& g) {
  auto l = normalized_laplacian(underlying_hypergraph(g));
  l.kind = LaplacianKind::signless;
  return l;
}

OrientedHypergraph reorient(const OrientedHypergraph& g, std::size_t index) {
  std::vector<OrientedHyperedge> edges(g.edges().begin(), g.edges().end());
  if (index >= edges.size()) {
    throw InvalidArgument("cannot reorient hyperedge " + std::to_string(index) +
                          ": only " + std::to_string(edges.size()) + " hyperedges");
  }
  edges[index] = edges[index].reoriented();
  return OrientedHypergraph(g.vertex_count(), std::move(edges));
}

}  // namespace hyperspec
