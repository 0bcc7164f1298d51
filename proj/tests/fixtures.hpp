#pragma once

#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace fixtures {

using hyperspec::OrientedHyperedge;
using hyperspec::OrientedHypergraph;
using hyperspec::VertexId;

inline OrientedHyperedge edge(std::vector<VertexId> in, std::vector<VertexId> out = {}) {
  return OrientedHyperedge(std::move(in), std::move(out));
}

// ({v1}, {v2})
inline OrientedHypergraph single_edge() { return OrientedHypergraph(2, {edge({0}, {1})}); }

// One all-input hyperedge over n vertices.
inline OrientedHypergraph single_hyperedge(std::size_t n) {
  std::vector<VertexId> all;
  for (VertexId v = 0; v < n; ++v) all.push_back(v);
  return OrientedHypergraph(n, {edge(all)});
}

// Two hyperedges, ({v1,v2},{v4,v5}) and ({v5,v6},{v2,v3}); bipartite with
// parts {v1,v2,v3} / {v4,v5,v6}.
inline OrientedHypergraph two_hyperedge_bipartite() {
  return OrientedHypergraph(6, {edge({0, 1}, {3, 4}), edge({4, 5}, {1, 2})});
}

inline OrientedHypergraph triangle() {
  return OrientedHypergraph(3, {edge({0}, {1}), edge({1}, {2}), edge({2}, {0})});
}

inline OrientedHypergraph path3() { return OrientedHypergraph(3, {edge({0}, {1}), edge({1}, {2})}); }

}  // namespace fixtures
