// Seeded random instances for property tests and the CLI's --seed option.
// Every generator returns a valid hypergraph (no isolated vertices).
#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

using Rng = std::mt19937_64;

// G(n, p) with random edge orientation; isolated vertices are joined to a
// random other vertex. Requires n >= 2.
OrientedHypergraph random_simple_graph(std::size_t n, double p, Rng& rng);

// m hyperedges with random members and sides; vertices left uncovered are
// added to a random hyperedge.
OrientedHypergraph random_oriented_hypergraph(std::size_t n, std::size_t m, Rng& rng);

// Built from a random vertex 2-coloring: each hyperedge puts one color class
// on its input side and the other on its output side, then hyperedges are
// randomly reoriented.
OrientedHypergraph random_bipartite_hypergraph(std::size_t n, std::size_t m, Rng& rng);

struct PlantedFamily {
  OrientedHypergraph graph;
  std::vector<std::vector<VertexId>> classes;  // l classes of t twins each
};

// A random oriented base hypergraph with an l-duplicate family of t-twins
// attached: every class joins the same randomly oriented templates built
// from base vertices, all of its vertices on one side.
PlantedFamily random_planted_family(std::size_t l, std::size_t t, std::size_t base_vertices,
                                    Rng& rng);

}  // namespace hyperspec
