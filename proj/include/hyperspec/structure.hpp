// Structural detection on oriented hypergraphs: twin classes, duplicate
// vertices, duplicate families of twins, and (vertex-)bipartiteness.
#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

// Twins belong to exactly the same hyperedges, on the same sides.
// Classes are ordered by their smallest vertex; each class is sorted.
struct TwinClassPartition {
  std::vector<std::vector<VertexId>> classes;

  // Index into `classes` for every vertex.
  std::vector<std::size_t> class_of;
};

TwinClassPartition find_twin_classes(const OrientedHypergraph& g);

// Pairs (i, j), i < j, with identical adjacency rows (which forces A(i,j) = 0).
std::vector<std::pair<VertexId, VertexId>> find_duplicate_pairs(const OrientedHypergraph& g);

// l twin classes of size t, pairwise non-adjacent, whose adjacency to every
// vertex outside the family agrees.
struct DuplicateTwinFamily {
  std::size_t l = 0;
  std::size_t t = 0;
  std::vector<std::vector<VertexId>> classes;
};

// Maximal families with l >= 2, ordered by their smallest vertex.
std::vector<DuplicateTwinFamily> find_duplicate_twin_families(const OrientedHypergraph& g);

struct Bipartition {
  std::vector<VertexId> part1;
  std::vector<VertexId> part2;
};

// Splits V so that, after reorienting some hyperedges, every input lies in
// part1 and every output in part2. Within each connected component the
// smallest vertex is placed in part1, so all-input hypergraphs come back with
// an empty part2.
std::optional<Bipartition> is_bipartite(const OrientedHypergraph& g);

// Hyperedge indices split so that every vertex is only an input in one class
// and only an output in the other, for the orientation as given.
struct HyperedgeBipartition {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
};

std::optional<HyperedgeBipartition> is_vertex_bipartite(const OrientedHypergraph& g);

// True when every hyperedge keeps co-oriented vertices in one part and
// anti-oriented vertices in different parts.
bool respects_orientation(const OrientedHypergraph& g, const Bipartition& parts);

}  // namespace hyperspec
