// Oriented hypergraphs and their degree, adjacency and normalized Laplacian matrices.
//
// An oriented hyperedge is a pair of disjoint vertex sets (inputs, outputs).
// Two vertices of a hyperedge are co-oriented when they sit on the same side
// and anti-oriented otherwise. The signed adjacency matrix counts, for every
// pair of distinct vertices,
//
//   A(i,j) = #{h : i, j anti-oriented in h} - #{h : i, j co-oriented in h}
//
// and the normalized Laplacian is L = I - D^-1 A with D the diagonal degree
// matrix. The signless normalized Laplacian is the normalized Laplacian of the
// underlying hypergraph, obtained by merging both sides of every hyperedge
// into a single input set.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace hyperspec {

using VertexId = std::uint32_t;
using Count = std::int64_t;

using SignedIntegerMatrix = Eigen::Matrix<Count, Eigen::Dynamic, Eigen::Dynamic>;

enum class Side : std::uint8_t { input, output };

constexpr Side opposite(Side s) noexcept { return s == Side::input ? Side::output : Side::input; }

class OrientedHyperedge {
 public:
  // Sides are treated as sets: duplicates are dropped and both are kept sorted.
  // Throws ValidationError if the sides overlap or are both empty.
  OrientedHyperedge(std::vector<VertexId> inputs, std::vector<VertexId> outputs);

  static OrientedHyperedge all_input(std::vector<VertexId> vertices) {
    return OrientedHyperedge(std::move(vertices), {});
  }

  std::span<const VertexId> inputs() const noexcept { return inputs_; }
  std::span<const VertexId> outputs() const noexcept { return outputs_; }

  std::size_t cardinality() const noexcept { return inputs_.size() + outputs_.size(); }

  // Which side v lies on, if any.
  std::optional<Side> side_of(VertexId v) const noexcept;
  bool contains(VertexId v) const noexcept { return side_of(v).has_value(); }

  // Sorted union of both sides.
  std::vector<VertexId> vertices() const;

  VertexId max_vertex() const noexcept;

  OrientedHyperedge reoriented() const { return OrientedHyperedge(outputs_, inputs_, Trusted{}); }

  friend bool operator==(const OrientedHyperedge&, const OrientedHyperedge&) = default;

 private:
  struct Trusted {};
  OrientedHyperedge(std::vector<VertexId> inputs, std::vector<VertexId> outputs, Trusted)
      : inputs_(std::move(inputs)), outputs_(std::move(outputs)) {}

  std::vector<VertexId> inputs_;
  std::vector<VertexId> outputs_;
};

inline std::size_t cardinality(const OrientedHyperedge& h) noexcept { return h.cardinality(); }

// Immutable after construction. Vertices are 0..N-1 and every vertex must lie
// in at least one hyperedge, so the degree matrix is invertible.
class OrientedHypergraph {
 public:
  // Throws InvalidArgument for N == 0 or hyperedges referencing vertices >= N,
  // DegenerateInput when some vertex belongs to no hyperedge.
  OrientedHypergraph(std::size_t vertex_count, std::vector<OrientedHyperedge> hyperedges);

  std::size_t vertex_count() const noexcept { return degrees_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const OrientedHyperedge> edges() const noexcept { return edges_; }
  const OrientedHyperedge& edge(std::size_t index) const;

  Count degree(VertexId v) const;
  std::span<const Count> degrees() const noexcept { return degrees_; }

  // Every hyperedge has an empty output side.
  bool is_all_input() const noexcept;
  // Every hyperedge has exactly one input and one output.
  bool is_simple_graph() const noexcept;

  friend bool operator==(const OrientedHypergraph&, const OrientedHypergraph&) = default;

 private:
  std::vector<OrientedHyperedge> edges_;
  std::vector<Count> degrees_;
};

inline Count degree(const OrientedHypergraph& g, VertexId v) { return g.degree(v); }

SignedIntegerMatrix adjacency_matrix(const OrientedHypergraph& g);

enum class LaplacianKind : std::uint8_t { normalized, signless };

struct LaplacianMatrix {
  Eigen::MatrixXd values;
  LaplacianKind kind = LaplacianKind::normalized;

  std::size_t order() const noexcept { return static_cast<std::size_t>(values.rows()); }
};

// L = I - D^-1 A.
LaplacianMatrix normalized_laplacian(const OrientedHypergraph& g);

// Each hyperedge (in, out) becomes (in u out, {}).
OrientedHypergraph underlying_hypergraph(const OrientedHypergraph& g);

// Normalized Laplacian of the underlying hypergraph, tagged signless.
LaplacianMatrix signless_normalized_laplacian(const OrientedHypergraph& g);

// Copy of g with hyperedge `index` having inputs and outputs exchanged.
OrientedHypergraph reorient(const OrientedHypergraph& g, std::size_t index);

}  // namespace hyperspec
