// Parametric hypergraph families and the closed-form spectra of their
// signless normalized Laplacians.
//
// All generators emit all-input hyperedges. Vertex layouts are fixed:
//
//   hyperflower  peripheral v(z, j) at z*l + j (twin index z < t, petal j < l),
//                then the cores h_1..h_r in order; hyperedge (i, j) at i*l + j
//   complete     hyperedges in lexicographic order of their vertex sets
//   lattice      vertex (row, col) at row*l + col; rows first, then columns
//   hypercycle   hyperedge i = {i, ..., i+l-1} mod n
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/spectral.hpp"

namespace hyperspec {

struct HyperflowerSpec {
  std::size_t l = 1;
  std::size_t r = 1;
  std::size_t t = 1;
  std::vector<std::size_t> core_sizes;  // length r

  std::size_t vertex_count() const;
};

struct CompleteSpec {
  std::size_t n = 0;
  std::size_t c = 0;
};

struct LatticeSpec {
  std::size_t l = 0;
};

struct HypercycleSpec {
  std::size_t n = 0;
  std::size_t l = 0;
};

struct GraphSpec {
  std::vector<std::pair<VertexId, VertexId>> edges;
};

using FamilySpec = std::variant<HyperflowerSpec, CompleteSpec, LatticeSpec, HypercycleSpec, GraphSpec>;

// Throws InvalidArgument when a parameter bound is violated.
void validate(const FamilySpec& spec);

// Human-readable one-liner, e.g. "complete n=4 c=2".
std::string describe(const FamilySpec& spec);

OrientedHypergraph gen_hyperflower(std::size_t l, std::size_t r, std::size_t t,
                                   std::span<const std::size_t> core_sizes);
OrientedHypergraph gen_complete(std::size_t n, std::size_t c);
OrientedHypergraph gen_lattice(std::size_t l);
OrientedHypergraph gen_hypercycle(std::size_t n, std::size_t l);
// One hyperedge ({u}, {v}) per pair; N is one past the largest endpoint.
// Throws InvalidArgument on self-loops and repeated edges.
OrientedHypergraph gen_graph(std::span<const std::pair<VertexId, VertexId>> edges);

OrientedHypergraph generate(const FamilySpec& spec);

// Number of hyperedges shared by two vertices at circular distance r in the
// l-hypercycle on n vertices: l - r for 1 <= r < l, symmetric, 0 otherwise.
std::vector<Count> hypercycle_weights(std::size_t n, std::size_t l);

// The peripheral vertices v_1..v_l of a generated hyperflower with t = 1.
std::vector<VertexId> hyperflower_peripherals(const HyperflowerSpec& spec);

// Deletes v_2..v_l (peripherals[1..]) and every hyperedge containing one of
// them; remaining vertices keep their relative order. Throws ValidationError
// unless g is an all-input (l, r)-hyperflower with these peripheral vertices.
OrientedHypergraph reduce_hyperflower(const OrientedHypergraph& g,
                                      std::span<const VertexId> peripherals);

enum class Mode : std::uint8_t { exact, at_least };

struct PredictedEigenvalue {
  double value = 0.0;
  std::size_t multiplicity = 0;
  Mode mode = Mode::exact;
};

// The `count` largest eigenvalues not covered by the listed entries sum to
// `sum`, and the largest one is strictly greater than `largest_exceeds`.
struct ResidualConstraint {
  std::size_t count = 0;
  double sum = 0.0;
  std::optional<double> largest_exceeds;
};

class SpectrumPrediction {
 public:
  explicit SpectrumPrediction(std::size_t order) : order_(order) {}

  // Entries whose values agree to within 1e-12 merge; at_least wins.
  // Zero multiplicities are ignored.
  SpectrumPrediction& add(double value, std::size_t multiplicity, Mode mode = Mode::exact);
  SpectrumPrediction& set_residual(ResidualConstraint residual);

  std::size_t order() const noexcept { return order_; }
  std::span<const PredictedEigenvalue> entries() const noexcept { return entries_; }
  const std::optional<ResidualConstraint>& residual() const noexcept { return residual_; }

  std::size_t listed_multiplicity() const noexcept;
  // Every entry exact, no residual, multiplicities summing to the order.
  bool fully_exact() const noexcept;
  // Sorted list of order() values; only meaningful when fully_exact().
  std::vector<double> expanded() const;

 private:
  std::size_t order_;
  std::vector<PredictedEigenvalue> entries_;  // ascending by value
  std::optional<ResidualConstraint> residual_;
};

// l-hyperflower with t twins and one core of the given size.
SpectrumPrediction predict_hyperflower_r1(std::size_t l, std::size_t t, std::size_t core_size);
// (l, 2)-hyperflower with t = 1. Fully exact when both cores have equal size.
SpectrumPrediction predict_hyperflower_l2(std::size_t l, std::size_t w1, std::size_t w2);
// Spectrum of the reduced (1, r)-hyperflower plus 1 repeated l-1 times.
SpectrumPrediction predict_hyperflower_by_reduction(const HyperflowerSpec& spec);
SpectrumPrediction predict_complete(std::size_t n, std::size_t c);
SpectrumPrediction predict_lattice(std::size_t l);
SpectrumPrediction predict_hypercycle(std::size_t n, std::size_t l);

}  // namespace hyperspec
