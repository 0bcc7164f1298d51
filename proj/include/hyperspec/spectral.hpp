// Spectra of (signless) normalized Laplacians.
//
// L = I - D^-1 A is not symmetric, but it is similar to
//
//   S = D^1/2 L D^-1/2 = I - D^-1/2 A D^-1/2,
//
// which is. Eigenvalues are taken from S with a symmetric eigensolver, and
// eigenvectors y of S map back to eigenfunctions f = D^-1/2 y of L.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

inline constexpr double kDefaultClusterTolerance = 1e-6;

// Ascending eigenvalues. Values are kept raw; tiny negative round-off is
// not clamped here.
class RealSpectrum {
 public:
  RealSpectrum() = default;
  // Sorts the values.
  explicit RealSpectrum(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double min() const { return values_.front(); }
  double max() const { return values_.back(); }
  double sum() const noexcept;

 private:
  std::vector<double> values_;
};

struct Cluster {
  double value = 0.0;
  std::size_t multiplicity = 0;
};

using MultiplicityList = std::vector<Cluster>;

struct EigenPair {
  double value = 0.0;
  Eigen::VectorXd vector;  // unit-norm eigenfunction of L
};

// Throws InvalidArgument for non-positive degrees, size mismatches,
// non-finite entries, or an L that is not similar to a symmetric matrix
// through these degrees.
RealSpectrum spectrum(const LaplacianMatrix& l, std::span<const Count> degrees);

// Full decomposition, ascending by value.
std::vector<EigenPair> eigenpairs(const LaplacianMatrix& l, std::span<const Count> degrees);

// Shorthands for the normalized and signless spectra of a hypergraph.
RealSpectrum spectrum(const OrientedHypergraph& g);
RealSpectrum signless_spectrum(const OrientedHypergraph& g);

// Consecutive values join a cluster iff they differ by at most tol; the
// cluster value is the mean of its members.
MultiplicityList cluster_multiplicities(const RealSpectrum& s,
                                        double tol = kDefaultClusterTolerance);

// Number of eigenvalues within tol of `value`.
std::size_t multiplicity_of(const RealSpectrum& s, double value, double tol);

// Eigenvalues 1 + (sum_{r=1..n} m(r) cos(2 pi i r / n)) / l for i = 1..n of
// I + C/l, with C the symmetric circulant matrix built from m. `m` has length
// n and m[r] holds m(r) for r in 1..n-1; m[0] stands for m(0) = m(n).
// Throws InvalidArgument unless n >= 2, l >= 1 and m[r] == m[n - r].
RealSpectrum circulant_eigenvalues(std::span<const Count> m, std::size_t n, Count l);

}  // namespace hyperspec
