#include "hyperspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "hyperspec/errors.hpp"

namespace hyperspec {

namespace {

constexpr double kSymmetryTolerance = 1e-9;

// S = D^1/2 L D^-1/2, checked for symmetry and then exactly symmetrized.
Eigen::MatrixXd symmetric_conjugate(const LaplacianMatrix& l, std::span<const Count> degrees) {
  const auto n = l.values.rows();
  if (l.values.cols() != n) throw InvalidArgument("Laplacian is not square");
  if (static_cast<std::size_t>(n) != degrees.size()) {
    throw InvalidArgument("Laplacian order " + std::to_string(n) + " does not match " +
                          std::to_string(degrees.size()) + " degrees");
  }
  if (n == 0) throw InvalidArgument("empty Laplacian");
  if (!l.values.allFinite()) throw InvalidArgument("Laplacian has non-finite entries");

  Eigen::VectorXd sqrt_deg(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (degrees[i] <= 0) {
      throw InvalidArgument("vertex " + std::to_string(i) + " has non-positive degree");
    }
    sqrt_deg(i) = std::sqrt(static_cast<double>(degrees[i]));
  }
  Eigen::MatrixXd s = sqrt_deg.asDiagonal() * l.values * sqrt_deg.cwiseInverse().asDiagonal();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double scale = std::max({1.0, std::abs(s(i, j)), std::abs(s(j, i))});
      if (std::abs(s(i, j) - s(j, i)) > kSymmetryTolerance * scale) {
        throw InvalidArgument("Laplacian is inconsistent with the given degrees");
      }
    }
  }
  return 0.5 * (s + s.transpose());
}

}  // namespace

RealSpectrum::RealSpectrum(std::vector<double> values) : values_(std::move(values)) {
  std::ranges::sort(values_);
}

double RealSpectrum::sum() const noexcept {
  return std::accumulate(values_.begin(), values_.end(), 0.0);
}

RealSpectrum spectrum(const LaplacianMatrix& l, std::span<const Count> degrees) {
  const Eigen::MatrixXd s = symmetric_conjugate(l, degrees);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw InvalidArgument("eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  return RealSpectrum(std::vector<double>(ev.begin(), ev.end()));
}

std::vector<EigenPair> eigenpairs(const LaplacianMatrix& l, std::span<const Count> degrees) {
  const Eigen::MatrixXd s = symmetric_conjugate(l, degrees);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw InvalidArgument("eigensolver did not converge");

  Eigen::VectorXd inv_sqrt_deg(s.rows());
  for (Eigen::Index i = 0; i < s.rows(); ++i) {
    inv_sqrt_deg(i) = 1.0 / std::sqrt(static_cast<double>(degrees[i]));
  }
  std::vector<EigenPair> pairs;
  pairs.reserve(static_cast<std::size_t>(s.rows()));
  for (Eigen::Index k = 0; k < s.rows(); ++k) {
    Eigen::VectorXd f = inv_sqrt_deg.cwiseProduct(solver.eigenvectors().col(k));
    f.normalize();
    pairs.push_back({solver.eigenvalues()(k), std::move(f)});
  }
  return pairs;
}

RealSpectrum spectrum(const OrientedHypergraph& g) {
  return spectrum(normalized_laplacian(g), g.degrees());
}

RealSpectrum signless_spectrum(const OrientedHypergraph& g) {
  // Degrees are unchanged by merging sides.
  return spectrum(signless_normalized_laplacian(g), g.degrees());
}

MultiplicityList cluster_multiplicities(const RealSpectrum& s, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("clustering tolerance must be positive");
  MultiplicityList clusters;
  const auto v = s.values();
  std::size_t begin = 0;
  for (std::size_t i = 1; i <= v.size(); ++i) {
    if (i == v.size() || v[i] - v[i - 1] > tol) {
      const double mean = std::accumulate(v.begin() + begin, v.begin() + i, 0.0) /
                          static_cast<double>(i - begin);
      clusters.push_back({mean, i - begin});
      begin = i;
    }
  }
  return clusters;
}

std::size_t multiplicity_of(const RealSpectrum& s, double value, double tol) {
  return static_cast<std::size_t>(
      std::ranges::count_if(s.values(), [&](double x) { return std::abs(x - value) <= tol; }));
}

RealSpectrum circulant_eigenvalues(std::span<const Count> m, std::size_t n, Count l) {
  if (n < 2) throw InvalidArgument("circulant order must be at least 2");
  if (l < 1) throw InvalidArgument("circulant scale l must be at least 1");
  if (m.size() != n) {
    throw InvalidArgument("circulant weights must have length " + std::to_string(n));
  }
  for (std::size_t r = 1; r < n; ++r) {
    if (m[r] != m[n - r]) {
      throw InvalidArgument("circulant weights are not symmetric at r = " + std::to_string(r));
    }
  }
  std::vector<double> values;
  values.reserve(n);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t i = 1; i <= n; ++i) {
    double acc = 0.0;
    for (std::size_t r = 1; r <= n; ++r) {
      const Count w = m[r % n];
      if (w == 0) continue;
      // Reduce i*r mod n before scaling so the cosine argument stays small.
      acc += static_cast<double>(w) * std::cos(step * static_cast<double>((i * r) % n));
    }
    values.push_back(1.0 + acc / static_cast<double>(l));
  }
  return RealSpectrum(std::move(values));
}

}  // namespace hyperspec
