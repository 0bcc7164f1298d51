// Predicted-versus-computed spectrum comparison.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperspec/families.hpp"
#include "hyperspec/spectral.hpp"

namespace hyperspec {

inline constexpr double kDefaultConformanceTolerance = 1e-8;

struct EntryCheck {
  PredictedEigenvalue predicted;
  std::size_t found = 0;   // computed eigenvalues attributed to this entry
  double max_error = 0.0;  // largest |computed - predicted| among them
  bool ok = false;
};

struct ResidualCheck {
  ResidualConstraint predicted;
  std::vector<double> values;  // the residual eigenvalues, ascending
  double sum = 0.0;
  bool ok = false;
};

struct ConformanceReport {
  std::string title;
  SpectrumPrediction prediction;
  MultiplicityList computed;
  std::vector<EntryCheck> entries;
  std::optional<ResidualCheck> residual;
  bool size_ok = false;
  bool unaccounted_ok = false;  // every computed eigenvalue was attributed
  bool pass = false;
};

// A fully exact prediction is compared as a sorted multiset, position by
// position, at `tol`. Otherwise the residual (largest eigenvalues) is split
// off first and each entry claims the eigenvalues within `cluster_tol` of its
// value: exact entries need exactly their multiplicity, at-least entries at
// least theirs, every claimed value must lie within `tol`, and nothing may be
// left unclaimed.
ConformanceReport check_conformance(std::string title, const SpectrumPrediction& prediction,
                                    const RealSpectrum& computed,
                                    double tol = kDefaultConformanceTolerance,
                                    double cluster_tol = kDefaultClusterTolerance);

std::string format_report(const ConformanceReport& report);

}  // namespace hyperspec
