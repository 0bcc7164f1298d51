#include "hyperspec/conformance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hyperspec/io.hpp"

namespace hyperspec {

namespace {

const char* mode_name(Mode m) { return m == Mode::exact ? "exact" : "at-least"; }

}  // namespace

ConformanceReport check_conformance(std::string title, const SpectrumPrediction& prediction,
                                    const RealSpectrum& computed, double tol, double cluster_tol) {
  ConformanceReport report{std::move(title), prediction, {}, {}, {}, false, false, false};
  report.computed = cluster_multiplicities(computed, cluster_tol);
  report.size_ok = computed.size() == prediction.order();
  if (!report.size_ok) return report;

  std::vector<double> rest(computed.values().begin(), computed.values().end());

  if (const auto& residual = prediction.residual()) {
    ResidualCheck rc{*residual, {}, 0.0, false};
    const std::size_t k = std::min(residual->count, rest.size());
    rc.values.assign(rest.end() - static_cast<std::ptrdiff_t>(k), rest.end());
    rest.resize(rest.size() - k);
    rc.sum = std::accumulate(rc.values.begin(), rc.values.end(), 0.0);
    rc.ok = k == residual->count && std::abs(rc.sum - residual->sum) <= tol &&
            (!residual->largest_exceeds || (!rc.values.empty() &&
                                            rc.values.back() > *residual->largest_exceeds));
    report.residual = std::move(rc);
  }

  if (prediction.fully_exact()) {
    std::size_t pos = 0;
    for (const auto& e : prediction.entries()) {
      EntryCheck c{e, e.multiplicity, 0.0, true};
      for (std::size_t k = pos; k < pos + e.multiplicity; ++k) {
        c.max_error = std::max(c.max_error, std::abs(rest[k] - e.value));
      }
      c.ok = c.max_error <= tol;
      pos += e.multiplicity;
      report.entries.push_back(c);
    }
    report.unaccounted_ok = true;
  } else {
    std::vector<bool> claimed(rest.size(), false);
    for (const auto& e : prediction.entries()) {
      EntryCheck c{e, 0, 0.0, false};
      for (std::size_t k = 0; k < rest.size(); ++k) {
        const double err = std::abs(rest[k] - e.value);
        if (!claimed[k] && err <= cluster_tol) {
          claimed[k] = true;
          ++c.found;
          c.max_error = std::max(c.max_error, err);
        }
      }
      const bool count_ok =
          e.mode == Mode::exact ? c.found == e.multiplicity : c.found >= e.multiplicity;
      c.ok = count_ok && c.max_error <= tol;
      report.entries.push_back(c);
    }
    report.unaccounted_ok = std::ranges::all_of(claimed, [](bool b) { return b; });
  }

  report.pass = report.size_ok && report.unaccounted_ok &&
                std::ranges::all_of(report.entries, [](const auto& c) { return c.ok; }) &&
                (!report.residual || report.residual->ok);
  return report;
}

std::string format_report(const ConformanceReport& report) {
  std::string out = "family: " + report.title + "\n";
  out += "order: " + std::to_string(report.prediction.order()) + "\n";
  out += "predicted:\n";
  for (const auto& e : report.prediction.entries()) {
    out += "  " + format_number(report_value(e.value)) + " " + std::to_string(e.multiplicity) + " " +
           mode_name(e.mode) + "\n";
  }
  if (const auto& r = report.prediction.residual()) {
    out += "  residual: largest " + std::to_string(r->count) + " sum to " + format_number(r->sum);
    if (r->largest_exceeds) out += ", largest > " + format_number(*r->largest_exceeds);
    out += "\n";
  }
  out += "computed:\n";
  for (const auto& c : report.computed) {
    out += "  " + format_number(report_value(c.value)) + " " + std::to_string(c.multiplicity) +
           "\n";
  }
  if (!report.size_ok) {
    out += "error: computed spectrum has the wrong size\n";
  } else {
    out += "checks:\n";
    for (const auto& c : report.entries) {
      out += "  " + format_number(report_value(c.predicted.value)) + " " + mode_name(c.predicted.mode) + " " +
             std::to_string(c.predicted.multiplicity) + ": found " + std::to_string(c.found) +
             ", max error " + format_number(c.max_error) + (c.ok ? " ok" : " FAIL") + "\n";
    }
    if (const auto& r = report.residual) {
      out += "  residual:";
      for (double v : r->values) out += " " + format_number(report_value(v));
      out += ", sum " + format_number(r->sum) + " vs " + format_number(r->predicted.sum) +
             (r->ok ? " ok" : " FAIL") + "\n";
    }
    if (!report.unaccounted_ok) out += "  unattributed computed eigenvalues FAIL\n";
  }
  out += std::string("verdict: ") + (report.pass ? "pass" : "fail") + "\n";
  return out;
}

}  // namespace hyperspec
