#pragma once

#include <string>
#include <vector>

#include "qdc/mask.hpp"
#include "qdc/numerics.hpp"
#include "qdc/qdot.hpp"

namespace qdc {

// FSS sweep regenerating the three fidelity-vs-splitting curves
// (uncompensated / pixel-mask compensated / ideal compensation).
struct SweepSpec {
  double fss_min_uev = 0.0;
  double fss_max_uev = 4.0;
  int steps = 81;
  double tau = 0.77e-9;            // s
  double pixel_bandwidth = 1e8;    // rad/s
  double coverage_tol = kDefaultCoverageTol;
  QuadratureSpec quad{};

  void validate() const;
};

struct ResultRow {
  double fss_uev = 0.0;
  double fidelity_uncompensated = 0.0;
  double fidelity_compensated = 0.0;
  double fidelity_ideal = 0.0;

  friend bool operator==(const ResultRow& a, const ResultRow& b) {
    return a.fss_uev == b.fss_uev &&
           a.fidelity_uncompensated == b.fidelity_uncompensated &&
           a.fidelity_compensated == b.fidelity_compensated &&
           a.fidelity_ideal == b.fidelity_ideal;
  }
};

struct ConvergenceRow {
  double pixel_bandwidth_rad_s = 0.0;
  double fidelity = 0.0;
  double gap_to_ideal = 0.0;
};

struct GateTradeoffRow {
  double gate_width_s = 0.0;
  double efficiency = 0.0;
  double fidelity = 0.0;
};

// Rows at uniformly spaced splittings, S ascending; each row evaluated with
// the same quadrature settings, deterministically, and aborting with the
// offending S on any numerical failure.
std::vector<ResultRow> sweep_fss(const SweepSpec& spec);

// Compensated fidelity across a decreasing sequence of pixel bandwidths plus
// the gap to the ideal-compensation bound; pixel quantization error shrinks
// as O(pixel_bandwidth^2) so the gap column is non-increasing.
std::vector<ConvergenceRow> convergence_study(
    const QDotParams& qd, const std::vector<double>& bandwidths,
    double coverage_tol = kDefaultCoverageTol, const QuadratureSpec& quad = {});

// Efficiency/fidelity trade-off of the timing gate across a set of widths.
std::vector<GateTradeoffRow> gate_tradeoff(const QDotParams& qd,
                                           const std::vector<double>& widths_s);

// CSV: header row with units-suffixed column names, LF endings,
// 17-significant-digit values (lossless); JSON: array of objects with the
// same field names.  Both byte-deterministic for identical inputs.
void write_csv(const std::vector<ResultRow>& rows, const std::string& path);
void write_json(const std::vector<ResultRow>& rows, const std::string& path);
void write_csv(const std::vector<ConvergenceRow>& rows, const std::string& path);
void write_json(const std::vector<ConvergenceRow>& rows, const std::string& path);
void write_csv(const std::vector<GateTradeoffRow>& rows, const std::string& path);
void write_json(const std::vector<GateTradeoffRow>& rows, const std::string& path);

std::vector<ResultRow> read_result_csv(const std::string& path);

}  // namespace qdc
