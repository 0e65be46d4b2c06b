#include "qdc/experiments.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qdc/postselect.hpp"
#include "qdc/spectral.hpp"

namespace qdc {
namespace {

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

void write_json_doc(const nlohmann::ordered_json& doc, const std::string& path) {
  auto out = open_out(path);
  out << doc.dump(2) << '\n';
  finish(out, path);
}

}  // namespace

void SweepSpec::validate() const {
  if (!(fss_min_uev >= 0)) throw std::invalid_argument("sweep: fss_min_uev must be >= 0");
  if (!(fss_max_uev > fss_min_uev))
    throw std::invalid_argument("sweep: fss_max_uev must exceed fss_min_uev");
  if (steps < 2) throw std::invalid_argument("sweep: steps must be >= 2");
  if (!(tau > 0)) throw std::invalid_argument("sweep: tau must be > 0");
  if (!(pixel_bandwidth > 0))
    throw std::invalid_argument("sweep: pixel_bandwidth must be > 0");
}

std::vector<ResultRow> sweep_fss(const SweepSpec& spec) {
  spec.validate();
  std::vector<ResultRow> rows;
  rows.reserve(static_cast<std::size_t>(spec.steps));
  const double span = spec.fss_max_uev - spec.fss_min_uev;
  for (int i = 0; i < spec.steps; ++i) {
    const double s =
        spec.fss_min_uev + span * static_cast<double>(i) / (spec.steps - 1);
    QDotParams qd;
    qd.tau = spec.tau;
    qd.fss_uev = s;
    try {
      ResultRow row;
      row.fss_uev = s;
      row.fidelity_uncompensated =
          fidelity(overlap_alpha(qd, nullptr, nullptr, spec.quad));
      const PhaseMask mask =
          build_mask(qd, spec.pixel_bandwidth, spec.coverage_tol);
      row.fidelity_compensated = compensated_fidelity(qd, mask, spec.quad);
      row.fidelity_ideal = 0.5 * (1.0 + ideal_overlap(qd, spec.quad));
      rows.push_back(row);
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg << "sweep failed at S = " << s << " ueV: " << e.what();
      throw std::runtime_error(msg.str());
    }
  }
  return rows;
}

std::vector<ConvergenceRow> convergence_study(const QDotParams& qd,
                                              const std::vector<double>& bandwidths,
                                              double coverage_tol,
                                              const QuadratureSpec& quad) {
  qd.validate();
  if (bandwidths.empty())
    throw std::invalid_argument("convergence_study: need at least one bandwidth");
  for (std::size_t i = 1; i < bandwidths.size(); ++i)
    if (!(bandwidths[i] < bandwidths[i - 1]))
      throw std::invalid_argument("convergence_study: bandwidths must be strictly decreasing");

  const double f_ideal = 0.5 * (1.0 + ideal_overlap(qd, quad));
  std::vector<ConvergenceRow> rows;
  rows.reserve(bandwidths.size());
  for (double bw : bandwidths) {
    ConvergenceRow row;
    row.pixel_bandwidth_rad_s = bw;
    row.fidelity = compensated_fidelity(qd, build_mask(qd, bw, coverage_tol), quad);
    row.gap_to_ideal = f_ideal - row.fidelity;
    rows.push_back(row);
  }
  return rows;
}

std::vector<GateTradeoffRow> gate_tradeoff(const QDotParams& qd,
                                           const std::vector<double>& widths_s) {
  qd.validate();
  std::vector<GateTradeoffRow> rows;
  rows.reserve(widths_s.size());
  for (double w : widths_s) {
    const TimingGate gate{w};
    GateTradeoffRow row;
    row.gate_width_s = w;
    row.efficiency = gate_efficiency(qd, gate);
    row.fidelity = fidelity(gate_alpha(qd, gate));
    rows.push_back(row);
  }
  return rows;
}

void write_csv(const std::vector<ResultRow>& rows, const std::string& path) {
  auto out = open_out(path);
  out << "fss_uev,fidelity_uncompensated,fidelity_compensated,fidelity_ideal\n";
  for (const auto& r : rows)
    out << fmt17(r.fss_uev) << ',' << fmt17(r.fidelity_uncompensated) << ','
        << fmt17(r.fidelity_compensated) << ',' << fmt17(r.fidelity_ideal)
        << '\n';
  finish(out, path);
}

void write_json(const std::vector<ResultRow>& rows, const std::string& path) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : rows)
    doc.push_back({{"fss_uev", r.fss_uev},
                   {"fidelity_uncompensated", r.fidelity_uncompensated},
                   {"fidelity_compensated", r.fidelity_compensated},
                   {"fidelity_ideal", r.fidelity_ideal}});
  write_json_doc(doc, path);
}

void write_csv(const std::vector<ConvergenceRow>& rows, const std::string& path) {
  auto out = open_out(path);
  out << "pixel_bandwidth_rad_s,fidelity,gap_to_ideal\n";
  for (const auto& r : rows)
    out << fmt17(r.pixel_bandwidth_rad_s) << ',' << fmt17(r.fidelity) << ','
        << fmt17(r.gap_to_ideal) << '\n';
  finish(out, path);
}

void write_json(const std::vector<ConvergenceRow>& rows, const std::string& path) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : rows)
    doc.push_back({{"pixel_bandwidth_rad_s", r.pixel_bandwidth_rad_s},
                   {"fidelity", r.fidelity},
                   {"gap_to_ideal", r.gap_to_ideal}});
  write_json_doc(doc, path);
}

void write_csv(const std::vector<GateTradeoffRow>& rows, const std::string& path) {
  auto out = open_out(path);
  out << "gate_width_s,efficiency,fidelity\n";
  for (const auto& r : rows)
    out << fmt17(r.gate_width_s) << ',' << fmt17(r.efficiency) << ','
        << fmt17(r.fidelity) << '\n';
  finish(out, path);
}

void write_json(const std::vector<GateTradeoffRow>& rows, const std::string& path) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : rows)
    doc.push_back({{"gate_width_s", r.gate_width_s},
                   {"efficiency", r.efficiency},
                   {"fidelity", r.fidelity}});
  write_json_doc(doc, path);
}

std::vector<ResultRow> read_result_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::string line;
  if (!std::getline(in, line) ||
      line != "fss_uev,fidelity_uncompensated,fidelity_compensated,fidelity_ideal")
    throw std::runtime_error("bad sweep CSV header in " + path);
  std::vector<ResultRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ResultRow r;
    if (std::sscanf(line.c_str(), "%lg,%lg,%lg,%lg", &r.fss_uev,
                    &r.fidelity_uncompensated, &r.fidelity_compensated,
                    &r.fidelity_ideal) != 4)
      throw std::runtime_error("bad sweep CSV row in " + path + ": " + line);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace qdc
