#include "qdc/cli.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdc/bench.hpp"
#include "qdc/constants.hpp"
#include "qdc/experiments.hpp"
#include "qdc/mask.hpp"
#include "qdc/numerics.hpp"
#include "qdc/postselect.hpp"
#include "qdc/qdot.hpp"
#include "qdc/spectral.hpp"

namespace qdc {
namespace {

// Everything a subcommand might need, with defaults.  Values are seeded from
// the --config file (when given) before CLI11 binds the flags, so the
// precedence is flag > config file > built-in default.
struct RunConfig {
  double tau_ns = 0.77;
  double fss_uev = std::numeric_limits<double>::quiet_NaN();
  double omega0 = 2.124e15;           // rad/s, cascade line center
  double pixel_bandwidth = 1e8;       // rad/s per SLM pixel
  double coverage_tol = kDefaultCoverageTol;
  std::string output = "text";        // text | json | csv
  std::string out_path;
  OpticalBench bench{};
};

std::string find_config_path(int argc, const char* const* argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--config" && i + 1 < argc) return argv[i + 1];
    if (a.rfind("--config=", 0) == 0) return a.substr(9);
  }
  return {};
}

// Flat JSON object, same knobs as the flags.  Unknown keys are an error so a
// typo'd config cannot silently fall back to defaults.
void apply_config(const std::string& path, RunConfig& rc) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("--config: cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument("--config: invalid JSON in " + path + ": " + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("--config: expected a flat JSON object");
  try {
    for (const auto& [k, v] : j.items()) {
      if (k == "tau_ns") rc.tau_ns = v.get<double>();
      else if (k == "fss_uev") rc.fss_uev = v.get<double>();
      else if (k == "omega0") rc.omega0 = v.get<double>();
      else if (k == "pixel_bandwidth") rc.pixel_bandwidth = v.get<double>();
      else if (k == "coverage_tol") rc.coverage_tol = v.get<double>();
      else if (k == "output") rc.output = v.get<std::string>();
      else if (k == "out_path") rc.out_path = v.get<std::string>();
      else if (k == "d_um") rc.bench.grating_period = v.get<double>() * 1e-6;
      else if (k == "sin_i") rc.bench.sin_incidence = v.get<double>();
      else if (k == "sep_m") rc.bench.grating_separation = v.get<double>();
      else if (k == "pixel_um") rc.bench.pixel_pitch = v.get<double>() * 1e-6;
      else if (k == "grating_eff") rc.bench.grating_efficiency = v.get<double>();
      else if (k == "slm_eff") rc.bench.slm_efficiency = v.get<double>();
      else throw std::invalid_argument("--config: unknown key \"" + k + "\" in " + path);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("--config: bad value in " + path + ": " + e.what());
  }
}

// Human-readable numbers: fixed point over the mid scales, scientific outside.
std::string fmt3(double v) {
  char buf[64];
  const double a = std::fabs(v);
  if (v != 0.0 && (a < 1e-2 || a >= 1e4)) {
    std::snprintf(buf, sizeof buf, "%.3e", v);
  } else {
    std::snprintf(buf, sizeof buf, "%.3f", v);
  }
  return buf;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Report {
  std::vector<std::pair<std::string, double>> values;
  std::vector<std::pair<std::string, std::string>> notes;  // strings (paths, model text)

  void num(std::string key, double v) { values.emplace_back(std::move(key), v); }
  void note(std::string key, std::string v) { notes.emplace_back(std::move(key), std::move(v)); }
};

// One report per invocation.  In json mode the document below is the only
// thing written to stdout.
void emit(const RunConfig& rc, const Report& r) {
  if (rc.output == "json") {
    nlohmann::ordered_json j;
    for (const auto& [k, v] : r.values) j[k] = v;
    for (const auto& [k, v] : r.notes) j[k] = v;
    std::cout << j.dump(2) << "\n";
  } else if (rc.output == "csv") {
    std::string head, row;
    for (const auto& [k, v] : r.values) {
      head += k + ",";
      row += fmt17(v) + ",";
    }
    for (const auto& [k, v] : r.notes) {
      head += k + ",";
      row += v + ",";
    }
    if (!head.empty()) { head.pop_back(); row.pop_back(); }
    std::cout << head << "\n" << row << "\n";
  } else {
    for (const auto& [k, v] : r.values) std::cout << k << " " << fmt3(v) << "\n";
    for (const auto& [k, v] : r.notes) std::cout << k << " " << v << "\n";
  }
}

QDotParams make_qdot(const RunConfig& rc) {
  if (std::isnan(rc.fss_uev)) {
    throw std::invalid_argument("missing --fss-uev (or fss_uev in --config)");
  }
  QDotParams qd;
  qd.tau = rc.tau_ns * 1e-9;
  qd.fss_uev = rc.fss_uev;
  qd.omega0 = rc.omega0;
  qd.validate();
  return qd;
}

void require_out(const RunConfig& rc) {
  if (rc.out_path.empty()) {
    throw std::invalid_argument("missing --out (or out_path in --config)");
  }
}

int dispatch(int argc, const char* const* argv) {
  RunConfig rc;
  const std::string config_path = find_config_path(argc, argv);
  if (!config_path.empty()) apply_config(config_path, rc);

  CLI::App app{"Spectral simulator for quantum-dot cascade photon pairs"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand name

  std::string config_dummy;
  app.add_option("--config", config_dummy, "JSON config file (flat object, same keys as flags)");
  app.add_option("--tau-ns", rc.tau_ns, "exciton lifetime in ns")->capture_default_str();
  app.add_option("--fss-uev", rc.fss_uev, "fine-structure splitting in ueV");
  app.add_option("--omega0", rc.omega0, "line center in rad/s")->capture_default_str();
  app.add_option("--pixel-bw", rc.pixel_bandwidth, "SLM pixel bandwidth in rad/s")
      ->capture_default_str();
  app.add_option("--coverage", rc.coverage_tol, "mask coverage tolerance")->capture_default_str();
  app.add_option("--output", rc.output, "output format: text, json or csv")->capture_default_str();
  app.add_option("--out", rc.out_path, "output file path");

  // fidelity: two-photon fidelity at one splitting, optionally compensated.
  auto* cmd_fid = app.add_subcommand("fidelity", "fidelity to the Bell state phi+");
  bool fid_compensate = false;
  cmd_fid->add_flag("--compensate", fid_compensate, "apply a pixelated compensation mask");

  // sweep: fidelity vs splitting, written to --out.
  auto* cmd_sweep = app.add_subcommand("sweep", "fidelity versus splitting");
  double fss_min = 0.0, fss_max = 4.0;
  int steps = 81;
  cmd_sweep->add_option("--fss-min", fss_min, "lowest splitting in ueV")->capture_default_str();
  cmd_sweep->add_option("--fss-max", fss_max, "highest splitting in ueV")->capture_default_str();
  cmd_sweep->add_option("--steps", steps, "number of grid points")->capture_default_str();

  // mask: write the pixel table for one splitting to --out.
  auto* cmd_mask = app.add_subcommand("mask", "write the compensation mask as CSV");

  // gate: timing-gate post-selection.
  auto* cmd_gate = app.add_subcommand("gate", "fidelity after a timing gate");
  double width_ps = std::numeric_limits<double>::quiet_NaN();
  cmd_gate->add_option("--width-ps", width_ps, "gate width in ps");

  // band: spectral post-selection, detuning range by default.
  auto* cmd_band = app.add_subcommand("band", "fidelity after spectral post-selection");
  double band_lo = std::numeric_limits<double>::quiet_NaN();
  double band_hi = std::numeric_limits<double>::quiet_NaN();
  bool band_absolute = false, band_compensate = false;
  cmd_band->add_option("--lo", band_lo, "band lower edge in rad/s");
  cmd_band->add_option("--hi", band_hi, "band upper edge in rad/s");
  cmd_band->add_flag("--absolute", band_absolute, "edges are absolute frequencies, not detunings");
  cmd_band->add_flag("--compensate", band_compensate, "apply a pixelated compensation mask");

  // bench: 4f pulse-shaper geometry numbers.
  auto* cmd_bench = app.add_subcommand("bench", "grating/SLM geometry estimates");
  double d_um = rc.bench.grating_period * 1e6;
  double sin_i = rc.bench.sin_incidence;
  double sep_m = rc.bench.grating_separation;
  double pixel_um = rc.bench.pixel_pitch * 1e6;
  double grating_eff = rc.bench.grating_efficiency;
  double slm_eff = rc.bench.slm_efficiency;
  double lambda_um = std::numeric_limits<double>::quiet_NaN();
  cmd_bench->add_option("--d-um", d_um, "grating period in um")->capture_default_str();
  cmd_bench->add_option("--sin-i", sin_i, "sine of the incidence angle")->capture_default_str();
  cmd_bench->add_option("--sep-m", sep_m, "grating-to-SLM separation in m")->capture_default_str();
  cmd_bench->add_option("--pixel-um", pixel_um, "SLM pixel pitch in um")->capture_default_str();
  cmd_bench->add_option("--grating-eff", grating_eff, "single-pass grating efficiency")
      ->capture_default_str();
  cmd_bench->add_option("--slm-eff", slm_eff, "SLM transmission")->capture_default_str();
  cmd_bench->add_option("--lambda-um", lambda_um, "design wavelength in um (default: 2 pi c / omega0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    // CLI11 returns 0 for --help/--version; map real parse errors to 2.
    return code == 0 ? 0 : 2;
  }

  if (rc.output != "text" && rc.output != "json" && rc.output != "csv") {
    throw std::invalid_argument("--output must be text, json or csv (got \"" + rc.output + "\")");
  }

  if (cmd_fid->parsed()) {
    const QDotParams qd = make_qdot(rc);
    std::optional<PhaseMask> mask;
    if (fid_compensate) mask = build_mask(qd, rc.pixel_bandwidth, rc.coverage_tol);
    const std::complex<double> a = overlap_alpha(qd, mask ? &*mask : nullptr);
    Report r;
    r.num("fidelity", fidelity(a));
    r.num("re_alpha", a.real());
    r.num("im_alpha", a.imag());
    r.num("abs_alpha", std::abs(a));
    emit(rc, r);
    return 0;
  }

  if (cmd_sweep->parsed()) {
    require_out(rc);
    SweepSpec spec;
    spec.fss_min_uev = fss_min;
    spec.fss_max_uev = fss_max;
    spec.steps = steps;
    spec.tau = rc.tau_ns * 1e-9;
    spec.pixel_bandwidth = rc.pixel_bandwidth;
    spec.coverage_tol = rc.coverage_tol;
    const std::vector<ResultRow> rows = sweep_fss(spec);
    if (rc.output == "json") write_json(rows, rc.out_path);
    else write_csv(rows, rc.out_path);
    Report r;
    r.num("rows", static_cast<double>(rows.size()));
    r.note("path", rc.out_path);
    emit(rc, r);
    return 0;
  }

  if (cmd_mask->parsed()) {
    require_out(rc);
    const QDotParams qd = make_qdot(rc);
    const PhaseMask mask = build_mask(qd, rc.pixel_bandwidth, rc.coverage_tol);
    write_mask_csv(mask, rc.out_path);
    Report r;
    r.num("pixels", static_cast<double>(mask.phases.size()));
    r.num("omega_lo_rad_s", mask.boundaries.front());
    r.num("omega_hi_rad_s", mask.boundaries.back());
    r.num("pixel_bandwidth_rad_s", rc.pixel_bandwidth);
    r.note("path", rc.out_path);
    emit(rc, r);
    return 0;
  }

  if (cmd_gate->parsed()) {
    if (std::isnan(width_ps)) throw std::invalid_argument("missing --width-ps");
    const QDotParams qd = make_qdot(rc);
    const TimingGate gate{width_ps * 1e-12};
    const std::complex<double> a = gate_alpha(qd, gate);
    Report r;
    r.num("efficiency", gate_efficiency(qd, gate));
    r.num("fidelity", fidelity(a));
    emit(rc, r);
    return 0;
  }

  if (cmd_band->parsed()) {
    if (std::isnan(band_lo) || std::isnan(band_hi)) {
      throw std::invalid_argument("missing --lo/--hi band edges");
    }
    const QDotParams qd = make_qdot(rc);
    FrequencyBand band{band_lo, band_hi};
    if (band_absolute) {
      band.lo -= rc.omega0;
      band.hi -= rc.omega0;
    }
    std::optional<PhaseMask> mask;
    if (band_compensate) mask = build_mask(qd, rc.pixel_bandwidth, rc.coverage_tol);
    Report r;
    r.num("efficiency", band_norm(qd, band));
    r.num("fidelity", band_fidelity(qd, band, mask ? &*mask : nullptr));
    emit(rc, r);
    return 0;
  }

  if (cmd_bench->parsed()) {
    OpticalBench bench;
    bench.grating_period = d_um * 1e-6;
    bench.sin_incidence = sin_i;
    bench.grating_separation = sep_m;
    bench.pixel_pitch = pixel_um * 1e-6;
    bench.grating_efficiency = grating_eff;
    bench.slm_efficiency = slm_eff;
    bench.validate();
    const double lambda =
        std::isnan(lambda_um) ? 2.0 * M_PI * consts::c / rc.omega0 : lambda_um * 1e-6;
    const double omega_abs = 2.0 * M_PI * consts::c / lambda;
    Report r;
    r.num("lambda_m", lambda);
    r.num("sin_theta", grating_angle(lambda, bench));
    r.num("slm_position_m", slm_position(omega_abs, bench));
    r.num("dispersion_m_per_rad_s", dispersion_at_slm(omega_abs, bench));
    r.num("pixel_bandwidth_rad_s", pixel_bandwidth_from_bench(bench, omega_abs));
    r.num("diffraction_loss", diffraction_loss(lambda, bench.pixel_pitch));
    r.num("throughput", bench_throughput(bench));
    r.note("model", "first-order grating, SLM in the focal plane at x = L tan(theta); "
                    "pixel bandwidth = pitch / |dx/domega|");
    emit(rc, r);
    return 0;
  }

  throw std::invalid_argument("no subcommand given");
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  try {
    return dispatch(argc, argv);
  } catch (const NonConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qdc
