#include "qdc/mask.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qdc/spectral.hpp"

namespace qdc {
namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

}  // namespace

double wrap_phase(double phase) {
  double w = std::remainder(phase, 2.0 * kPi);
  if (w <= -kPi) w += 2.0 * kPi;
  return w == 0.0 ? 0.0 : w;  // canonicalize -0.0 so equal-phase tests stay bitwise
}

void PhaseMask::validate() const {
  if (boundaries.size() < 2 || phases.size() + 1 != boundaries.size())
    throw std::invalid_argument(
        "phase mask needs n+1 boundaries for n >= 1 pixels");
  for (std::size_t i = 0; i < boundaries.size(); ++i) {
    if (!std::isfinite(boundaries[i]))
      throw std::invalid_argument("phase mask boundaries must be finite");
    if (i > 0 && !(boundaries[i - 1] < boundaries[i]))
      throw std::invalid_argument("phase mask boundaries must be strictly increasing");
  }
  for (double p : phases)
    if (!std::isfinite(p) || p <= -kPi - 1e-12 || p > kPi + 1e-12)
      throw std::invalid_argument("phase mask phases must be finite and wrapped to (-pi, pi]");
  if (!std::isfinite(global_offset))
    throw std::invalid_argument("phase mask global_offset must be finite");
}

double PhaseMask::pixel_phase(double omega) const {
  if (omega < boundaries.front())
    return outside == Outside::kExtendEdge ? phases.front() : 0.0;
  if (omega >= boundaries.back())
    return outside == Outside::kExtendEdge ? phases.back() : 0.0;
  const auto it = std::upper_bound(boundaries.begin(), boundaries.end(), omega);
  return phases[static_cast<std::size_t>(it - boundaries.begin()) - 1];
}

PhaseMask build_mask(const QDotParams& qd, double pixel_bandwidth,
                     double coverage_tol, std::size_t max_pixels) {
  qd.validate();
  if (!(pixel_bandwidth > 0) || !std::isfinite(pixel_bandwidth))
    throw std::invalid_argument("build_mask: pixel_bandwidth must be positive and finite");
  if (!(coverage_tol > 0) || !(coverage_tol < 1))
    throw std::invalid_argument("build_mask: coverage_tol must lie in (0, 1)");
  if (max_pixels < 1) throw std::invalid_argument("build_mask: max_pixels must be >= 1");

  // The overlap integrand integral f_H f_V domega has mass (1/pi) g(u) du with
  // 1/u^2 tails, so the mass outside +-R (in Gamma units) is ~ 2/(pi R) per
  // side pair.  Tile [-R, Delta + R] with R = 2 Gamma / (pi coverage_tol) on a
  // zero-anchored grid (edges at integer multiples of the pixel width).
  const double gamma = qd.half_width();
  const double reach = 2.0 * gamma / (kPi * coverage_tol);
  const double lo = -reach;
  const double hi = qd.splitting() + reach;

  const double k_lo = std::floor(lo / pixel_bandwidth);
  const double k_hi = std::ceil(hi / pixel_bandwidth);
  const double count_f = k_hi - k_lo;
  if (!(count_f >= 1) || count_f > static_cast<double>(max_pixels)) {
    std::ostringstream msg;
    msg << "build_mask: tiling to coverage_tol = " << coverage_tol
        << " at pixel bandwidth " << pixel_bandwidth << " rad/s requires "
        << static_cast<long long>(count_f) << " pixels, above the cap of "
        << max_pixels;
    throw std::invalid_argument(msg.str());
  }
  const std::size_t count = static_cast<std::size_t>(count_f);

  PhaseMask mask;
  mask.boundaries.resize(count + 1);
  mask.phases.resize(count);
  for (std::size_t i = 0; i <= count; ++i)
    mask.boundaries[i] = (k_lo + static_cast<double>(i)) * pixel_bandwidth;
  for (std::size_t i = 0; i < count; ++i) {
    const double centre = (k_lo + static_cast<double>(i) + 0.5) * pixel_bandwidth;
    mask.phases[i] = wrap_phase(phase_diff(centre, qd));
  }
  return mask;
}

double compensated_fidelity(const QDotParams& qd, const PhaseMask& mask,
                            const QuadratureSpec& spec) {
  return fidelity(overlap_alpha(qd, &mask, nullptr, spec));
}

void write_mask_csv(const PhaseMask& mask, const std::string& path) {
  mask.validate();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "pixel_index,omega_lo_rad_s,omega_hi_rad_s,phase_rad\n";
  char buf[3 * 32 + 32];
  for (std::size_t i = 0; i < mask.phases.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g\n", i,
                  mask.boundaries[i], mask.boundaries[i + 1], mask.phases[i]);
    out << buf;
  }
  if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

PhaseMask read_mask_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::string line;
  if (!std::getline(in, line) ||
      line != "pixel_index,omega_lo_rad_s,omega_hi_rad_s,phase_rad")
    throw std::runtime_error("bad mask CSV header in " + path);

  PhaseMask mask;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::size_t idx;
    double lo, hi, phase;
    if (std::sscanf(line.c_str(), "%zu,%lg,%lg,%lg", &idx, &lo, &hi, &phase) != 4)
      throw std::runtime_error("bad mask CSV row in " + path + ": " + line);
    if (first) {
      mask.boundaries.push_back(lo);
      first = false;
    } else if (lo != mask.boundaries.back()) {
      throw std::runtime_error("non-contiguous pixels in mask CSV " + path);
    }
    mask.boundaries.push_back(hi);
    mask.phases.push_back(phase);
  }
  mask.validate();
  return mask;
}

}  // namespace qdc
