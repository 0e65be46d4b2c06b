#include "qdc/bench.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qdc/constants.hpp"

namespace qdc {
namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

void OpticalBench::validate() const {
  if (!(grating_period > 0))
    throw std::invalid_argument("bench: grating period must be > 0");
  if (!(std::fabs(sin_incidence) < 1))
    throw std::invalid_argument("bench: |sin i| must be < 1");
  if (!(grating_separation > 0))
    throw std::invalid_argument("bench: grating separation must be > 0");
  if (!(pixel_pitch > 0))
    throw std::invalid_argument("bench: pixel pitch must be > 0");
  if (!(grating_efficiency > 0 && grating_efficiency <= 1))
    throw std::invalid_argument("bench: grating efficiency must lie in (0, 1]");
  if (!(slm_efficiency > 0 && slm_efficiency <= 1))
    throw std::invalid_argument("bench: SLM efficiency must lie in (0, 1]");
}

double grating_angle(double wavelength, const OpticalBench& bench) {
  bench.validate();
  if (!(wavelength > 0))
    throw std::invalid_argument("grating_angle: wavelength must be > 0");
  const double sin_theta = bench.sin_incidence + wavelength / bench.grating_period;
  if (std::fabs(sin_theta) >= 1.0) {
    std::ostringstream msg;
    msg << "evanescent order: |sin theta| = " << std::fabs(sin_theta)
        << " >= 1 at wavelength " << wavelength << " m";
    throw std::invalid_argument(msg.str());
  }
  return sin_theta;
}

double slm_position(double omega_abs, const OpticalBench& bench) {
  if (!(omega_abs > 0))
    throw std::invalid_argument("slm_position: omega must be > 0");
  const double lambda = 2.0 * kPi * consts::c / omega_abs;
  const double s = grating_angle(lambda, bench);
  return bench.grating_separation * s / std::sqrt(1.0 - s * s);
}

double dispersion_at_slm(double omega_abs, const OpticalBench& bench) {
  if (!(omega_abs > 0))
    throw std::invalid_argument("dispersion_at_slm: omega must be > 0");
  const double lambda = 2.0 * kPi * consts::c / omega_abs;
  const double s = grating_angle(lambda, bench);
  const double cos_theta = std::sqrt(1.0 - s * s);
  // x = L tan(theta): dx/ds = L/cos^3, ds/dlambda = 1/d,
  // dlambda/domega = -lambda^2/(2 pi c); magnitude reported.
  return bench.grating_separation * lambda * lambda /
         (2.0 * kPi * consts::c * bench.grating_period * cos_theta * cos_theta *
          cos_theta);
}

double pixel_bandwidth_from_bench(const OpticalBench& bench, double omega_abs) {
  const double disp = dispersion_at_slm(omega_abs, bench);
  if (!(disp > 0))
    throw std::invalid_argument("pixel_bandwidth_from_bench: dispersion vanished");
  return bench.pixel_pitch / disp;
}

double diffraction_loss(double wavelength, double pixel_pitch) {
  if (!(wavelength > 0) || !(pixel_pitch > 0))
    throw std::invalid_argument("diffraction_loss: wavelength and pitch must be > 0");
  // lambda/pitch is a scaling estimate, not a transmission model; saturate at
  // total loss once the wavelength reaches the pitch.
  return std::min(1.0, wavelength / pixel_pitch);
}

double bench_throughput(const OpticalBench& bench) {
  bench.validate();
  const double g = bench.grating_efficiency;
  return g * g * g * g * bench.slm_efficiency;
}

}  // namespace qdc
