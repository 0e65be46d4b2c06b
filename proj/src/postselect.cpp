#include "qdc/postselect.hpp"

#include <cmath>
#include <sstream>

#include "qdc/spectral.hpp"

namespace qdc {
namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// atan extended to +-infinity arguments (the band CDF limits).
double atan_ext(double x) {
  if (std::isinf(x)) return x > 0 ? 0.5 * kPi : -0.5 * kPi;
  return std::atan(x);
}

}  // namespace

void TimingGate::validate() const {
  if (!(width > 0) || std::isnan(width))
    throw std::invalid_argument("timing gate width must be > 0");
}

void FrequencyBand::validate() const {
  if (std::isnan(lo) || std::isnan(hi) || !(lo < hi))
    throw std::invalid_argument("frequency band must satisfy lo < hi");
}

double gate_efficiency(const QDotParams& qd, const TimingGate& gate) {
  qd.validate();
  gate.validate();
  return -std::expm1(-gate.width / qd.tau);
}

std::complex<double> gate_alpha(const QDotParams& qd, const TimingGate& gate) {
  qd.validate();
  gate.validate();
  const double eff = gate_efficiency(qd, gate);
  if (eff < 1e-15)
    throw std::invalid_argument("gate selects no photons (efficiency < 1e-15)");
  // Time-domain overlap restricted to [0, T]:
  //   integral_0^T (1/tau) e^(-t/tau) e^(i Delta t) dt
  //     = (1 - e^(-T/tau) e^(i Delta T)) / (1 - i Delta tau),
  // renormalized by the gate efficiency.
  const double decay = std::exp(-gate.width / qd.tau);
  const double rot = qd.splitting() * gate.width;
  const std::complex<double> num =
      1.0 - decay * std::complex<double>(std::cos(rot), std::sin(rot));
  const std::complex<double> den =
      std::complex<double>(1.0, -qd.splitting() * qd.tau) * eff;
  return num / den;
}

double band_norm(const QDotParams& qd, const FrequencyBand& band) {
  qd.validate();
  band.validate();
  // Each line's in-band probability is the Lorentzian CDF difference
  // (1/pi)[arctan(2 tau w)] across the band, with the V line shifted by the
  // splitting; the pair-collection efficiency averages the two.
  const double two_tau = 2.0 * qd.tau;
  const double delta = qd.splitting();
  const double h = (atan_ext(two_tau * band.hi) - atan_ext(two_tau * band.lo)) / kPi;
  const double v = (atan_ext(two_tau * (band.hi - delta)) -
                    atan_ext(two_tau * (band.lo - delta))) /
                   kPi;
  const double norm = 0.5 * (h + v);
  if (norm < 1e-12) {
    std::ostringstream msg;
    msg << "empty band: norm " << norm << " < 1e-12";
    throw std::invalid_argument(msg.str());
  }
  return norm;
}

double band_fidelity(const QDotParams& qd, const FrequencyBand& band,
                     const PhaseMask* mask, const QuadratureSpec& spec) {
  return fidelity(overlap_alpha(qd, mask, &band, spec));
}

}  // namespace qdc
