#include "qdc/qdot.hpp"

#include <cmath>
#include <stdexcept>

namespace qdc {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

void QDotParams::validate() const {
  if (!(tau > 0)) throw std::invalid_argument("QDotParams: tau must be > 0");
  if (!(fss_uev >= 0)) throw std::invalid_argument("QDotParams: fss_uev must be >= 0");
  if (!(omega0 > 0)) throw std::invalid_argument("QDotParams: omega0 must be > 0");
}

double amplitude_h(double omega, const QDotParams& qd) {
  const double g = qd.half_width();
  return 1.0 / std::sqrt(2.0 * kPi * qd.tau * (g * g + omega * omega));
}

double amplitude_v(double omega, const QDotParams& qd) {
  const double g = qd.half_width();
  const double d = qd.splitting() - omega;
  return 1.0 / std::sqrt(2.0 * kPi * qd.tau * (g * g + d * d));
}

double phase_h(double omega, const QDotParams& qd) {
  return std::atan(-2.0 * qd.tau * omega);
}

double phase_v(double omega, const QDotParams& qd) {
  return std::atan(2.0 * qd.tau * (qd.splitting() - omega));
}

double phase_diff(double omega, const QDotParams& qd) {
  return std::atan(2.0 * qd.tau * (qd.splitting() - omega)) +
         std::atan(2.0 * qd.tau * omega);
}

std::complex<double> alpha_closed_form(const QDotParams& qd) {
  const double x = qd.splitting() * qd.tau;  // S tau / hbar
  const double denom = 1.0 + x * x;
  return {1.0 / denom, x / denom};
}

}  // namespace qdc
