#pragma once

// Independent cross-checks for the quadrature-backed results: fixed-grid
// composite Simpson rules on transformed (compactified or time-domain) forms
// of the same integrals.  These share no code with the adaptive integrator
// under test -- no tolerances, no subdivision, no tail heuristics -- so an
// agreement failure points at the implementation, not at a shared bug.

#include <cmath>
#include <complex>

namespace oracles {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// integral over all u of [(1+u^2)(1+(u-delta)^2)]^(-1/2) du, i.e. pi times
// the modulus-overlap of two unit-width Lorentzian amplitudes separated by
// delta (in half-width units).  Substituting u = tan(theta) turns the full
// line into theta in [-pi/2, pi/2]; the transformed integrand
// sqrt((1+u^2)/(1+(u-delta)^2)) extends continuously to the endpoints with
// value 1, so plain composite Simpson converges at its nominal O(h^4).
inline double lineshape_overlap(double delta, int points = 40001) {
  const int n = (points % 2 == 0) ? points + 1 : points;  // need even panel count
  const double h = kPi / (n - 1);
  auto f = [delta](double theta) {
    const double t = std::tan(theta);
    const double d = t - delta;
    return std::sqrt((1.0 + t * t) / (1.0 + d * d));
  };
  double sum = 1.0 + 1.0;  // endpoint limits at theta = -pi/2, +pi/2
  for (int k = 1; k < n - 1; ++k) {
    const double theta = -0.5 * kPi + k * h;
    sum += (k % 2 == 1 ? 4.0 : 2.0) * f(theta);
  }
  return sum * h / 3.0;
}

// Time-domain overlap of the gated cascade state: Simpson rule for
//   (1/tau) integral_0^T e^(-t/tau) e^(i delta t) dt
// renormalized by the capture probability 1 - e^(-T/tau).  delta in rad/s.
inline std::complex<double> gated_overlap(double tau, double delta, double T,
                                          int points = 200001) {
  const int n = (points % 2 == 0) ? points + 1 : points;
  const double h = T / (n - 1);
  auto f = [&](double t) {
    return std::exp(-t / tau) * std::complex<double>(std::cos(delta * t),
                                                     std::sin(delta * t));
  };
  std::complex<double> sum = f(0.0) + f(T);
  for (int k = 1; k < n - 1; ++k) {
    sum += (k % 2 == 1 ? 4.0 : 2.0) * f(k * h);
  }
  const double eff = -std::expm1(-T / tau);
  return sum * (h / 3.0) / (tau * eff);
}

// Richardson-extrapolated central difference, accurate to O(h^4); h should
// already be small against the curvature scale of f at x.
template <class F>
double derivative(F f, double x, double h) {
  const double d1 = (f(x + h) - f(x - h)) / (2.0 * h);
  const double d2 = (f(x + 0.5 * h) - f(x - 0.5 * h)) / h;
  return (4.0 * d2 - d1) / 3.0;
}

}  // namespace oracles
