#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdc {

struct QuadratureSpec {
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;
  int max_subdivisions = 10000;
};

template <class T>
struct IntegralResult {
  T value{};
  double error_estimate = 0.0;
  bool converged = false;
};

// Integration domain; lo/hi may be +-infinity.  tail_scale is the width hint
// for the tangent-map compactification x = scale*tan(pi v/2) applied to
// infinite ends.  The integrands here have Lorentzian 1/x^2 tails, so plain
// truncation is first-order inaccurate and the map scale should sit near the
// integrand's own half-width.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double tail_scale = 1.0;
};

// Thrown by callers (overlap integrals etc.) when a result comes back with
// converged == false; carries the error estimate for diagnostics.
struct NonConvergenceError : std::runtime_error {
  NonConvergenceError(const std::string& msg, double estimate)
      : std::runtime_error(msg), error_estimate(estimate) {}
  double error_estimate;
};

IntegralResult<double> integrate_real(const std::function<double(double)>& f,
                                      const Interval& iv,
                                      const QuadratureSpec& spec = {});

IntegralResult<std::complex<double>> integrate_complex(
    const std::function<std::complex<double>(double)>& f, const Interval& iv,
    const QuadratureSpec& spec = {});

// Same adaptive rule, but refinement starts from the given chain of finite
// breakpoints (strictly increasing, size >= 2).  Used for piecewise-defined
// integrands -- phase masks -- whose jump locations are known a priori;
// chasing a step discontinuity by bisection alone would exhaust the
// subdivision budget long before reaching 1e-9.
IntegralResult<double> integrate_real_segmented(
    const std::function<double(double)>& f,
    const std::vector<double>& breakpoints, const QuadratureSpec& spec = {});

IntegralResult<std::complex<double>> integrate_complex_segmented(
    const std::function<std::complex<double>(double)>& f,
    const std::vector<double>& breakpoints, const QuadratureSpec& spec = {});

}  // namespace qdc
