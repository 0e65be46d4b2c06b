#pragma once

#include <complex>

#include <Eigen/Dense>

#include "qdc/mask.hpp"
#include "qdc/numerics.hpp"
#include "qdc/postselect.hpp"
#include "qdc/qdot.hpp"

namespace qdc {

// Two-photon polarization state in the basis {HH, HV, VH, VV}.  States
// produced by the cascade are X-states with only the four {HH,VV} corners
// populated: diag 1/2, 1/2 and off-diagonal alpha/2, conj(alpha)/2.
struct PolarizationDensityMatrix {
  Eigen::Matrix4cd entries;
};

// The spectral overlap
//   alpha = integral f_H f_V e^{i (phi - m(omega))} domega  (all detunings),
// with m = 0 when no mask is given.  With a band the integral is restricted
// to it and renormalized by band_norm.  |alpha| <= 1 by Cauchy-Schwarz; values
// pushed above 1 by quadrature noise are clamped back when within 1e-9 and
// rejected otherwise.  Throws NonConvergenceError if the quadrature cannot
// reach tolerance.
std::complex<double> overlap_alpha(const QDotParams& qd,
                                   const PhaseMask* mask = nullptr,
                                   const FrequencyBand* band = nullptr,
                                   const QuadratureSpec& spec = {});

// integral f_H f_V domega: the overlap with the phase difference fully
// removed (the best any compensation scheme can do).  Equals 1 at S = 0 and
// decreases with S.
double ideal_overlap(const QDotParams& qd, const QuadratureSpec& spec = {});

// Fidelity with the Bell state (|HH> + |VV>)/sqrt(2):  f = (1 + Re alpha)/2.
double fidelity(const std::complex<double>& alpha);

// Assemble the X-state density matrix; requires |alpha| <= 1 + 1e-12.
PolarizationDensityMatrix density_matrix(const std::complex<double>& alpha);

// A constant spectral delay multiplies alpha by a pure phase: e^{i theta} alpha.
std::complex<double> apply_global_phase(const std::complex<double>& alpha,
                                        double theta);

}  // namespace qdc
