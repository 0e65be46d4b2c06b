#pragma once

#include <complex>

#include "qdc/constants.hpp"

namespace qdc {

// Cascade parameters.  All spectral functions below take omega as DETUNING
// from the H exciton line in rad/s: f_H is centred at 0 and f_V at the
// splitting Delta = S/hbar.  The absolute line frequency omega0 only enters
// the bench-geometry and absolute-band conversions.
struct QDotParams {
  double tau = 0.77e-9;      // exciton lifetime (s)
  double fss_uev = 0.0;      // fine-structure splitting S (ueV)
  double omega0 = 2.124e15;  // absolute H-line angular frequency (rad/s)

  // Delta = S/hbar (rad/s)
  double splitting() const {
    return fss_uev * consts::microelectronvolt / consts::hbar;
  }
  // Lorentzian half-width Gamma = 1/(2 tau) (rad/s)
  double half_width() const { return 1.0 / (2.0 * tau); }

  void validate() const;
};

// Spectral amplitude densities (units s^(1/2); normalized so that
// integral |f|^2 domega = 1).  The single-photon wavepacket of an
// exponential decay of lifetime tau is Lorentzian with HWHM 1/(2 tau):
//   f_H(omega) = { 2 pi tau [ (1/(2 tau))^2 + omega^2 ] }^(-1/2)
// and f_V is the same shape centred at the splitting.
double amplitude_h(double omega, const QDotParams& qd);
double amplitude_v(double omega, const QDotParams& qd);

// Spectral phases of the two decay paths and their difference
//   phi(omega) = phase_v - phase_h
//              = arctan(2 tau (Delta - omega)) + arctan(2 tau omega),
// which for S > 0 lies in (0, pi) for all finite omega, peaks at
// omega = Delta/2 with value 2 arctan(S tau / hbar), and -> 0 in both tails.
double phase_h(double omega, const QDotParams& qd);
double phase_v(double omega, const QDotParams& qd);
double phase_diff(double omega, const QDotParams& qd);

// Time-domain evaluation of the overlap,
//   integral_0^inf (1/tau) e^(-t/tau) e^(i S t / hbar) dt = 1/(1 - i S tau/hbar),
// exact to machine precision; the analytic oracle for the frequency-domain
// overlap integral.
std::complex<double> alpha_closed_form(const QDotParams& qd);

}  // namespace qdc
