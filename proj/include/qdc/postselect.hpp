#pragma once

#include <complex>

#include "qdc/mask.hpp"
#include "qdc/numerics.hpp"
#include "qdc/qdot.hpp"

namespace qdc {

// Coincidence window [0, width] measured from the biexciton emission.
struct TimingGate {
  double width = 0.0;  // seconds
  void validate() const;
};

// Spectral collection window in detuning from the H line (rad/s).  Absolute
// frequencies are converted by subtracting QDotParams::omega0 at the CLI
// boundary.
struct FrequencyBand {
  double lo = 0.0;
  double hi = 0.0;  // rad/s detuning, lo < hi
  void validate() const;
};

// Probability that the exciton photon is emitted within the gate:
// 1 - e^(-T/tau).
double gate_efficiency(const QDotParams& qd, const TimingGate& gate);

// Overlap of the gated state,
//   (1 - e^(-T/tau) e^(i S T/hbar)) / ((1 - i S tau/hbar)(1 - e^(-T/tau))),
// i.e. the time-domain overlap integral restricted to [0, T] and renormalized
// by the gate efficiency.  Throws when the efficiency underflows (< 1e-15):
// such a gate selects no photons.
std::complex<double> gate_alpha(const QDotParams& qd, const TimingGate& gate);

// Pair-collection efficiency of the band: the probability that the X photon
// (either polarization, equal weights) lands inside,
//   (1/2) integral_band (|f_H|^2 + |f_V|^2) domega,
// evaluated in closed form through the Lorentzian CDF (1/pi) arctan(2 tau w).
// Throws "empty band" when the value is below 1e-12.
double band_norm(const QDotParams& qd, const FrequencyBand& band);

// Fidelity of the band-post-selected state, (1 + Re alpha_band)/2 with
// alpha_band the band-restricted overlap renormalized by band_norm.
double band_fidelity(const QDotParams& qd, const FrequencyBand& band,
                     const PhaseMask* mask = nullptr,
                     const QuadratureSpec& spec = {});

}  // namespace qdc
