#pragma once

namespace qdc {

// Folded 4f compensation line: two parallel gratings, SLM at the folding
// mirror plane.  Geometry model: after the first grating a frequency
// component leaves at angle theta with sin(theta) = sin(i) + lambda/d and
// accumulates lateral displacement x = L tan(theta) at the SLM plane.  The
// pairing between pixel pitch and spectral bandwidth per pixel follows from
// |dx/domega| there.  This path is advisory -- masks are built directly from
// a requested pixel bandwidth -- but it reports what the physical bench
// actually resolves.
struct OpticalBench {
  double grating_period = 1.1e-6;    // d (m)
  double sin_incidence = 0.18;       // sin(i)
  double grating_separation = 0.29;  // L (m)
  double pixel_pitch = 20e-6;        // SLM step length (m)
  double grating_efficiency = 0.9;   // per grating interaction
  double slm_efficiency = 0.95;

  void validate() const;
};

// First-order grating equation; returns sin(theta).  Throws "evanescent
// order" when |sin(theta)| >= 1 (no propagating diffracted beam).
double grating_angle(double wavelength, const OpticalBench& bench);

// Lateral position of the frequency component omega_abs (absolute rad/s) at
// the SLM plane: L tan(theta(lambda)), lambda = 2 pi c / omega.  Strictly
// monotone (decreasing) in omega over the operating band.
double slm_position(double omega_abs, const OpticalBench& bench);

// |dx/domega| = L lambda^2 / (2 pi c d cos^3 theta) at omega_abs (m per rad/s).
double dispersion_at_slm(double omega_abs, const OpticalBench& bench);

// Spectral width mapped onto one SLM pixel: pixel_pitch / |dx/domega|.
double pixel_bandwidth_from_bench(const OpticalBench& bench, double omega_abs);

// Back-of-envelope diffraction loss estimate lambda/pitch (saturates at 1,
// where the estimate leaves its validity range anyway).
double diffraction_loss(double wavelength, double pixel_pitch);

// Four grating interactions (two gratings, traversed twice by the folded
// path) and one SLM reflection.
double bench_throughput(const OpticalBench& bench);

}  // namespace qdc
