#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qdc/numerics.hpp"
#include "qdc/qdot.hpp"

namespace qdc {

// Piecewise-constant spectral phase profile m(omega) subtracted from the
// cascade phase by the SLM, sampled on contiguous pixels.  boundaries are
// detunings (rad/s) and carry one more entry than phases.  Phases are stored
// wrapped to (-pi, pi]; since the cascade's phase difference lies in (0, pi),
// masks built from it never actually wrap.  m is the TOTAL compensated phase
// (the folded 4f line traverses the SLM twice; pass count is a bench detail,
// not a mask property).
struct PhaseMask {
  enum class Outside { kExtendEdge, kZero };

  std::vector<double> boundaries;  // size n+1, strictly increasing, rad/s
  std::vector<double> phases;      // size n, radians in (-pi, pi]
  double global_offset = 0.0;      // constant-delay phase, radians
  Outside outside = Outside::kExtendEdge;

  // Pixel phase without the global offset; extend-edge or zero outside the
  // tiled range.
  double pixel_phase(double omega) const;
  // Full mask value m(omega) = pixel phase + global offset.
  double phase_at(double omega) const { return pixel_phase(omega) + global_offset; }

  void validate() const;
};

// Wrap an angle to (-pi, pi], canonicalising -0.0 to +0.0.
double wrap_phase(double phase);

inline constexpr double kDefaultCoverageTol = 1e-4;
inline constexpr std::size_t kDefaultPixelCap = 1000000;

// Build the compensating mask: pixels of width pixel_bandwidth tile a
// zero-anchored detuning grid wide enough that the tail of the overlap
// integrand integral f_H f_V excluded from the tiling is below coverage_tol;
// each pixel carries phase_diff sampled at its centre, so the residual phase
// after subtraction is phi - phi(centre).  The 1/omega^2 integrand tails put
// the tiled half-range at ~ 2 Gamma / (pi coverage_tol), which together with
// the pixel cap bounds how small coverage_tol can be.
PhaseMask build_mask(const QDotParams& qd, double pixel_bandwidth,
                     double coverage_tol = kDefaultCoverageTol,
                     std::size_t max_pixels = kDefaultPixelCap);

// fidelity(overlap_alpha(qd, mask, none)).
double compensated_fidelity(const QDotParams& qd, const PhaseMask& mask,
                            const QuadratureSpec& spec = {});

// CSV serialization: header pixel_index,omega_lo_rad_s,omega_hi_rad_s,phase_rad,
// one row per pixel, LF endings, 17 significant digits (lossless round-trip).
// The global offset and outside behaviour are not part of the wire format;
// deserialized masks carry offset 0 and extend-edge.
void write_mask_csv(const PhaseMask& mask, const std::string& path);
PhaseMask read_mask_csv(const std::string& path);

}  // namespace qdc
