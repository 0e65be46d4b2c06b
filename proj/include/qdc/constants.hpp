#pragma once

// CODATA-2018 exact values. Everything downstream works in SI (rad/s, s, m);
// the only unit quirk is that fine-structure splittings are carried in ueV at
// the interfaces because that is how they are always quoted.
namespace qdc::consts {

inline constexpr double hbar = 1.054571817e-34;           // J s
inline constexpr double c = 299792458.0;                  // m/s
inline constexpr double microelectronvolt = 1.602176634e-25;  // J per ueV

}  // namespace qdc::consts
