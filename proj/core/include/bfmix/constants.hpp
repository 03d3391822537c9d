#pragma once

#include <numbers>

namespace bfmix::constants {

// CODATA 2018 exact / recommended values, SI.
inline constexpr double hbar = 1.054571817e-34;         // J s
inline constexpr double planck = 2.0 * std::numbers::pi * hbar;
inline constexpr double k_B = 1.380649e-23;             // J / K
inline constexpr double atomic_mass_unit = 1.66053906660e-27;  // kg

inline constexpr double pi = std::numbers::pi;

// g_{3/2}(1) = zeta(3/2), the ideal-Bose condensation threshold of rho lambda^3.
inline constexpr double zeta_3_2 = 2.6123753486854883433;
inline constexpr double zeta_5_2 = 1.3414872572509171798;

}  // namespace bfmix::constants
