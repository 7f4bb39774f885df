#pragma once

#include <numbers>

namespace stubcav::constants {

// CODATA 2018 values, SI. These are compile-time fixed; device parameters
// are the only runtime-configurable quantities in the library.
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double hbar              = 1.054571817e-34;  // J s

inline constexpr double pi     = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Reduced flux quantum hbar/2e, the natural flux scale of a Josephson loop.
inline constexpr double reduced_flux_quantum = hbar / (2.0 * elementary_charge);

}  // namespace stubcav::constants
