#pragma once

/**
 * spectroscopy.hpp — stationary microwave response seen from Port 1.
 *
 * Two observables characterize the effective cavity formed by the finite
 * ports: the phase shift 2*theta of the reflected field, and the stored
 * energy normalized by input power
 *
 *     E/P = (2/v) [ ratio2^2 L2 + ratio3^2 L3 ]   (seconds),
 *
 * which uses the physical port lengths (the SQUID's own stored energy is
 * not counted).  E/P is amplitude-independent and non-negative.
 */

#include <cmath>
#include <vector>

#include "stubcav/errors.hpp"
#include "stubcav/modes.hpp"
#include "stubcav/numerics.hpp"

namespace stubcav {

/// Reflection phase shift 2*theta at omega, in (-2*pi, 2*pi].
inline double phase_shift(const DeviceParams& dev, const BoundaryCondition& bc,
                          double omega) {
    return 2.0 * solve_mode(dev, bc, omega).theta;
}

/// Stored cavity energy over input power, seconds.
inline double energy_ratio(const DeviceParams& dev, const BoundaryCondition& bc,
                           double omega) {
    const ModeSolution m = solve_mode(dev, bc, omega);
    return (2.0 / dev.v) *
           (m.ratio2 * m.ratio2 * dev.l2 + m.ratio3 * m.ratio3 * dev.l3);
}

/// Reference lineshape kappa / ((omega - omega_c)^2 + kappa^2/4), seconds.
inline double lorentzian(double omega, double omega_c, double kappa) {
    if (!(kappa > 0.0) || !std::isfinite(kappa))
        throw ValidationError("kappa must be positive and finite");
    const double d = omega - omega_c;
    return kappa / (d * d + 0.25 * kappa * kappa);
}

struct Spectrum {
    std::vector<double> omega_grid;       // rad/s, strictly increasing
    std::vector<double> phase_shift;      // radians, raw, (-2*pi, 2*pi]
    std::vector<double> phase_unwrapped;  // radians, continuous
    std::vector<double> e_over_p;         // seconds
};

namespace detail {

// A sample within ~1e-9 (relative) of a tangent pole of a or b is nudged
// just outside the exclusion zone so grids keep a deterministic length.
inline double nudge_off_pole(const DeviceParams& dev, const BoundaryCondition& bc,
                             double omega, double spacing) {
    const double a = omega * dev.l2 / dev.v;
    const double b = omega * effective_length(dev, omega, bc).l3_eff / dev.v;
    const bool near_pole = std::abs(std::cos(a)) < 1e-9 * std::max(1.0, a) ||
                           std::abs(std::cos(b)) < 1e-9 * std::max(1.0, b);
    if (!near_pole) return omega;
    return omega + std::min(2e-9 * omega, 0.25 * spacing);
}

}  // namespace detail

/// Uniform spectrum over [omega_min, omega_max] with n_points samples.
inline Spectrum compute_spectrum(const DeviceParams& dev, const BoundaryCondition& bc,
                                 double omega_min, double omega_max,
                                 std::size_t n_points) {
    if (!(omega_min > 0.0) || !(omega_min < omega_max) ||
        !std::isfinite(omega_min) || !std::isfinite(omega_max))
        throw ValidationError("frequency range must satisfy 0 < min < max");
    if (n_points < 16)
        throw ValidationError("n_points must be at least 16");

    const double spacing = (omega_max - omega_min) / static_cast<double>(n_points - 1);
    Spectrum spec;
    spec.omega_grid.reserve(n_points);
    spec.phase_shift.reserve(n_points);
    spec.e_over_p.reserve(n_points);

    for (std::size_t i = 0; i < n_points; ++i) {
        double w = omega_min + spacing * static_cast<double>(i);
        if (i + 1 == n_points) w = omega_max;
        w = detail::nudge_off_pole(dev, bc, w, spacing);
        const ModeSolution m = solve_mode(dev, bc, w);
        spec.omega_grid.push_back(w);
        spec.phase_shift.push_back(2.0 * m.theta);
        spec.e_over_p.push_back(
            (2.0 / dev.v) * (m.ratio2 * m.ratio2 * dev.l2 + m.ratio3 * m.ratio3 * dev.l3));
    }

    numerics::GridFunction raw{spec.omega_grid, spec.phase_shift};
    spec.phase_unwrapped = numerics::unwrap_phase(raw).ys;
    return spec;
}

}  // namespace stubcav
