#pragma once

/**
 * squid.hpp — linearized SQUID termination of Port 3.
 *
 * The SQUID (two identical junctions, capacitance Cs and Josephson energy
 * Es each) acts as a frequency- and flux-dependent boundary condition.  It
 * is equivalent to extending the open-ended stub to an effective length
 * l3_eff(omega, phi_ex) fixed by
 *
 *     tan(omega (l3_eff - L3) / v) = 2 Z Cs omega
 *                                    - (8 e^2 Z Es / (hbar^2 omega)) |cos(phi_ex/2)|
 *
 * on the principal branch.  Shifting l3_eff by pi*v/omega only flips the
 * sign of the Port-3 mode function, which is absorbed into the mode
 * amplitude, so the principal branch is canonical; it also makes
 * omega3 * l3_eff(omega3) / v = pi/2 hold identically at the stub
 * resonance omega3.
 */

#include <algorithm>
#include <cmath>

#include "stubcav/constants.hpp"
#include "stubcav/device.hpp"
#include "stubcav/errors.hpp"
#include "stubcav/numerics.hpp"

namespace stubcav {

// Solved stub termination at one frequency.
struct StubState {
    double omega;    // rad/s
    double phi_ex;   // radians
    double l3_eff;   // m
    double rhs;      // dimensionless right side of the boundary equation
};

/// Right side of the stub boundary equation at frequency omega.
inline double squid_rhs(const DeviceParams& dev, double omega,
                        const BoundaryCondition& bc) {
    if (!std::isfinite(bc.phi_ex))
        throw ValidationError("phi_ex must be finite");
    const double e = constants::elementary_charge;
    const double hbar = constants::hbar;
    return 2.0 * dev.impedance * dev.cs * omega -
           (8.0 * e * e * dev.impedance * dev.es) / (hbar * hbar * omega) *
               std::abs(std::cos(0.5 * bc.phi_ex));
}

/// Effective electrical length of Port 3 at frequency omega.
inline StubState effective_length(const DeviceParams& dev, double omega,
                                  const BoundaryCondition& bc) {
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw ValidationError("omega must be positive and finite");
    const double rhs = squid_rhs(dev, omega, bc);
    const double l3_eff = dev.l3 + (dev.v / omega) * std::atan(rhs);
    return StubState{omega, bc.phi_ex, l3_eff, rhs};
}

/// Upper edge of the stub resonance search interval, pi*v/L3.
inline double omega3_upper_bound(const DeviceParams& dev) {
    return constants::pi * dev.v / dev.l3;
}

/**
 * Stub resonance omega3(phi_ex): the unique root of
 * cot(omega L3 / v) = rhs(omega) in (0, pi v / L3).  The left side falls
 * from +inf to -inf over the interval while the right side rises, so the
 * root exists and is unique for any physical parameters.
 */
inline double omega3(const DeviceParams& dev, const BoundaryCondition& bc) {
    const double w_max = omega3_upper_bound(dev);
    const double delta = 1e-6 * w_max;  // keep clear of the cotangent poles
    auto f = [&](double w) {
        const double x = w * dev.l3 / dev.v;
        return std::cos(x) / std::sin(x) - squid_rhs(dev, w, bc);
    };
    // Solved essentially to machine precision: downstream consumers
    // (flux round trips, linewidths ~1e-5 of omega) need the headroom.
    return numerics::find_root(f, numerics::make_bracket(f, delta, w_max - delta),
                               1e-14);
}

/**
 * Inverse of omega3: the SQUID phase that places the stub resonance at
 * target_omega3.  Closed form
 *
 *     |cos(phi_ex/2)| = [2 Z Cs w3 - cot(w3 L3 / v)] hbar^2 w3 / (8 e^2 Z Es),
 *
 * returned as phi_ex = 2 acos(value) in [0, pi].  Values outside [0, 1]
 * mean no flux reaches the target.
 */
inline BoundaryCondition flux_for_omega3(const DeviceParams& dev,
                                         double target_omega3) {
    if (!(target_omega3 > 0.0) || !std::isfinite(target_omega3))
        throw ValidationError("target omega3 must be positive and finite");
    if (!(target_omega3 < omega3_upper_bound(dev)))
        throw UntunableError("target untunable: above pi*v/L3");

    const double e = constants::elementary_charge;
    const double hbar = constants::hbar;
    const double x = target_omega3 * dev.l3 / dev.v;
    const double cot = std::cos(x) / std::sin(x);
    double value = (2.0 * dev.impedance * dev.cs * target_omega3 - cot) *
                   hbar * hbar * target_omega3 /
                   (8.0 * e * e * dev.impedance * dev.es);

    // absorb roundoff at the range endpoints
    constexpr double edge = 1e-9;
    if (value < 0.0 && value > -edge) value = 0.0;
    if (value > 1.0 && value < 1.0 + edge) value = 1.0;
    if (value < 0.0 || value > 1.0)
        throw UntunableError("target untunable: |cos(phi_ex/2)| = " +
                             std::to_string(value) + " outside [0, 1]");
    return BoundaryCondition{2.0 * std::acos(value)};
}

}  // namespace stubcav
