#pragma once

/**
 * modes.hpp — continuous eigenmodes of the three-port waveguide.
 *
 * With a = omega L2 / v and b = omega l3_eff / v, the branch conditions
 * (voltage uniqueness and current conservation) fix the reflection phase
 * theta and the amplitude ratios of the finite ports relative to the
 * semi-infinite one:
 *
 *     tan(theta) = tan(a) + tan(b)
 *     cos(theta) = ratio2 cos(a) = ratio3 cos(b)
 *     sin(theta) = ratio2 sin(a) + ratio3 sin(b)
 *
 * The quadrant of theta is fixed by theta = atan2(sin(a+b), cos a cos b),
 * which satisfies the tangent relation and stays continuous across single
 * tangent poles.  The ratios then take the pole-free forms
 * ratio2 = cos b / sqrt(D), ratio3 = cos a / sqrt(D) with
 * D = cos^2 a cos^2 b + sin^2(a+b), which make all three residuals vanish
 * identically.  D = 0 only when cos a = cos b = 0 simultaneously: the
 * exactly decoupled cavity, where the localized mode carries no amplitude
 * in Port 1 at all.
 */

#include <cmath>
#include <string>

#include "stubcav/device.hpp"
#include "stubcav/errors.hpp"
#include "stubcav/squid.hpp"

namespace stubcav {

struct ModeSolution {
    double omega;   // rad/s
    double theta;   // reflection half-phase, (-pi, pi]
    double ratio2;  // alpha2/alpha1, signed (alpha1 > 0 convention)
    double ratio3;  // alpha3/alpha1, signed
    double l3_eff;  // m
    double a;       // omega L2 / v
    double b;       // omega l3_eff / v
};

inline ModeSolution solve_mode(const DeviceParams& dev, const BoundaryCondition& bc,
                               double omega) {
    const StubState stub = effective_length(dev, omega, bc);
    const double a = omega * dev.l2 / dev.v;
    const double b = omega * stub.l3_eff / dev.v;
    const double ca = std::cos(a);
    const double cb = std::cos(b);
    const double s = std::sin(a + b);
    const double d = ca * ca * cb * cb + s * s;
    if (d == 0.0)
        throw DecoupledError("exactly decoupled cavity: use cavity_mode", 0.0);
    const double root_d = std::sqrt(d);
    ModeSolution m{};
    m.omega = omega;
    m.theta = std::atan2(s, ca * cb);
    m.ratio2 = cb / root_d;
    m.ratio3 = ca / root_d;
    m.l3_eff = stub.l3_eff;
    m.a = a;
    m.b = b;
    if (!std::isfinite(m.ratio2) || !std::isfinite(m.ratio3))
        throw DecoupledError("exactly decoupled cavity: use cavity_mode", 0.0);
    return m;
}

// Localized mode at omega2, existing when the stub is tuned so that
// omega3 = omega2.  It has a node at the branch (r = 0), zero amplitude in
// Port 1, and flux -phi0 sin(omega r2/v) / +phi0 sin(omega r3/v) on the
// finite ports.
struct CavityMode {
    double omega;          // rad/s
    double phi0;           // overall amplitude constant, Wb
    double node_position;  // m, the branch point
    double wave_velocity;  // m/s

    double port1(double) const { return 0.0; }
    double port2(double r2) const { return -phi0 * std::sin(omega * r2 / wave_velocity); }
    double port3(double r3) const { return phi0 * std::sin(omega * r3 / wave_velocity); }
};

/// The decoupled cavity mode; requires |omega3 - omega2| <= tol (rad/s).
inline CavityMode cavity_mode(const DeviceParams& dev, const BoundaryCondition& bc,
                              double tol, double phi0 = 1.0) {
    if (!(tol >= 0.0) || !std::isfinite(tol))
        throw ValidationError("tol must be non-negative and finite");
    const double w3 = omega3(dev, bc);
    const double detuning = w3 - dev.omega2;
    if (std::abs(detuning) > tol)
        throw NotDecoupledError(
            "not decoupled: |omega3 - omega2| = " + std::to_string(std::abs(detuning)) +
                " rad/s exceeds tol",
            detuning);
    return CavityMode{dev.omega2, phi0, 0.0, dev.v};
}

}  // namespace stubcav
