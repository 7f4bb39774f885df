#pragma once

/**
 * characterize.hpp — cavity parameters (omega_c, kappa) and the critical
 * photon number.
 *
 * Two independent estimators, both searching the open window between
 * omega2 and omega3 (the reflection-phase zero and the E/P peak provably
 * lie there on the lowest branch, where tan(theta) runs from -inf to +inf):
 *
 *   phase method   omega_c is the zero of the reflection phase, i.e. the
 *                  root of a + b = pi; kappa is the separation of the
 *                  frequencies where tan(theta) = -1 and +1 (phase shift
 *                  -pi/2 and +pi/2 relative to the zero crossing, ordered
 *                  so kappa > 0 for the rising phase).
 *
 *   energy method  omega_c is the E/P peak, kappa its full width at half
 *                  maximum (direct peak + half-max bisection, not a fit).
 *
 * Windows narrower than the decoupling floor short-circuit to a
 * DecoupledError: the linewidth is below any sensible numerical floor.
 */

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stubcav/constants.hpp"
#include "stubcav/device.hpp"
#include "stubcav/errors.hpp"
#include "stubcav/numerics.hpp"
#include "stubcav/spectroscopy.hpp"
#include "stubcav/squid.hpp"

namespace stubcav {

enum class ExtractionMethod { PhaseShift, EnergyLorentzian };

struct CavityParams {
    double omega_c;  // rad/s
    double kappa;    // rad/s
    ExtractionMethod method;
    std::pair<double, double> window;  // search interval, rad/s
};

// |omega3 - omega2| below this is treated as exactly decoupled.
inline constexpr double decoupling_floor = constants::two_pi * 1e3;  // rad/s

namespace detail {

struct Window {
    double lo, hi;   // sorted
    double omega3;   // resolved stub resonance
};

inline Window extraction_window(const DeviceParams& dev, const BoundaryCondition& bc) {
    const double w3 = omega3(dev, bc);
    const double detuning = w3 - dev.omega2;
    if (std::abs(detuning) < decoupling_floor)
        throw DecoupledError("decoupled: kappa below numerical floor", detuning);
    return Window{std::min(w3, dev.omega2), std::max(w3, dev.omega2), w3};
}

}  // namespace detail

inline CavityParams extract_from_phase(const DeviceParams& dev,
                                       const BoundaryCondition& bc) {
    const auto win = detail::extraction_window(dev, bc);

    auto phase_sum = [&](double w) {
        return w * (dev.l2 + effective_length(dev, w, bc).l3_eff) / dev.v;
    };
    auto g = [&](double w) { return phase_sum(w) - constants::pi; };
    const double omega_c =
        numerics::find_root(g, numerics::make_bracket(g, win.lo, win.hi), 1e-13);

    auto tan_theta = [&](double w) {
        return std::tan(w * dev.l2 / dev.v) +
               std::tan(w * effective_length(dev, w, bc).l3_eff / dev.v);
    };
    // tan(theta) -> -inf at the lower window edge and +inf at the upper
    // one; inset until the signs confirm it, then bracket each crossing.
    const double width = win.hi - win.lo;
    double inset = 1e-9 * width;
    while (!(tan_theta(win.lo + inset) < -1.0) || !(tan_theta(win.hi - inset) > 1.0)) {
        inset *= 0.125;
        if (inset < 1e-18 * width)
            throw NumericsError("phase crossings not bracketed inside the window");
    }
    // kappa is a difference of nearby roots; converge them to the floor
    auto f_minus = [&](double w) { return tan_theta(w) + 1.0; };
    auto f_plus = [&](double w) { return tan_theta(w) - 1.0; };
    const double w_minus = numerics::find_root(
        f_minus, numerics::make_bracket(f_minus, win.lo + inset, omega_c), 1e-14);
    const double w_plus = numerics::find_root(
        f_plus, numerics::make_bracket(f_plus, omega_c, win.hi - inset), 1e-14);

    return CavityParams{omega_c, w_plus - w_minus, ExtractionMethod::PhaseShift,
                        {win.lo, win.hi}};
}

inline CavityParams extract_from_energy(const DeviceParams& dev,
                                        const BoundaryCondition& bc,
                                        std::size_t grid_points = 4097) {
    if (grid_points < 16)
        throw ValidationError("grid_points must be at least 16");
    const auto win = detail::extraction_window(dev, bc);
    const double inset = 1e-9 * (win.hi - win.lo);
    const double lo = win.lo + inset;
    const double hi = win.hi - inset;

    auto e_over_p = [&](double w) { return energy_ratio(dev, bc, w); };
    numerics::GridFunction grid;
    grid.xs.reserve(grid_points);
    grid.ys.reserve(grid_points);
    for (std::size_t i = 0; i < grid_points; ++i) {
        const double w =
            lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid_points - 1);
        grid.xs.push_back(w);
        grid.ys.push_back(e_over_p(w));
    }

    const auto peak = numerics::peak_and_halfmax(grid, e_over_p);
    return CavityParams{peak.x_peak, peak.x_right_half - peak.x_left_half,
                        ExtractionMethod::EnergyLorentzian,
                        {win.lo, win.hi}};
}

/// Lorentzian fidelity of the E/P lineshape for extracted parameters:
/// max |E/P - kappa/((w-w_c)^2+kappa^2/4)| / (4/kappa) over
/// |omega - omega_c| <= span * kappa.
inline double lorentzian_residual(const DeviceParams& dev, const BoundaryCondition& bc,
                                  const CavityParams& params, double span = 2.0,
                                  std::size_t samples = 81) {
    if (samples < 3) throw ValidationError("samples must be at least 3");
    double worst = 0.0;
    const double scale = 4.0 / params.kappa;
    for (std::size_t i = 0; i < samples; ++i) {
        const double w = params.omega_c +
                         span * params.kappa *
                             (2.0 * static_cast<double>(i) / static_cast<double>(samples - 1) - 1.0);
        const double residual =
            std::abs(energy_ratio(dev, bc, w) - lorentzian(w, params.omega_c, params.kappa));
        worst = std::max(worst, residual / scale);
    }
    return worst;
}

struct SweepRow {
    double omega3_target;  // rad/s
    double phi_ex;         // resolved SQUID phase; NaN when untunable
    std::optional<CavityParams> phase;
    std::optional<CavityParams> energy;
    std::string status;    // "ok", "decoupled", "untunable"
};

/// Both extractions for each target omega3; failed rows are flagged and the
/// sweep continues.
inline std::vector<SweepRow> sweep_vs_boundary(const DeviceParams& dev,
                                               const std::vector<double>& omega3_values) {
    std::vector<SweepRow> rows;
    rows.reserve(omega3_values.size());
    for (const double w3 : omega3_values) {
        SweepRow row{w3, std::numeric_limits<double>::quiet_NaN(), {}, {}, "ok"};
        try {
            const BoundaryCondition bc = flux_for_omega3(dev, w3);
            row.phi_ex = bc.phi_ex;
            row.phase = extract_from_phase(dev, bc);
            row.energy = extract_from_energy(dev, bc);
        } catch (const UntunableError&) {
            row.status = "untunable";
        } catch (const DecoupledError&) {
            row.status = "decoupled";
        }
        rows.push_back(row);
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Critical photon number
// ---------------------------------------------------------------------------

/// Largest |phi0|^2 for which the SQUID linearization holds: the flux at
/// the SQUID position, |phi0 sin(pi l3 / (2 L2))|, must stay below hbar/2e.
inline double linearization_phi0_sq_limit(const DeviceParams& dev, double l3) {
    const double s = std::sin(constants::pi * l3 / (2.0 * dev.l2));
    return constants::reduced_flux_quantum * constants::reduced_flux_quantum / (s * s);
}

/// Photon number of the decoupled cavity mode at amplitude phi0:
/// N = pi (1 + l3/L2) phi0^2 / (4 hbar Z).
inline double cavity_photon_number(const DeviceParams& dev, double l3, double phi0_sq) {
    return constants::pi * (1.0 + l3 / dev.l2) * phi0_sq /
           (4.0 * constants::hbar * dev.impedance);
}

struct CriticalPhotonResult {
    double l3;               // m
    double n_crit;           // photons
    bool tunable_to_omega2;  // can any flux still reach omega3 = omega2?
};

/**
 * Critical photon number of the lowest cavity mode for a Port-3 length l3
 * (other device parameters unchanged):
 *
 *     N_crit = pi hbar (1 + l3/L2) / (16 e^2 Z sin^2(pi l3 / (2 L2))).
 *
 * Diverges where the mode has a node at the SQUID position.
 */
inline CriticalPhotonResult critical_photon_number(const DeviceParams& dev, double l3) {
    if (!(l3 > 0.0) || !std::isfinite(l3))
        throw ValidationError("l3 must be positive and finite");
    const double e = constants::elementary_charge;
    const double s = std::sin(constants::pi * l3 / (2.0 * dev.l2));
    if (std::abs(s) < 1e-9)
        throw NumericsError("divergent N_crit: cavity mode has a node at the SQUID");
    const double n_crit = constants::pi * constants::hbar * (1.0 + l3 / dev.l2) /
                          (16.0 * e * e * dev.impedance * s * s);

    const DeviceParams modified =
        make_device_si(dev.v, dev.impedance, dev.l2, l3, dev.cs, dev.es);
    bool tunable = true;
    try {
        flux_for_omega3(modified, dev.omega2);
    } catch (const UntunableError&) {
        tunable = false;
    }
    return CriticalPhotonResult{l3, n_crit, tunable};
}

}  // namespace stubcav
