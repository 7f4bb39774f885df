#pragma once

/**
 * device.hpp — physical configuration of the three-port waveguide.
 *
 * The device is a semi-infinite transmission line (Port 1) with two finite
 * side ports at the branch: Port 2 (length L2, open end) and Port 3
 * (length L3, terminated by a flux-tunable SQUID).  All internal quantities
 * are strictly SI (m, F, J, Ohm, rad/s); the conventional display units
 * (mm, fF, uA, GHz) appear only in DeviceConfig and in the *_mm()/...
 * accessors used at I/O boundaries.
 */

#include <cmath>
#include <string>

#include "stubcav/constants.hpp"
#include "stubcav/errors.hpp"

namespace stubcav {

// User-facing configuration in display units. Defaults describe the
// reference device: 50-Ohm line, v = 1e8 m/s, 2.5 mm + 4.5 mm ports,
// 100 fF / 5 uA junctions (two identical junctions form the SQUID).
struct DeviceConfig {
    double v_m_per_s    = 1e8;
    double impedance_ohm = 50.0;
    double l2_mm        = 2.5;
    double l3_mm        = 4.5;
    double cs_ff        = 100.0;
    double ic_ua        = 5.0;
};

/// Josephson energy of a single junction from its critical current,
/// Es = hbar * Ic / (2e).
inline double josephson_energy_from_critical_current(double ic_amperes) {
    if (!(ic_amperes > 0.0) || !std::isfinite(ic_amperes))
        throw ValidationError("ic must be positive and finite");
    return constants::hbar * ic_amperes / (2.0 * constants::elementary_charge);
}

// Immutable after construction; copy freely across threads.
struct DeviceParams {
    // inputs, SI
    double v;          // microwave phase velocity, m/s
    double impedance;  // characteristic impedance, Ohm
    double l2;         // length of Port 2, m
    double l3;         // length of Port 3, m
    double cs;         // single-junction capacitance, F
    double es;         // single-junction Josephson energy, J
    double ic;         // single-junction critical current, A (= 2e Es / hbar)

    // derived
    double cap_per_len;  // 1/(v Z), F/m
    double ind_per_len;  // Z/v, H/m
    double omega2;       // pi v / (2 L2), rad/s: lowest mode with a node at
                         // the branch and no amplitude in Port 3

    double l2_mm() const { return l2 / 1e-3; }
    double l3_mm() const { return l3 / 1e-3; }
    double cs_ff() const { return cs / 1e-15; }
    double ic_ua() const { return ic / 1e-6; }
    double omega2_ghz() const { return omega2 / (constants::two_pi * 1e9); }
};

// The tunable knob of the whole device: the SQUID phase phi_ex = 2*pi *
// (external flux / flux quantum). Every derived quantity depends on it
// only through |cos(phi_ex/2)|, so it is 2*pi-periodic and even.
struct BoundaryCondition {
    double phi_ex = 0.0;  // radians

    double flux_over_flux_quantum() const { return phi_ex / constants::two_pi; }

    static BoundaryCondition from_flux(double flux_over_phi0) {
        return BoundaryCondition{flux_over_phi0 * constants::two_pi};
    }
};

inline BoundaryCondition make_boundary(double phi_ex) {
    if (!std::isfinite(phi_ex))
        throw ValidationError("phi_ex must be finite");
    return BoundaryCondition{phi_ex};
}

namespace detail {

inline void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value))
        throw ValidationError(std::string(name) + " must be positive and finite");
}

}  // namespace detail

/// Build a device from SI quantities.
inline DeviceParams make_device_si(double v, double impedance, double l2,
                                   double l3, double cs, double es) {
    detail::require_positive(v, "v");
    detail::require_positive(impedance, "impedance");
    detail::require_positive(l2, "l2");
    detail::require_positive(l3, "l3");
    detail::require_positive(cs, "cs");
    detail::require_positive(es, "es");

    DeviceParams dev{};
    dev.v = v;
    dev.impedance = impedance;
    dev.l2 = l2;
    dev.l3 = l3;
    dev.cs = cs;
    dev.es = es;
    dev.ic = es * (2.0 * constants::elementary_charge) / constants::hbar;
    dev.cap_per_len = 1.0 / (v * impedance);
    dev.ind_per_len = impedance / v;
    dev.omega2 = constants::pi * v / (2.0 * l2);
    return dev;
}

/// Build a device from display units (mm, fF, uA).
inline DeviceParams make_device(const DeviceConfig& cfg) {
    detail::require_positive(cfg.v_m_per_s, "v");
    detail::require_positive(cfg.impedance_ohm, "impedance");
    detail::require_positive(cfg.l2_mm, "l2");
    detail::require_positive(cfg.l3_mm, "l3");
    detail::require_positive(cfg.cs_ff, "cs");
    detail::require_positive(cfg.ic_ua, "ic");
    return make_device_si(cfg.v_m_per_s, cfg.impedance_ohm, cfg.l2_mm * 1e-3,
                          cfg.l3_mm * 1e-3, cfg.cs_ff * 1e-15,
                          josephson_energy_from_critical_current(cfg.ic_ua * 1e-6));
}

inline DeviceParams make_device() { return make_device(DeviceConfig{}); }

}  // namespace stubcav
