#pragma once

// Frozen expected values for the reference device (v = 1e8 m/s, Z = 50 Ohm,
// L2 = 2.5 mm, L3 = 4.5 mm, Cs = 100 fF, Ic = 5 uA).
//
// Computed independently with 40-digit arithmetic (mpmath); regenerate with
//   python3 tests/generate_reference.py
// Do not edit by hand.

namespace ref {

// Josephson energy of one junction at Ic = 5 uA, J.
inline constexpr double es_joules = 1.6455298913690187e-21;

// Boundary equation right side and effective stub length at f = 10 GHz.
inline constexpr double rhs_phi0_10ghz = -23.551573904946707;
inline constexpr double l3eff_phi0_10ghz_mm = 2.0675366337636192;
inline constexpr double rhs_phipi_10ghz = 0.62831853071795865;
inline constexpr double l3eff_phipi_10ghz_mm = 5.3928307676483904;

// Stub resonance range endpoints, GHz.
inline constexpr double f3_phi0_ghz = 10.945980170693485;
inline constexpr double f3_phipi_ghz = 4.5671846290685017;

// SQUID phase placing the stub resonance exactly at omega2.
inline constexpr double phi_ex_decoupling = 2.8338437841165012;
inline constexpr double flux_decoupling = 0.45102024619238308;

// SQUID phase at which the two boundary-equation terms cancel at 10 GHz.
inline constexpr double phi_ex_rhs_zero_10ghz = 3.0896164701814796;

// Largest L3 still tunable to omega2, mm.
inline constexpr double l3_cutoff_mm = 4.9324633662363808;

// Critical photon numbers.
inline constexpr double ncrit_2p5mm = 32.26600930436063;
inline constexpr double ncrit_4p5mm = 473.05165062476429;

// Phase-method cavity parameters per stub tuning f3 (GHz -> GHz, rad/s).
inline constexpr double phi_ex_f3_9p0 = 2.9898129318873527;
inline constexpr double fc_phase_f3_9p0_ghz = 9.2950016833582759;
inline constexpr double kappa_phase_f3_9p0 = 287392547.32719594;

inline constexpr double phi_ex_f3_9p3 = 2.9595402428684493;
inline constexpr double fc_phase_f3_9p3_ghz = 9.5127927447727862;
inline constexpr double kappa_phase_f3_9p3 = 141885663.85537728;

inline constexpr double phi_ex_f3_9p6 = 2.9188372597000046;
inline constexpr double fc_phase_f3_9p6_ghz = 9.7253996396159555;
inline constexpr double kappa_phase_f3_9p6 = 46592493.203670105;

inline constexpr double phi_ex_f3_9p8 = 2.8824046178682484;
inline constexpr double fc_phase_f3_9p8_ghz = 9.8639939391248339;
inline constexpr double kappa_phase_f3_9p8 = 11677215.245329115;

inline constexpr double phi_ex_f3_9p9 = 2.8600178072335872;
inline constexpr double fc_phase_f3_9p9_ghz = 9.932320588430121;
inline constexpr double kappa_phase_f3_9p9 = 2921746.5424491803;

inline constexpr double phi_ex_f3_9p95 = 2.8474658600742374;
inline constexpr double fc_phase_f3_9p95_ghz = 9.9662409203257715;
inline constexpr double kappa_phase_f3_9p95 = 730665.98853680922;

inline constexpr double phi_ex_f3_9p99 = 2.8366607508956707;
inline constexpr double fc_phase_f3_9p99_ghz = 9.9932610422023986;
inline constexpr double kappa_phase_f3_9p99 = 29232.519034837048;

inline constexpr double phi_ex_f3_9p999 = 2.8341276559500695;
inline constexpr double fc_phase_f3_9p999_ghz = 9.9993263929152946;
inline constexpr double kappa_phase_f3_9p999 = 292.33663484257964;

// Flipped window (stub above omega2): f3 = 10.5 GHz.
inline constexpr double phi_ex_f3_10p5 = 2.5792943300271215;
inline constexpr double fc_phase_f3_10p5_ghz = 10.329103693733437;
inline constexpr double kappa_phase_f3_10p5 = 72998228.224474151;

// Maximal detuning phi_ex = pi.
inline constexpr double fc_phase_phipi_ghz = 6.287437857301665;
inline constexpr double kappa_phase_phipi_ghz = 1.1915735673281768;

// Energy-method values (continuum peak + half-max, no grid).
inline constexpr double fc_energy_f3_9p0_ghz = 9.2941202682833146;
inline constexpr double kappa_energy_f3_9p0 = 288507001.45;
inline constexpr double fc_energy_f3_9p9_ghz = 9.9323197982176088;
inline constexpr double kappa_energy_f3_9p9 = 2921884.97963;
inline constexpr double kappa_energy_f3_9p95 = 730674.715718;

// E/P values, seconds.
inline constexpr double ep_5ghz_f3_9p9 = 9.5360041923142694e-11;
inline constexpr double ep_9p95ghz_f3_9p9 = 2.5824377873696189e-10;
inline constexpr double ep_peak_f3_9p9 = 1.2387723258208749e-6;

// The lineshape is Lorentzian in shape but its peak-width product is
// 4 (L2+L3)/(L2+L3+delta) with delta the SQUID's group-delay length
// v * rhs'/(1+rhs^2) at resonance, not 4: the port-integrated energy
// excludes the SQUID's own stored energy.
inline constexpr double kappa_ep_product_f3_9p0 = 3.294304042591525;
inline constexpr double kappa_ep_product_f3_9p6 = 3.5080953235923157;
inline constexpr double kappa_ep_product_f3_9p9 = 3.6193787598488707;
inline constexpr double kappa_ep_product_f3_9p95 = 3.6377265296777682;
// max |E/P - Lorentzian|/(4/kappa) over +-2 kappa, phase-method parameters,
// sampled at 81 uniform points.
inline constexpr double lorentz_dev_f3_9p9 = 0.09515531;

// Mode solutions: (theta, ratio2, ratio3).
inline constexpr double mode_9p95ghz_f3_9p9_theta = -1.5858261502141583;
inline constexpr double mode_9p95ghz_f3_9p9_r2 = -1.9136041792232268;
inline constexpr double mode_9p95ghz_f3_9p9_r3 = 0.91378170867573979;

}  // namespace ref
