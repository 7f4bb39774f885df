// stubcav — command-line front end.
//
// Subcommands: params, omega3-sweep, spectrum, cavity, cavity-sweep, ncrit.
// Frequencies on the command line are ordinary frequencies in GHz
// (f = omega / 2 pi); everything internal is SI rad/s.
//
// Exit codes: 0 success (including flagged sweep rows), 2 validation error,
// 3 numerical failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stubcav/config_json.hpp"
#include "stubcav/stubcav.hpp"

namespace {

using ojson = nlohmann::ordered_json;
using namespace stubcav;

constexpr double ghz = constants::two_pi * 1e9;  // rad/s per GHz

std::string fmt12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", x);
    return buf;
}

struct GlobalOpts {
    std::string config_path;
    std::string format = "csv";
    std::string output = "-";
    std::optional<double> v, z, l2, l3, cs, ic;
};

DeviceConfig resolve_config(const GlobalOpts& g) {
    DeviceConfig cfg;
    if (!g.config_path.empty()) {
        std::ifstream in(g.config_path);
        if (!in) throw ValidationError("cannot read config file: " + g.config_path);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ValidationError("config file is not valid JSON: " + std::string(e.what()));
        }
        cfg = device_config_from_json(j);
    }
    if (g.v) cfg.v_m_per_s = *g.v;
    if (g.z) cfg.impedance_ohm = *g.z;
    if (g.l2) cfg.l2_mm = *g.l2;
    if (g.l3) cfg.l3_mm = *g.l3;
    if (g.cs) cfg.cs_ff = *g.cs;
    if (g.ic) cfg.ic_ua = *g.ic;
    return cfg;
}

struct BcArgs {
    std::optional<double> phiex;       // radians
    std::optional<double> flux;        // units of the flux quantum
    std::optional<double> omega3_ghz;  // inverted through flux_for_omega3
};

BoundaryCondition resolve_bc(const DeviceParams& dev, const BcArgs& a) {
    const int given = (a.phiex ? 1 : 0) + (a.flux ? 1 : 0) + (a.omega3_ghz ? 1 : 0);
    if (given != 1)
        throw ValidationError("exactly one of --phiex, --flux, --omega3-ghz is required");
    if (a.phiex) return make_boundary(*a.phiex);
    if (a.flux) return make_boundary(*a.flux * constants::two_pi);
    return flux_for_omega3(dev, *a.omega3_ghz * ghz);
}

void add_bc_meta(ojson& meta, const BcArgs& a) {
    if (a.phiex) meta["phiex_rad"] = *a.phiex;
    if (a.flux) meta["flux_over_flux_quantum"] = *a.flux;
    if (a.omega3_ghz) meta["omega3_ghz"] = *a.omega3_ghz;
}

ojson meta_base(const char* cmd, const DeviceConfig& cfg, const GlobalOpts& g) {
    ojson m;
    m["tool"] = "stubcav";
    m["version"] = version;
    m["command"] = cmd;
    m["device"] = device_config_to_json(cfg);
    m["format"] = g.format;
    return m;
}

std::string csv_preamble(const ojson& meta) {
    std::string s;
    s += "# stubcav ";
    s += version;
    s += "\n# command: ";
    s += meta.at("command").get<std::string>();
    s += "\n# config: ";
    s += meta.dump();
    s += "\n";
    return s;
}

void emit(const GlobalOpts& g, const std::string& content) {
    if (g.output == "-" || g.output.empty()) {
        std::fwrite(content.data(), 1, content.size(), stdout);
        return;
    }
    std::ofstream out(g.output, std::ios::binary);
    if (!out) throw ValidationError("cannot open output file: " + g.output);
    out << content;
}

// Rows of already-formatted cells -> CSV or a JSON table.
std::string render_table(const GlobalOpts& g, const ojson& meta,
                         const std::vector<std::string>& columns,
                         const std::vector<std::vector<std::string>>& rows) {
    if (g.format == "json") {
        ojson root;
        root["meta"] = meta;
        root["columns"] = columns;
        ojson data = ojson::array();
        for (const auto& row : rows) {
            ojson r = ojson::array();
            for (const auto& cell : row) r.push_back(cell);
            data.push_back(r);
        }
        root["rows"] = data;
        return root.dump(2) + "\n";
    }
    std::string s = csv_preamble(meta);
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) s += ",";
        s += columns[i];
    }
    s += "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) s += ",";
            s += row[i];
        }
        s += "\n";
    }
    return s;
}

// --- commands ---------------------------------------------------------------

void cmd_params(const GlobalOpts& g) {
    const DeviceConfig cfg = resolve_config(g);
    const DeviceParams dev = make_device(cfg);
    ojson meta = meta_base("params", cfg, g);

    const std::vector<std::pair<std::string, double>> entries = {
        {"v_m_per_s", dev.v},
        {"impedance_ohm", dev.impedance},
        {"l2_mm", dev.l2_mm()},
        {"l3_mm", dev.l3_mm()},
        {"cs_ff", dev.cs_ff()},
        {"ic_ua", dev.ic_ua()},
        {"es_joules", dev.es},
        {"cap_per_len_f_per_m", dev.cap_per_len},
        {"ind_per_len_h_per_m", dev.ind_per_len},
        {"omega2_rad_per_s", dev.omega2},
        {"omega2_ghz", dev.omega2_ghz()},
    };

    if (g.format == "json") {
        ojson root;
        root["meta"] = meta;
        for (const auto& [k, val] : entries) root[k] = val;
        emit(g, root.dump(2) + "\n");
        return;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& [k, val] : entries) rows.push_back({k, fmt12(val)});
    emit(g, render_table(g, meta, {"key", "value"}, rows));
}

void cmd_omega3_sweep(const GlobalOpts& g, double flux_min, double flux_max,
                      std::size_t points) {
    if (!(flux_min < flux_max)) throw ValidationError("flux range must satisfy min < max");
    if (points < 2) throw ValidationError("points must be at least 2");
    const DeviceConfig cfg = resolve_config(g);
    const DeviceParams dev = make_device(cfg);
    ojson meta = meta_base("omega3-sweep", cfg, g);
    meta["flux_min"] = flux_min;
    meta["flux_max"] = flux_max;
    meta["points"] = points;

    std::vector<std::vector<std::string>> rows;
    rows.reserve(points);
    for (std::size_t i = 0; i < points; ++i) {
        const double flux =
            flux_min + (flux_max - flux_min) * static_cast<double>(i) /
                           static_cast<double>(points - 1);
        const double w3 = omega3(dev, BoundaryCondition::from_flux(flux));
        rows.push_back({fmt12(flux), fmt12(w3 / ghz), fmt12(dev.omega2_ghz())});
    }
    emit(g, render_table(g, meta, {"flux_over_flux_quantum", "omega3_ghz", "omega2_ghz"},
                         rows));
}

void cmd_spectrum(const GlobalOpts& g, const BcArgs& bca, double fmin_ghz,
                  double fmax_ghz, std::size_t points) {
    const DeviceConfig cfg = resolve_config(g);
    const DeviceParams dev = make_device(cfg);
    const BoundaryCondition bc = resolve_bc(dev, bca);
    ojson meta = meta_base("spectrum", cfg, g);
    add_bc_meta(meta, bca);
    meta["phi_ex_rad"] = bc.phi_ex;
    meta["fmin_ghz"] = fmin_ghz;
    meta["fmax_ghz"] = fmax_ghz;
    meta["points"] = points;

    const Spectrum spec = compute_spectrum(dev, bc, fmin_ghz * ghz, fmax_ghz * ghz, points);
    std::vector<std::vector<std::string>> rows;
    rows.reserve(spec.omega_grid.size());
    for (std::size_t i = 0; i < spec.omega_grid.size(); ++i)
        rows.push_back({fmt12(spec.omega_grid[i] / ghz), fmt12(spec.phase_shift[i]),
                        fmt12(spec.phase_unwrapped[i]), fmt12(spec.e_over_p[i])});
    emit(g, render_table(
                g, meta,
                {"freq_ghz", "phase_rad", "phase_unwrapped_rad", "e_over_p_s"}, rows));
}

void cmd_cavity(const GlobalOpts& g, const BcArgs& bca) {
    const DeviceConfig cfg = resolve_config(g);
    const DeviceParams dev = make_device(cfg);
    const BoundaryCondition bc = resolve_bc(dev, bca);
    ojson meta = meta_base("cavity", cfg, g);
    add_bc_meta(meta, bca);

    const double w3 = omega3(dev, bc);
    ojson root;
    root["meta"] = meta;
    root["phi_ex_rad"] = bc.phi_ex;
    root["flux_over_flux_quantum"] = bc.flux_over_flux_quantum();
    root["omega3_ghz"] = w3 / ghz;
    root["omega2_ghz"] = dev.omega2_ghz();

    std::optional<CavityParams> phase, energy;
    std::string status = "ok";
    try {
        phase = extract_from_phase(dev, bc);
    } catch (const DecoupledError& e) {
        status = "decoupled";
        root["decoupled"] = true;
        root["note"] = "kappa below numerical floor";
        root["detuning_ghz"] = e.detuning / ghz;
    } catch (const NumericsError&) {
        // phase crossings not bracketed: fall back to the energy method
        status = "phase_failed";
    }
    if (status != "decoupled") {
        try {
            energy = extract_from_energy(dev, bc);
        } catch (const NumericsError&) {
            if (!phase) throw;  // both methods failed
        }
    }

    if (status != "decoupled") {
        root["decoupled"] = false;
        const auto& win = phase ? *phase : *energy;
        root["window_ghz"] = {win.window.first / ghz, win.window.second / ghz};
        if (phase)
            root["phase"] = {{"omega_c_ghz", phase->omega_c / ghz},
                             {"kappa_ghz", phase->kappa / ghz}};
        if (energy)
            root["energy"] = {{"omega_c_ghz", energy->omega_c / ghz},
                              {"kappa_ghz", energy->kappa / ghz}};
        if (phase && energy)
            root["agreement"] = {
                {"omega_c_rel_diff",
                 std::abs(phase->omega_c - energy->omega_c) / phase->omega_c},
                {"kappa_rel_diff", std::abs(phase->kappa - energy->kappa) / phase->kappa}};
        if (phase)
            root["lorentzian_residual"] = lorentzian_residual(dev, bc, *phase);
        else
            root["note"] = "phase crossings not bracketed; energy method reported";
    }

    if (g.format == "json") {
        emit(g, root.dump(2) + "\n");
        return;
    }
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<std::vector<std::string>> rows;
    auto row = [&](const char* name, const std::optional<CavityParams>& p) {
        rows.push_back({name, fmt12(p ? p->omega_c / ghz : nan),
                        fmt12(p ? p->kappa / ghz : nan),
                        fmt12(p ? p->window.first / ghz : nan),
                        fmt12(p ? p->window.second / ghz : nan),
                        status == "decoupled" ? "decoupled" : (p ? "ok" : "failed")});
    };
    row("phase", phase);
    row("energy", energy);
    emit(g, render_table(g, meta,
                         {"method", "omega_c_ghz", "kappa_ghz", "window_lo_ghz",
                          "window_hi_ghz", "status"},
                         rows));
}

void cmd_cavity_sweep(const GlobalOpts& g, double f3_min_ghz, double f3_max_ghz,
                      std::size_t points) {
    if (!(f3_min_ghz < f3_max_ghz))
        throw ValidationError("omega3 range must satisfy min < max");
    if (points < 2) throw ValidationError("points must be at least 2");
    const DeviceConfig cfg = resolve_config(g);
    const DeviceParams dev = make_device(cfg);
    ojson meta = meta_base("cavity-sweep", cfg, g);
    meta["f3_min_ghz"] = f3_min_ghz;
    meta["f3_max_ghz"] = f3_max_ghz;
    meta["points"] = points;

    std::vector<double> targets;
    targets.reserve(points);
    for (std::size_t i = 0; i < points; ++i)
        targets.push_back((f3_min_ghz + (f3_max_ghz - f3_min_ghz) *
                                            static_cast<double>(i) /
                                            static_cast<double>(points - 1)) *
                          ghz);

    const auto sweep = sweep_vs_boundary(dev, targets);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<std::vector<std::string>> rows;
    rows.reserve(sweep.size());
    for (const auto& r : sweep) {
        rows.push_back({fmt12(r.omega3_target / ghz),
                        fmt12(r.phase ? r.phase->omega_c / ghz : nan),
                        fmt12(r.phase ? r.phase->kappa / ghz : nan),
                        fmt12(r.energy ? r.energy->omega_c / ghz : nan),
                        fmt12(r.energy ? r.energy->kappa / ghz : nan), r.status});
    }
    emit(g, render_table(g, meta,
                         {"omega3_ghz", "omega_c_phase_ghz", "kappa_phase_ghz",
                          "omega_c_energy_ghz", "kappa_energy_ghz", "status"},
                         rows));
}

void cmd_ncrit(const GlobalOpts& g, double l3_min_mm, double l3_max_mm,
               std::size_t points) {
    if (!(l3_min_mm <= l3_max_mm))
        throw ValidationError("l3 range must satisfy min <= max");
    if (points < 1) throw ValidationError("points must be at least 1");
    if (points == 1 && l3_min_mm != l3_max_mm)
        throw ValidationError("a single point needs l3-min-mm == l3-max-mm");
    const DeviceConfig cfg = resolve_config(g);
    const DeviceParams dev = make_device(cfg);
    ojson meta = meta_base("ncrit", cfg, g);
    meta["l3_min_mm"] = l3_min_mm;
    meta["l3_max_mm"] = l3_max_mm;
    meta["points"] = points;

    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<std::vector<std::string>> rows;
    rows.reserve(points);
    for (std::size_t i = 0; i < points; ++i) {
        const double l3_mm =
            points == 1 ? l3_min_mm
                        : l3_min_mm + (l3_max_mm - l3_min_mm) * static_cast<double>(i) /
                                          static_cast<double>(points - 1);
        try {
            const CriticalPhotonResult res = critical_photon_number(dev, l3_mm * 1e-3);
            rows.push_back({fmt12(l3_mm), fmt12(res.n_crit),
                            res.tunable_to_omega2 ? "true" : "false", "ok"});
        } catch (const NumericsError&) {
            rows.push_back({fmt12(l3_mm), fmt12(nan), "false", "divergent"});
        }
    }
    emit(g, render_table(g, meta, {"l3_mm", "n_crit", "tunable", "status"}, rows));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tunable cavity-waveguide coupler: spectra, cavity parameters, sweeps"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--config", g.config_path, "JSON device config file");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--output", g.output, "output path, '-' for stdout")
        ->capture_default_str();
    app.add_option("--v-m-per-s", g.v, "microwave phase velocity, m/s");
    app.add_option("--impedance-ohm", g.z, "characteristic impedance, Ohm");
    app.add_option("--l2-mm", g.l2, "length of Port 2, mm");
    app.add_option("--l3-mm", g.l3, "length of Port 3, mm");
    app.add_option("--cs-ff", g.cs, "junction capacitance, fF");
    app.add_option("--ic-ua", g.ic, "junction critical current, uA");
    app.set_version_flag("--version", stubcav::version);

    auto add_bc = [](CLI::App* cmd, BcArgs& bca) {
        cmd->add_option("--phiex", bca.phiex, "SQUID phase, radians");
        cmd->add_option("--flux", bca.flux, "SQUID flux in flux quanta");
        cmd->add_option("--omega3-ghz", bca.omega3_ghz, "target stub resonance, GHz");
    };

    auto* c_params = app.add_subcommand("params", "resolved device parameters");

    auto* c_o3 = app.add_subcommand("omega3-sweep", "stub resonance vs flux");
    double flux_min = 0.0, flux_max = 1.0;
    std::size_t o3_points = 201;
    c_o3->add_option("--flux-min", flux_min, "")->capture_default_str();
    c_o3->add_option("--flux-max", flux_max, "")->capture_default_str();
    c_o3->add_option("--points", o3_points, "")->capture_default_str();

    auto* c_spec = app.add_subcommand("spectrum", "phase-shift and E/P spectrum");
    BcArgs spec_bc;
    add_bc(c_spec, spec_bc);
    double fmin_ghz = 9.0, fmax_ghz = 11.0;
    std::size_t spec_points = 2001;
    c_spec->add_option("--fmin-ghz", fmin_ghz, "")->capture_default_str();
    c_spec->add_option("--fmax-ghz", fmax_ghz, "")->capture_default_str();
    c_spec->add_option("--points", spec_points, "")->capture_default_str();

    auto* c_cav = app.add_subcommand("cavity", "extract omega_c and kappa, both methods");
    BcArgs cav_bc;
    add_bc(c_cav, cav_bc);

    auto* c_cs = app.add_subcommand("cavity-sweep", "cavity parameters vs omega3");
    double f3_min = 9.0, f3_max = 9.95;
    std::size_t cs_points = 20;
    c_cs->add_option("--f3-min-ghz", f3_min, "")->capture_default_str();
    c_cs->add_option("--f3-max-ghz", f3_max, "")->capture_default_str();
    c_cs->add_option("--points", cs_points, "")->capture_default_str();

    auto* c_nc = app.add_subcommand("ncrit", "critical photon number vs L3");
    double l3_min = 0.5, l3_max = 4.99;
    std::size_t nc_points = 150;
    c_nc->add_option("--l3-min-mm", l3_min, "")->capture_default_str();
    c_nc->add_option("--l3-max-mm", l3_max, "")->capture_default_str();
    c_nc->add_option("--points", nc_points, "")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_params->parsed()) cmd_params(g);
        if (c_o3->parsed()) cmd_omega3_sweep(g, flux_min, flux_max, o3_points);
        if (c_spec->parsed()) cmd_spectrum(g, spec_bc, fmin_ghz, fmax_ghz, spec_points);
        if (c_cav->parsed()) cmd_cavity(g, cav_bc);
        if (c_cs->parsed()) cmd_cavity_sweep(g, f3_min, f3_max, cs_points);
        if (c_nc->parsed()) cmd_ncrit(g, l3_min, l3_max, nc_points);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NumericsError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const DecoupledError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NotDecoupledError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
