// Drives the built CLI binary (path in the STUBCAV_BIN environment
// variable) and checks output formats, determinism, and exit codes.

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

std::string binary() {
    const char* bin = std::getenv("STUBCAV_BIN");
    REQUIRE(bin != nullptr);
    return bin;
}

RunResult run(const std::string& args) {
    const std::string cmd = binary() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json run_json(const std::string& args, int expected_exit = 0) {
    const RunResult r = run(args + " --format json");
    INFO(r.output);
    REQUIRE(r.exit_code == expected_exit);
    return nlohmann::json::parse(r.output);
}

}  // namespace

TEST_CASE("params reports the reference device") {
    const auto j = run_json("params");
    CHECK(j["omega2_ghz"].get<double>() == Catch::Approx(10.0).epsilon(1e-12));
    CHECK(j["cap_per_len_f_per_m"].get<double>() == Catch::Approx(2e-10).epsilon(1e-12));
    CHECK(j["ind_per_len_h_per_m"].get<double>() == Catch::Approx(5e-7).epsilon(1e-12));
    CHECK(j["l2_mm"].get<double>() == 2.5);
    CHECK(j["ic_ua"].get<double>() == 5.0);
}

TEST_CASE("device flags override defaults") {
    const auto j = run_json("params --l2-mm 5");
    CHECK(j["omega2_ghz"].get<double>() == Catch::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("config file overrides defaults, flags override the file") {
    const std::string path = "cli_test_config.json";
    {
        FILE* f = std::fopen(path.c_str(), "w");
        REQUIRE(f != nullptr);
        std::fputs("{\"l2_mm\": 5.0, \"impedance_ohm\": 25.0}", f);
        std::fclose(f);
    }
    auto j = run_json("params --config " + path);
    CHECK(j["omega2_ghz"].get<double>() == Catch::Approx(5.0).epsilon(1e-12));
    CHECK(j["impedance_ohm"].get<double>() == 25.0);
    j = run_json("params --config " + path + " --l2-mm 2.5");
    CHECK(j["omega2_ghz"].get<double>() == Catch::Approx(10.0).epsilon(1e-12));
    std::remove(path.c_str());
}

TEST_CASE("unknown config keys are rejected") {
    const std::string path = "cli_test_bad_config.json";
    {
        FILE* f = std::fopen(path.c_str(), "w");
        REQUIRE(f != nullptr);
        std::fputs("{\"l2_millimeters\": 5.0}", f);
        std::fclose(f);
    }
    const RunResult r = run("params --config " + path);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("unknown config key") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("validation failures exit with code 2 and name the field") {
    const RunResult r = run("params --cs-ff -1");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("cs must be positive") != std::string::npos);
}

TEST_CASE("untunable spectrum target exits with code 2") {
    const RunResult r = run("spectrum --omega3-ghz 12");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("target untunable") != std::string::npos);
}

TEST_CASE("boundary condition must be given exactly once") {
    CHECK(run("spectrum").exit_code == 2);
    CHECK(run("spectrum --phiex 1 --flux 0.2").exit_code == 2);
    CHECK(run("cavity --phiex 1 --omega3-ghz 9.9 --flux 0.1").exit_code == 2);
}

TEST_CASE("omega3 sweep covers the tunable range") {
    const RunResult r = run("omega3-sweep --points 11");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.rfind("# stubcav", 0) == 0);
    CHECK(r.output.find("flux_over_flux_quantum,omega3_ghz,omega2_ghz") != std::string::npos);
    // first row: flux 0 -> 10.94598...; last row: flux 1 -> same by symmetry
    CHECK(r.output.find("1.09459801707e+01") != std::string::npos);
    // a 0.5 flux row reaches the lower end 4.56718... GHz
    CHECK(r.output.find("4.56718462907e+00") != std::string::npos);
    CHECK(r.output.find('\r') == std::string::npos);  // LF endings only
}

TEST_CASE("omega3 sweep is symmetric about half a flux quantum") {
    const auto j = run_json("omega3-sweep --points 5");
    const auto& rows = j["rows"];
    REQUIRE(rows.size() == 5);
    CHECK(rows[1][1] == rows[3][1]);  // flux 0.25 and 0.75
    CHECK(rows[0][1] == rows[4][1]);  // flux 0 and 1
}

TEST_CASE("identical configurations produce byte-identical output") {
    const std::string args = "cavity-sweep --f3-min-ghz 9.5 --f3-max-ghz 9.9 --points 5";
    const RunResult a = run(args);
    const RunResult b = run(args);
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("cavity reports both methods in agreement") {
    const auto j = run_json("cavity --omega3-ghz 9.9");
    CHECK(j["decoupled"].get<bool>() == false);
    const double fc_p = j["phase"]["omega_c_ghz"].get<double>();
    const double fc_e = j["energy"]["omega_c_ghz"].get<double>();
    CHECK(fc_p == Catch::Approx(9.932320588).epsilon(1e-8));
    CHECK(fc_e == Catch::Approx(fc_p).epsilon(1e-3));
    CHECK(j["agreement"]["kappa_rel_diff"].get<double>() < 0.05);
    const double k_ghz = j["phase"]["kappa_ghz"].get<double>();
    CHECK(k_ghz == Catch::Approx(2921746.54 / (2e9 * 3.14159265358979)).epsilon(1e-4));
}

TEST_CASE("cavity at the decoupling point reports a structured result") {
    const auto j = run_json("cavity --omega3-ghz 10");
    CHECK(j["decoupled"].get<bool>() == true);
    CHECK(j["note"].get<std::string>() == "kappa below numerical floor");
}

TEST_CASE("cavity at maximal detuning reports gigahertz kappa") {
    const auto j = run_json("cavity --phiex 3.14159265358979");
    const double k_ghz = j["phase"]["kappa_ghz"].get<double>();
    CHECK(k_ghz > 0.5);
    CHECK(k_ghz < 3.0);
}

TEST_CASE("cavity-sweep flags the decoupled row and keeps the others") {
    // 5 points from 9.9 to 10.1 puts one row exactly on omega2
    const RunResult r = run("cavity-sweep --f3-min-ghz 9.9 --f3-max-ghz 10.1 --points 5");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("decoupled") != std::string::npos);
    std::size_t ok_rows = 0;
    for (std::size_t pos = 0; (pos = r.output.find(",ok\n", pos)) != std::string::npos; ++pos)
        ++ok_rows;
    CHECK(ok_rows == 4);
}

TEST_CASE("ncrit endpoints match the closed form") {
    const RunResult r = run("ncrit --l3-min-mm 2.5 --l3-max-mm 4.5 --points 2");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("3.22660093044e+01") != std::string::npos);
    CHECK(r.output.find("4.73051650625e+02") != std::string::npos);
    const RunResult far = run("ncrit --l3-min-mm 4.95 --l3-max-mm 4.95 --points 1");
    REQUIRE(far.exit_code == 0);
    CHECK(far.output.find("false") != std::string::npos);
    const RunResult div = run("ncrit --l3-min-mm 5.0 --l3-max-mm 5.0 --points 1");
    REQUIRE(div.exit_code == 0);
    CHECK(div.output.find("divergent") != std::string::npos);
}

TEST_CASE("spectrum output reproduces the resonance window") {
    const RunResult r =
        run("spectrum --omega3-ghz 9.9 --fmin-ghz 9.0 --fmax-ghz 11.0 --points 2001");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("freq_ghz,phase_rad,phase_unwrapped_rad,e_over_p_s") !=
          std::string::npos);
    // count data rows
    std::size_t rows = 0;
    std::size_t pos = 0;
    while ((pos = r.output.find('\n', pos)) != std::string::npos) {
        ++pos;
        ++rows;
    }
    CHECK(rows == 2001 + 4);  // 3 metadata lines + header + data
}

TEST_CASE("output lands in a file when requested") {
    const std::string path = "cli_test_out.csv";
    const RunResult r = run("params --output " + path);
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.empty());
    FILE* f = std::fopen(path.c_str(), "rb");
    REQUIRE(f != nullptr);
    std::fclose(f);
    std::remove(path.c_str());
}
