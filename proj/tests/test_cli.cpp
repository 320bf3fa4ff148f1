#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string kCli = FOCKPS_CLI_PATH;

struct Run {
    int exit_code = -1;
    std::string out;
    std::string err;
};

Run run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path dir = fs::temp_directory_path() / "fockps_cli_test";
    fs::create_directories(dir);
    const fs::path out = dir / ("out" + std::to_string(counter) + ".txt");
    const fs::path err = dir / ("err" + std::to_string(counter) + ".txt");
    ++counter;
    const std::string cmd =
        kCli + " " + args + " > " + out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    Run r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path temp_path(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "fockps_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("info reports the bottom region with full information") {
    const Run r = run_cli("info --mu 0.1 --delta 1.5707963267948966 --eta-l 0.02");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("region       = bottom") != std::string::npos);
    CHECK(r.out.find("I            = 1\n") != std::string::npos);
}

TEST_CASE("info validates parameters with exit code 2") {
    const Run r = run_cli("info --mu 0 --delta 1.5707963267948966 --eta-l 0.5");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("invalid parameters") != std::string::npos);
}

TEST_CASE("json report carries the same numbers as the human output") {
    const Run human = run_cli("info --mu 0.1 --delta 1.5707963267948966 --eta-l 0.3");
    const Run machine = run_cli("--json info --mu 0.1 --delta 1.5707963267948966 --eta-l 0.3");
    CHECK(machine.exit_code == 0);
    const json doc = json::parse(machine.out);
    CHECK(doc["schema_version"] == "1.0");
    CHECK(doc["command"] == "info");
    // round-trips losslessly
    CHECK(json::parse(doc.dump()) == doc);
    const double chi = doc["outputs"]["chi"].get<double>();
    std::ostringstream line;
    line << "chi          = ";
    CHECK(human.out.find(line.str()) != std::string::npos);
    const auto pos = human.out.find(line.str());
    const auto endl_ = human.out.find('\n', pos);
    const std::string printed = human.out.substr(pos + line.str().size(), endl_ - pos - line.str().size());
    CHECK(std::stod(printed) == doctest::Approx(chi).epsilon(1e-12));
}

TEST_CASE("sweep runs are byte-identical") {
    const fs::path a = temp_path("sweep_a.csv");
    const fs::path b = temp_path("sweep_b.csv");
    const std::string args =
        "sweep --mu-min 0.001 --mu-max 1 --mu-steps 12 --eta-min 0.001 --eta-max 1 "
        "--eta-steps 12 --delta 1.5707963267948966 --out ";
    CHECK(run_cli(args + a.string()).exit_code == 0);
    CHECK(run_cli(args + b.string()).exit_code == 0);
    const std::string ca = read_file(a);
    CHECK(!ca.empty());
    CHECK(ca == read_file(b));
    CHECK(ca.rfind("mu,eta_L,delta,I,chi,region,z,eta1\n", 0) == 0);
}

TEST_CASE("serial and parallel sweeps write identical files") {
    const fs::path a = temp_path("sweep_par.csv");
    const fs::path b = temp_path("sweep_ser.csv");
    const std::string args =
        "sweep --mu-min 0.01 --mu-max 0.9 --mu-steps 10 --eta-min 0.01 --eta-max 0.9 "
        "--eta-steps 10 --delta 0.7853981633974483 --out ";
    CHECK(run_cli(args + a.string()).exit_code == 0);
    CHECK(run_cli(args + b.string() + " --serial").exit_code == 0);
    CHECK(read_file(a) == read_file(b));
}

TEST_CASE("sweep reports I/O failures with exit code 3") {
    const Run r = run_cli(
        "sweep --mu-min 0.01 --mu-max 0.9 --mu-steps 4 --eta-min 0.01 --eta-max 0.9 "
        "--eta-steps 4 --delta 1.0 --out /nonexistent_dir_fockps/x.csv");
    CHECK(r.exit_code == 3);
}

TEST_CASE("boundary command writes the expected header") {
    const fs::path out = temp_path("boundary.csv");
    const Run r = run_cli("boundary --delta 1.5707963267948966 --mu-min 0.05 --mu-max 0.9 "
                          "--mu-steps 8 --out " + out.string());
    CHECK(r.exit_code == 0);
    CHECK(read_file(out).rfind("mu,top_eta,bottom_eta,iso_eta\n", 0) == 0);
}

TEST_CASE("critical command reports the known values") {
    const Run r = run_cli("--json critical");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["outputs"]["mu_star"].get<double>() == doctest::Approx(0.34044).epsilon(2e-3));
    CHECK(doc["outputs"]["analytic_bound"].get<double>() ==
          doctest::Approx(0.346574).epsilon(1e-5));
}

TEST_CASE("verify passes with default tolerances and is seed-stable") {
    const Run a = run_cli("--seed 7 verify --samples 40");
    CHECK(a.exit_code == 0);
    const Run b = run_cli("--seed 7 verify --samples 40");
    CHECK(a.out == b.out);
    const json doc = json::parse(a.out);
    CHECK(doc["outputs"]["all_passed"] == true);
}

TEST_CASE("verify fails with a counterexample under a corrupted tolerance") {
    const Run r = run_cli("--seed 7 verify --samples 40 --tol-scale 1e-9");
    CHECK(r.exit_code == 1);
    const json doc = json::parse(r.out);
    CHECK(doc["outputs"]["all_passed"] == false);
    bool found = false;
    for (const auto& suite : doc["outputs"]["suites"]) {
        if (!suite["passed"].get<bool>()) {
            found = suite.contains("counterexample");
            if (found) break;
        }
    }
    CHECK(found);
}

TEST_CASE("mzi protocol output equals the canonical info output") {
    const Run proto = run_cli(
        "--json protocol --family mzi --alpha 0.3 --delta 1.5707963267948966 --eta-l 0.02");
    const Run info = run_cli("--json info --mu 0.09 --delta 1.5707963267948966 --eta-l 0.02");
    CHECK(proto.exit_code == 0);
    const json p = json::parse(proto.out);
    const json i = json::parse(info.out);
    for (const char* key : {"I", "chi", "region", "rate_residual"}) {
        CHECK(p["outputs"][key] == i["outputs"][key]);
    }
    CHECK(p["outputs"]["plan"] == i["outputs"]["plan"]);
}

TEST_CASE("phase-matching protocol verifies orthogonality") {
    const Run r = run_cli("--json protocol --family phase-matching --alpha 0.4 --theta 0.3 "
                          "--phi 1.1 --theta-e 2.2 --n-max 6 --eta-l 0.02");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["outputs"]["orthogonality_max_abs"].get<double>() < 1e-10);
}

TEST_CASE("scw protocol emits the per-sideband table and power budget") {
    const Run r = run_cli("--json protocol --family scw --alpha0-sq 0.5 --m 0.5 "
                          "--s-modes 40 --delta 1.5707963267948966 --eta-l 0.002");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["outputs"]["power_budget_ok"] == true);
    CHECK(doc["outputs"]["pairs"].size() == 80);
    CHECK(doc["outputs"]["reference_power"].get<double>() ==
          doctest::Approx(0.5 * 0.880725579103).epsilon(1e-6));
    const double agg = doc["outputs"]["aggregate_I_capped"].get<double>();
    CHECK(agg >= 0.0);
    CHECK(agg <= 1.0);
}

TEST_CASE("config file presets options and flags override it") {
    const fs::path cfg = temp_path("preset.cfg");
    {
        std::ofstream out(cfg);
        out << "mode=exact\n";
        out << "tail-tol=1e-10\n";
    }
    const Run preset = run_cli("--json --config " + cfg.string() +
                               " info --mu 0.2 --delta 1.0 --eta-l 0.3");
    CHECK(preset.exit_code == 0);
    const json a = json::parse(preset.out);
    CHECK(a["provenance"]["mode"] == "exact");
    CHECK(a["provenance"]["tail_tol"].get<double>() == doctest::Approx(1e-10));

    const Run override_run = run_cli("--json --config " + cfg.string() +
                                     " --mode approx info --mu 0.2 --delta 1.0 --eta-l 0.3");
    CHECK(override_run.exit_code == 0);
    const json b = json::parse(override_run.out);
    CHECK(b["provenance"]["mode"] == "approx");
}

TEST_CASE("exact mode yields a vanishing rate residual through the cli") {
    const Run r = run_cli("--json --mode exact info --mu 0.7 --delta 1.0 --eta-l 0.4");
    CHECK(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(std::abs(doc["outputs"]["rate_residual"].get<double>()) < 1e-12);
}
