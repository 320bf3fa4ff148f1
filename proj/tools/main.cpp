#include "fockps/attack.hpp"
#include "fockps/infocalc.hpp"
#include "fockps/projection.hpp"
#include "fockps/protocols.hpp"
#include "fockps/report.hpp"
#include "fockps/sweep.hpp"
#include "fockps/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

namespace {

using fockps::Json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitIo = 3;

struct GlobalOptions {
    bool json = false;
    std::string mode = "approx";
    std::string branch = "plus";
    double tail_tol = 1e-12;
    std::uint64_t seed = 20240915;
};

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    out.exceptions(std::ofstream::failbit | std::ofstream::badbit);
    out << contents;
}

void emit(const Json& report, bool as_json, const std::string& human) {
    if (as_json) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << human;
    }
}

Json provenance(const GlobalOptions& g) {
    return Json{{"mode", g.mode},
                {"branch", g.branch},
                {"tail_tol", fockps::round_sig12(g.tail_tol)},
                {"seed", g.seed}};
}

Json plan_json(const fockps::SplitPlan& plan) {
    return Json{{"eta1", fockps::round_sig12(plan.eta1)},
                {"eta2", fockps::round_sig12(plan.eta2)},
                {"z", fockps::round_sig12(plan.z)},
                {"branch", fockps::to_string(plan.branch)},
                {"mode", fockps::to_string(plan.mode)}};
}

struct PointOutputs {
    fockps::RegionReport report;
    fockps::SplitPlan plan;
    double rate_residual = 0.0;
};

PointOutputs evaluate_point(double mu, double delta, double eta_L, const GlobalOptions& g) {
    const fockps::AttackPoint point{mu, delta, eta_L};
    point.validate();
    PointOutputs out;
    out.plan = fockps::solve_split(mu, eta_L, fockps::mode_from_string(g.mode),
                                   fockps::branch_from_string(g.branch));
    out.rate_residual = fockps::verify_rate_condition(out.plan, mu, eta_L);
    out.report = fockps::classify_region(point);
    // region algebra is fixed; I follows the requested plan
    out.report.info_I = fockps::attack_information(point, out.plan, g.tail_tol);
    return out;
}

Json point_outputs_json(const PointOutputs& o) {
    return Json{{"I", fockps::round_sig12(o.report.info_I)},
                {"chi", fockps::round_sig12(o.report.chi)},
                {"region", fockps::to_string(o.report.region)},
                {"top_boundary_eta", fockps::round_sig12(o.report.top_boundary_eta)},
                {"bottom_boundary_eta", fockps::round_sig12(o.report.bottom_boundary_eta)},
                {"rate_residual", fockps::round_sig12(o.rate_residual)},
                {"plan", plan_json(o.plan)}};
}

std::string point_outputs_human(const PointOutputs& o) {
    std::string s;
    s += "I            = " + fockps::format_sig12(o.report.info_I) + "\n";
    s += "chi          = " + fockps::format_sig12(o.report.chi) + "\n";
    s += "region       = " + fockps::to_string(o.report.region) + "\n";
    s += "top_eta      = " + fockps::format_sig12(o.report.top_boundary_eta) + "\n";
    s += "bottom_eta   = " + fockps::format_sig12(o.report.bottom_boundary_eta) + "\n";
    s += "z            = " + fockps::format_sig12(o.plan.z) + "\n";
    s += "eta1         = " + fockps::format_sig12(o.plan.eta1) + "\n";
    s += "eta2         = " + fockps::format_sig12(o.plan.eta2) + "\n";
    s += "rate_residual = " + fockps::format_sig12(o.rate_residual) + "\n";
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Post-selective Fock-subspace attack analysis for phase-encoded "
                 "coherent-state QKD"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value file presetting options (flags override)");

    GlobalOptions g;
    app.add_flag("--json", g.json, "emit a JSON report instead of human-readable text");
    app.add_option("--mode", g.mode, "split solver mode")
        ->check(CLI::IsMember({"approx", "exact"}))
        ->capture_default_str();
    app.add_option("--branch", g.branch, "splitting-coefficient branch")
        ->check(CLI::IsMember({"plus", "minus"}))
        ->capture_default_str();
    app.add_option("--tail-tol", g.tail_tol, "Poisson tail tolerance for the information series")
        ->capture_default_str();
    app.add_option("--seed", g.seed, "seed for the verification suites")->capture_default_str();

    // info
    auto* info = app.add_subcommand("info", "single-point report: I, chi, region, split plan");
    double mu = 0.0, delta = std::numbers::pi / 2.0, eta_L = 0.0;
    info->add_option("--mu", mu, "mean photon number |alpha|^2")->required();
    info->add_option("--delta", delta, "half phase difference (radians)")->required();
    info->add_option("--eta-l", eta_L, "expected channel transmission")->required();

    // sweep
    auto* sweep = app.add_subcommand("sweep", "grid sweep over (mu, eta_L); writes CSV");
    fockps::SweepSpec spec;
    std::string out_path;
    std::string mu_scale = "linear", eta_scale = "linear";
    bool serial = false;
    sweep->add_option("--mu-min", spec.mu_min)->capture_default_str();
    sweep->add_option("--mu-max", spec.mu_max)->capture_default_str();
    sweep->add_option("--mu-steps", spec.mu_steps)->capture_default_str();
    sweep->add_option("--eta-min", spec.eta_min)->capture_default_str();
    sweep->add_option("--eta-max", spec.eta_max)->capture_default_str();
    sweep->add_option("--eta-steps", spec.eta_steps)->capture_default_str();
    sweep->add_option("--delta", spec.delta, "half phase difference (radians)")->required();
    sweep->add_option("--mu-scale", mu_scale)->check(CLI::IsMember({"linear", "log"}));
    sweep->add_option("--eta-scale", eta_scale)->check(CLI::IsMember({"linear", "log"}));
    sweep->add_option("--out", out_path, "output CSV path")->required();
    sweep->add_flag("--serial", serial, "use the serial reference kernel");

    // boundary
    auto* boundary = app.add_subcommand("boundary", "per-mu region boundaries; writes CSV");
    double b_delta = 0.0, b_mu_min = 1e-3, b_mu_max = 1.0;
    int b_steps = 100;
    std::string b_out;
    boundary->add_option("--delta", b_delta)->required();
    boundary->add_option("--mu-min", b_mu_min)->capture_default_str();
    boundary->add_option("--mu-max", b_mu_max)->capture_default_str();
    boundary->add_option("--mu-steps", b_steps)->capture_default_str();
    boundary->add_option("--out", b_out, "output CSV path")->required();

    // critical
    auto* critical = app.add_subcommand("critical", "critical mean photon number solve");

    // verify
    auto* verify = app.add_subcommand("verify", "run the oracle self-verification suites");
    int samples = 500;
    double tol_scale = 1.0;
    verify->add_option("--samples", samples)->capture_default_str();
    verify->add_option("--tol-scale", tol_scale,
                       "tolerance multiplier (tighten below 1 to exercise failures)")
        ->capture_default_str();

    // protocol
    auto* protocol = app.add_subcommand("protocol", "map a protocol family onto the attack model");
    std::string family;
    double p_alpha = 0.0, p_phi = 0.0, p_phi_j = 0.0, p_theta = 0.0, p_theta_e = 0.0;
    double p_delta = std::numbers::pi / 2.0, p_eta = 0.0;
    double p_alpha0_sq = 0.0, p_m = 0.0, p_beta_scale = 1.0;
    int p_smodes = 40, p_nmax = 6;
    std::string p_basis = "L";
    protocol->add_option("--family", family, "protocol family")
        ->check(CLI::IsMember({"mzi", "phase-time", "phase-matching", "scw"}))
        ->required();
    protocol->add_option("--alpha", p_alpha, "signal modulus |alpha|");
    protocol->add_option("--phi", p_phi, "encoding phase (phase-time: phi_i)");
    protocol->add_option("--phi-j", p_phi_j, "second encoding phase (phase-time)");
    protocol->add_option("--theta", p_theta, "sender global phase (phase-matching)");
    protocol->add_option("--theta-e", p_theta_e, "eavesdropper reference phase");
    protocol->add_option("--basis", p_basis, "time-slot basis")->check(CLI::IsMember({"L", "R"}));
    protocol->add_option("--alpha0-sq", p_alpha0_sq, "carrier power |alpha_0|^2 (scw)");
    protocol->add_option("--m", p_m, "modulation index (scw)");
    protocol->add_option("--s-modes", p_smodes, "sideband count S (scw)");
    protocol->add_option("--beta-scale", p_beta_scale, "beta mapping scale (scw)");
    protocol->add_option("--n-max", p_nmax, "largest photon number for adapter checks");
    protocol->add_option("--delta", p_delta, "half phase difference (radians)");
    protocol->add_option("--eta-l", p_eta, "expected channel transmission");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (*info) {
            const PointOutputs o = evaluate_point(mu, delta, eta_L, g);
            const Json report = fockps::make_report(
                "info",
                Json{{"mu", fockps::round_sig12(mu)},
                     {"delta", fockps::round_sig12(delta)},
                     {"eta_L", fockps::round_sig12(eta_L)}},
                point_outputs_json(o), provenance(g));
            emit(report, g.json, point_outputs_human(o));
            return kExitOk;
        }

        if (*sweep) {
            spec.mode = fockps::mode_from_string(g.mode);
            spec.branch = fockps::branch_from_string(g.branch);
            spec.tail_tol = g.tail_tol;
            spec.mu_scale = fockps::scale_from_string(mu_scale);
            spec.eta_scale = fockps::scale_from_string(eta_scale);
            const auto rows = fockps::run_sweep(
                spec, serial ? fockps::Execution::serial : fockps::Execution::parallel);
            write_file(out_path, fockps::sweep_csv(rows));
            const Json report = fockps::make_report(
                "sweep",
                Json{{"mu_min", spec.mu_min},
                     {"mu_max", spec.mu_max},
                     {"mu_steps", spec.mu_steps},
                     {"eta_min", spec.eta_min},
                     {"eta_max", spec.eta_max},
                     {"eta_steps", spec.eta_steps},
                     {"delta", fockps::round_sig12(spec.delta)},
                     {"mu_scale", mu_scale},
                     {"eta_scale", eta_scale}},
                Json{{"rows", rows.size()}, {"out", out_path}}, provenance(g));
            emit(report, g.json,
                 "wrote " + std::to_string(rows.size()) + " rows to " + out_path + "\n");
            return kExitOk;
        }

        if (*boundary) {
            const auto rows = fockps::run_boundary(b_delta, b_mu_min, b_mu_max, b_steps);
            write_file(b_out, fockps::boundary_csv(rows));
            const Json report = fockps::make_report(
                "boundary",
                Json{{"delta", fockps::round_sig12(b_delta)},
                     {"mu_min", b_mu_min},
                     {"mu_max", b_mu_max},
                     {"mu_steps", b_steps}},
                Json{{"rows", rows.size()}, {"out", b_out}}, provenance(g));
            emit(report, g.json,
                 "wrote " + std::to_string(rows.size()) + " rows to " + b_out + "\n");
            return kExitOk;
        }

        if (*critical) {
            const fockps::CriticalPoint c = fockps::critical_mu();
            const Json report = fockps::make_report(
                "critical", Json::object(),
                Json{{"mu_star", fockps::round_sig12(c.mu_star)},
                     {"delta_star", fockps::round_sig12(c.delta_star)},
                     {"delta_star_over_pi",
                      fockps::round_sig12(c.delta_star / std::numbers::pi)},
                     {"analytic_bound", fockps::round_sig12(c.analytic_bound)}},
                provenance(g));
            emit(report, g.json,
                 "mu_star          = " + fockps::format_sig12(c.mu_star) + "\n" +
                     "delta_star       = " + fockps::format_sig12(c.delta_star) + " rad (" +
                     fockps::format_sig12(c.delta_star / std::numbers::pi) + " pi)\n" +
                     "analytic_bound   = " + fockps::format_sig12(c.analytic_bound) +
                     " (ln 2 / 2)\n");
            return kExitOk;
        }

        if (*verify) {
            fockps::VerifyOptions opts;
            opts.seed = g.seed;
            opts.samples = samples;
            opts.tol_scale = tol_scale;
            const fockps::VerifyResult result = fockps::run_verify(opts);
            Json suites = Json::array();
            for (const fockps::SuiteResult& s : result.suites) {
                Json j{{"name", s.name},
                       {"passed", s.passed},
                       {"samples", s.samples},
                       {"max_error", fockps::round_sig12(s.max_error)},
                       {"tolerance", fockps::round_sig12(s.tolerance)}};
                if (!s.passed) j["counterexample"] = s.counterexample;
                suites.push_back(std::move(j));
            }
            const Json report = fockps::make_report(
                "verify", Json{{"seed", opts.seed}, {"samples", opts.samples},
                               {"tol_scale", fockps::round_sig12(opts.tol_scale)}},
                Json{{"suites", std::move(suites)}, {"all_passed", result.all_passed()}},
                provenance(g));
            std::cout << report.dump(2) << "\n";  // machine-readable summary always
            return result.all_passed() ? kExitOk : kExitVerifyFailed;
        }

        if (*protocol) {
            Json inputs{{"family", family}, {"delta", fockps::round_sig12(p_delta)},
                        {"eta_L", fockps::round_sig12(p_eta)}};
            Json outputs;
            std::string human;

            if (family == "mzi") {
                inputs["alpha"] = fockps::round_sig12(p_alpha);
                const fockps::AttackPoint point =
                    fockps::mzi_to_canonical({p_alpha, p_phi}, p_eta, p_delta);
                const PointOutputs o = evaluate_point(point.mu, point.delta, point.eta_L, g);
                outputs = point_outputs_json(o);
                outputs["mu"] = fockps::round_sig12(point.mu);
                human = "mu           = " + fockps::format_sig12(point.mu) + "\n" +
                        point_outputs_human(o);
            } else if (family == "phase-time") {
                inputs["alpha"] = fockps::round_sig12(p_alpha);
                inputs["basis"] = p_basis;
                const auto basis = p_basis == "L" ? fockps::PhaseTimeParams::Basis::L
                                                  : fockps::PhaseTimeParams::Basis::R;
                double max_dev = 0.0;
                for (int n = 0; n <= p_nmax; ++n) {
                    const fockps::Complex got = fockps::pt_overlap_check(
                        {p_alpha, p_phi, basis}, {p_alpha, p_phi_j, basis}, n);
                    max_dev = std::max(
                        max_dev, std::abs(got - fockps::reduced_overlap(p_phi, p_phi_j, n)));
                }
                const PointOutputs o =
                    evaluate_point(p_alpha * p_alpha, p_delta, p_eta, g);
                outputs = point_outputs_json(o);
                outputs["mu"] = fockps::round_sig12(p_alpha * p_alpha);
                outputs["overlap_check_max_dev"] = fockps::round_sig12(max_dev);
                human = "overlap check max deviation = " + fockps::format_sig12(max_dev) +
                        " (n <= " + std::to_string(p_nmax) + ")\n" + point_outputs_human(o);
            } else if (family == "phase-matching") {
                inputs["alpha"] = fockps::round_sig12(p_alpha);
                fockps::PhaseMatchingParams p0;
                p0.mod_alpha = p_alpha;
                p0.theta_a = p_theta;
                p0.theta_b = p_theta;
                p0.phi_a = p_phi;
                p0.phi_b = p_phi;
                p0.theta_e = p_theta_e;
                fockps::PhaseMatchingParams p1 = p0;
                p1.p_a = 1;
                double max_offdiag = 0.0;
                for (int n = 1; n <= p_nmax; ++n) {
                    max_offdiag =
                        std::max(max_offdiag, std::abs(fockps::pm_reduced_overlap(p0, p1, n)));
                }
                const PointOutputs o =
                    evaluate_point(p_alpha * p_alpha, p_delta, p_eta, g);
                const double block =
                    fockps::pm_block_probability(p_alpha * p_alpha, o.plan.eta1);
                outputs = point_outputs_json(o);
                outputs["mu"] = fockps::round_sig12(p_alpha * p_alpha);
                outputs["orthogonality_max_abs"] = fockps::round_sig12(max_offdiag);
                outputs["block_probability"] = fockps::round_sig12(block);
                human = "orthogonality max |overlap| (n=1.." + std::to_string(p_nmax) +
                        ") = " + fockps::format_sig12(max_offdiag) + "\n" +
                        "two-sender block probability = " + fockps::format_sig12(block) +
                        "\n" + point_outputs_human(o);
            } else {  // scw
                inputs["alpha0_sq"] = fockps::round_sig12(p_alpha0_sq);
                inputs["m"] = fockps::round_sig12(p_m);
                inputs["s_modes"] = p_smodes;
                fockps::SCWParams sp;
                sp.mod_alpha0 = std::sqrt(p_alpha0_sq);
                sp.m = p_m;
                sp.s_modes = p_smodes;
                sp.theta_e = p_theta_e;
                sp.beta_scale = p_beta_scale;
                const fockps::SCWCanonical canon = fockps::scw_to_canonical(sp, p_eta, p_delta);
                Json pairs = Json::array();
                double aggregate = 0.0;
                human = "sideband pairs (p, mu_p, I_p, chi_p, region):\n";
                for (const auto& pair : canon.pairs) {
                    Json row{{"p", pair.p}, {"mu", fockps::round_sig12(pair.point.mu)}};
                    if (pair.point.mu > 0.0 && pair.point.mu < 2.0) {
                        const PointOutputs o = evaluate_point(pair.point.mu, pair.point.delta,
                                                              pair.point.eta_L, g);
                        row["I"] = fockps::round_sig12(o.report.info_I);
                        row["chi"] = fockps::round_sig12(o.report.chi);
                        row["region"] = fockps::to_string(o.report.region);
                        aggregate += o.report.info_I;
                        human += "  " + std::to_string(pair.p) + "  " +
                                 fockps::format_sig12(pair.point.mu) + "  " +
                                 fockps::format_sig12(o.report.info_I) + "  " +
                                 fockps::format_sig12(o.report.chi) + "  " +
                                 fockps::to_string(o.report.region) + "\n";
                    } else {
                        row["I"] = nullptr;  // vacuum sideband carries nothing
                        human += "  " + std::to_string(pair.p) + "  " +
                                 fockps::format_sig12(pair.point.mu) + "  -\n";
                    }
                    pairs.push_back(std::move(row));
                }
                outputs["pairs"] = std::move(pairs);
                outputs["reference_power"] = fockps::round_sig12(canon.reference_power);
                outputs["sideband_power"] = fockps::round_sig12(canon.sideband_power);
                outputs["power_budget_ok"] = true;  // scw_to_canonical throws otherwise
                // Aggregation across pairs is a modeling choice: the per-pulse
                // joint information is reported as the capped sum of per-pair terms.
                outputs["aggregate_I_capped"] = fockps::round_sig12(std::min(1.0, aggregate));
                human += "reference_power = " + fockps::format_sig12(canon.reference_power) +
                         "\n" + "sideband_power  = " +
                         fockps::format_sig12(canon.sideband_power) + "\n" +
                         "aggregate I (sum over pairs, capped at 1) = " +
                         fockps::format_sig12(std::min(1.0, aggregate)) + "\n";
            }

            const Json report =
                fockps::make_report("protocol", std::move(inputs), std::move(outputs),
                                    provenance(g));
            emit(report, g.json, human);
            return kExitOk;
        }
    } catch (const std::ios_base::failure& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitOk;
}
