#include "fockps/verify.hpp"

#include "fockps/attack.hpp"
#include "fockps/infocalc.hpp"
#include "fockps/projection.hpp"
#include "fockps/protocols.hpp"
#include "fockps/report.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace fockps {

namespace {

constexpr double kPi = std::numbers::pi;

struct Suite {
    SuiteResult result;

    explicit Suite(std::string name, double tolerance, double tol_scale) {
        result.name = std::move(name);
        result.tolerance = tolerance * tol_scale;
    }

    void check(double err, const std::string& inputs) {
        ++result.samples;
        if (err > result.max_error) result.max_error = err;
        if (err > result.tolerance && result.passed) {
            result.passed = false;
            result.counterexample = inputs;
        }
    }

    void check_bool(bool ok, const std::string& inputs) {
        check(ok ? 0.0 : 1.0, inputs);
    }
};

std::string describe(std::initializer_list<std::pair<const char*, double>> kv) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : kv) {
        if (!first) os << " ";
        first = false;
        os << k << "=" << format_sig12(v);
    }
    return os.str();
}

// Independent Wigner-d oracle: d^S_{0,p} = Re <S,0| e^{-i beta J_y} |S,p>
// via exact diagonalization of the tridiagonal J_y matrix.
std::vector<double> wigner_row_jy_oracle(int s, double beta) {
    const int dim = 2 * s + 1;
    Eigen::MatrixXcd jy = Eigen::MatrixXcd::Zero(dim, dim);
    for (int m = -s; m < s; ++m) {
        const double a_plus = std::sqrt(static_cast<double>(s - m) * (s + m + 1));
        jy(m + 1 + s, m + s) = Complex(0.0, -0.5) * a_plus;
        jy(m + s, m + 1 + s) = Complex(0.0, 0.5) * a_plus;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(jy);
    Eigen::VectorXcd phases(dim);
    for (int i = 0; i < dim; ++i) {
        phases(i) = std::polar(1.0, -beta * es.eigenvalues()(i));
    }
    const Eigen::MatrixXcd u =
        es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    std::vector<double> row(dim);
    for (int p = -s; p <= s; ++p) row[p + s] = u(s, p + s).real();
    return row;
}

void suite_projection_oracle(Suite& s, std::mt19937_64& rng, int samples) {
    std::uniform_real_distribution<double> mod(0.0, 1.5);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    std::uniform_int_distribution<int> nn(0, 10);
    for (int i = 0; i < samples; ++i) {
        const double a = mod(rng), th = ang(rng), ph = ang(rng);
        const int n = nn(rng);
        const TwoModeState state =
            concat_state(PhaseEncodedState(a, th, 0.0), PhaseEncodedState(a, th, ph), 40);
        const ProjectionResult r = project_total_n(state, n);
        const std::string in = describe({{"alpha", a}, {"theta", th}, {"phi", ph}, {"n", n}});
        if (r.degenerate) {
            s.check_bool(a > 20.0, in);  // only enormous means can degenerate here
            continue;
        }
        const ReducedState an = reduced_state_analytic(std::polar(a, th), ph, n);
        s.check(std::abs(1.0 - std::abs(inner_product(r.state, an))), in);
    }
}

void suite_projection_probability(Suite& s, std::mt19937_64& rng, int samples) {
    std::uniform_real_distribution<double> mod(0.0, 1.5);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    std::uniform_int_distribution<int> nn(0, 10);
    for (int i = 0; i < samples; ++i) {
        const double a = mod(rng), th = ang(rng), ph = ang(rng);
        const int n = nn(rng);
        const TwoModeState state =
            concat_state(PhaseEncodedState(a, th, 0.0), PhaseEncodedState(a, th, ph), 40);
        const ProjectionResult r = project_total_n(state, n);
        s.check(std::abs(r.prob - poisson_pmf(2.0 * a * a, n)),
                describe({{"alpha", a}, {"theta", th}, {"phi", ph}, {"n", n}}));
    }
}

void suite_overlap_law(Suite& s, std::mt19937_64& rng, int samples) {
    std::uniform_real_distribution<double> mod(0.05, 1.5);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    std::uniform_int_distribution<int> nn(0, 8);
    for (int i = 0; i < samples; ++i) {
        const double a = mod(rng), th = ang(rng);
        const double phi_i = ang(rng), phi_j = ang(rng);
        const int n = nn(rng);
        auto reduce = [&](double phi) {
            return project_total_n(
                       concat_state(PhaseEncodedState(a, th, 0.0), PhaseEncodedState(a, th, phi), 40),
                       n)
                .state;
        };
        const Complex got = inner_product(reduce(phi_i), reduce(phi_j));
        const Complex want = reduced_overlap(phi_i, phi_j, n);
        const double mod_want = std::pow(std::abs(std::cos(0.5 * (phi_i - phi_j))), n);
        const std::string in =
            describe({{"alpha", a}, {"phi_i", phi_i}, {"phi_j", phi_j}, {"n", n}});
        s.check(std::abs(got - want), in);
        s.check(std::abs(std::abs(got) - mod_want), in);
    }
}

void suite_three_mode_overlap(Suite& s, std::mt19937_64& rng, int samples) {
    std::uniform_real_distribution<double> mod(0.05, 1.2);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    std::uniform_int_distribution<int> nn(0, 5);
    std::bernoulli_distribution which(0.5);
    for (int i = 0; i < samples; ++i) {
        const double a = mod(rng);
        const double phi_i = ang(rng), phi_j = ang(rng);
        const int n = nn(rng);
        const auto basis =
            which(rng) ? PhaseTimeParams::Basis::L : PhaseTimeParams::Basis::R;
        const Complex got = pt_overlap_check({a, phi_i, basis}, {a, phi_j, basis}, n);
        const Complex other = pt_overlap_check(
            {a, phi_i, basis == PhaseTimeParams::Basis::L ? PhaseTimeParams::Basis::R
                                                          : PhaseTimeParams::Basis::L},
            {a, phi_j,
             basis == PhaseTimeParams::Basis::L ? PhaseTimeParams::Basis::R
                                                : PhaseTimeParams::Basis::L},
            n);
        const std::string in = describe({{"alpha", a}, {"phi_i", phi_i}, {"phi_j", phi_j}, {"n", n}});
        s.check(std::abs(got - reduced_overlap(phi_i, phi_j, n)), in);
        s.check(std::abs(got - other), in);  // L and R reductions agree
    }
}

void suite_holevo_eigen(Suite& s, std::mt19937_64& rng, int samples) {
    std::uniform_real_distribution<double> mod(0.0, 1.0);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    for (int i = 0; i < samples; ++i) {
        const Complex c = std::polar(mod(rng), ang(rng));
        s.check(std::abs(holevo_eigen_oracle(c) - holevo_from_overlap(std::abs(c))),
                describe({{"re", c.real()}, {"im", c.imag()}}));
    }
}

void suite_holevo_full_cross(Suite& s, std::mt19937_64& rng, int samples) {
    std::uniform_real_distribution<double> mus(0.0, 2.0);
    std::uniform_real_distribution<double> deltas(1e-3, kPi / 2.0);
    for (int i = 0; i < samples; ++i) {
        const double mu = mus(rng), delta = deltas(rng);
        const double c_abs = std::exp(-2.0 * mu * std::sin(delta) * std::sin(delta));
        s.check(std::abs(holevo_full(mu, delta) - holevo_eigen_oracle(c_abs)),
                describe({{"mu", mu}, {"delta", delta}}));
    }
}

void suite_rate_residual(Suite& s, std::mt19937_64& rng, int samples) {
    std::uniform_real_distribution<double> mus(1e-6, 1.5);
    std::uniform_real_distribution<double> etas(0.0, 1.0);
    for (int i = 0; i < samples; ++i) {
        const double mu = mus(rng), eta = etas(rng);
        const SplitPlan plan = solve_split(mu, eta, SolverMode::exact_poisson);
        s.check(std::abs(verify_rate_condition(plan, mu, eta)),
                describe({{"mu", mu}, {"eta_L", eta}}));
    }
}

void suite_plus_dominance(Suite& s, int grid) {
    for (int i = 0; i < grid; ++i) {
        const double mu = 0.01 + (1.0 - 0.01) * i / (grid - 1);
        for (int j = 0; j < grid; ++j) {
            const double eta = 0.5 * mu * j / (grid - 1);
            const AttackPoint point{mu, kPi / 4.0, eta};
            const double plus = attack_information(point, solve_split(mu, eta, SolverMode::mandel_approx, Branch::plus));
            const double minus = attack_information(point, solve_split(mu, eta, SolverMode::mandel_approx, Branch::minus));
            s.check(std::max(0.0, minus - plus), describe({{"mu", mu}, {"eta_L", eta}}));
        }
    }
}

void suite_info_series_oracle(Suite& s, std::mt19937_64& rng, int samples) {
    std::uniform_real_distribution<double> mus(0.01, 1.0);
    std::uniform_real_distribution<double> deltas(0.05, kPi / 2.0);
    std::uniform_real_distribution<double> etas(0.0, 1.0);
    for (int i = 0; i < samples; ++i) {
        const double mu = mus(rng), delta = deltas(rng), eta = etas(rng);
        const SplitPlan plan = solve_split(mu, eta);
        const AttackPoint point{mu, delta, eta};
        const double fast = attack_information(point, plan);
        // direct high-cutoff summation, no adaptive stop
        const double lambda = 2.0 * plan.eta1 * mu;
        double direct = 0.0;
        if (lambda > 0.0 && plan.z > 0.0) {
            double acc = 0.0;
            for (int n = 1; n <= 200; ++n) acc += poisson_pmf(lambda, n) * holevo_per_n(delta, n);
            direct = plan.z * acc / (-std::expm1(-lambda));
        }
        s.check(std::abs(fast - direct), describe({{"mu", mu}, {"delta", delta}, {"eta_L", eta}}));
    }
}

void suite_info_monotone(Suite& s, int grid) {
    for (int i = 0; i < grid; ++i) {
        const double mu = 0.05 + (1.0 - 0.05) * i / (grid - 1);
        double prev = 2.0;
        for (int j = 0; j < grid; ++j) {
            const double eta = static_cast<double>(j) / (grid - 1);
            const double info =
                attack_information({mu, kPi / 3.0, eta}, solve_split(mu, eta));
            s.check(std::max(0.0, info - prev), describe({{"mu", mu}, {"eta_L", eta}}));
            prev = info;
        }
    }
}

void suite_pm_orthogonality(Suite& s, std::mt19937_64& rng, int samples) {
    std::uniform_real_distribution<double> mod(0.05, 1.2);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    for (int i = 0; i < samples; ++i) {
        PhaseMatchingParams p0;
        p0.mod_alpha = mod(rng);
        p0.theta_a = ang(rng);
        p0.theta_b = ang(rng);
        p0.phi_a = ang(rng);
        p0.phi_b = ang(rng);
        p0.theta_e = ang(rng);
        PhaseMatchingParams p1 = p0;
        p1.p_a = 1;
        for (int n = 1; n <= 6; ++n) {
            s.check(std::abs(pm_reduced_overlap(p0, p1, n)),
                    describe({{"alpha", p0.mod_alpha}, {"theta_e", p0.theta_e}, {"n", n}}));
        }
    }
}

void suite_wigner_rows(Suite& s) {
    for (int S : {5, 10, 20, 40}) {
        for (double beta : {0.02, 0.1, 0.4, 1.0}) {
            const std::vector<double> row = wigner_d0_row(S, beta);
            const std::vector<double> oracle = wigner_row_jy_oracle(S, beta);
            double norm2 = 0.0, err = 0.0;
            for (int p = 0; p < 2 * S + 1; ++p) {
                norm2 += row[p] * row[p];
                err = std::max(err, std::abs(row[p] - oracle[p]));
            }
            const std::string in = describe({{"S", static_cast<double>(S)}, {"beta", beta}});
            s.check(std::abs(norm2 - 1.0), in);
            s.check(err, in);
        }
    }
}

void suite_wigner_bessel_convergence(Suite& s) {
    const double m = 0.3;
    double prev = 1e9;
    for (int S : {10, 20, 40}) {
        const double beta = m / std::sqrt(static_cast<double>(S) * (S + 1));
        const std::vector<double> row = wigner_d0_row(S, beta);
        double err = 0.0;
        for (int p = -S; p <= S; ++p) {
            err = std::max(err, std::abs(row[p + S] - bessel_j(p, m)));
        }
        s.check_bool(err < prev, describe({{"S", static_cast<double>(S)}, {"err", err}}));
        prev = err;
    }
}

void suite_scw_budget(Suite& s) {
    for (int i = 1; i <= 40; ++i) {
        const double m = i / 40.0;
        const double j0sq = bessel_j(0, m) * bessel_j(0, m);
        s.check_bool(j0sq > 1.0 - j0sq, describe({{"m", m}}));
    }
}

void suite_gram_monotone(Suite& s, std::mt19937_64& rng, int samples) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> ps(0.0, 1.0);
    for (int i = 0; i < samples; ++i) {
        // random 3-state Grams built from explicit vectors, PSD by construction
        auto random_gram = [&]() {
            std::vector<std::vector<Complex>> vecs(3, std::vector<Complex>(4));
            for (auto& v : vecs) {
                double norm2 = 0.0;
                for (Complex& c : v) {
                    c = Complex(unit(rng), unit(rng));
                    norm2 += std::norm(c);
                }
                for (Complex& c : v) c /= std::sqrt(norm2);
            }
            std::vector<std::vector<Complex>> g(3, std::vector<Complex>(3));
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) {
                    Complex dot(0.0, 0.0);
                    for (int k = 0; k < 4; ++k) dot += std::conj(vecs[a][k]) * vecs[b][k];
                    g[a][b] = dot;
                }
            for (int a = 0; a < 3; ++a) g[a][a] = 1.0;
            return GramMatrix(g);
        };
        const GramMatrix gin = random_gram();
        const GramMatrix gout = random_gram();
        const double p_hi = ps(rng);
        const double p_lo = p_hi * ps(rng);
        const bool hi_ok = gram_feasible(gin, gout, p_hi);
        const bool lo_ok = gram_feasible(gin, gout, p_lo);
        s.check_bool(!hi_ok || lo_ok, describe({{"p_hi", p_hi}, {"p_lo", p_lo}}));
    }
}

}  // namespace

bool VerifyResult::all_passed() const {
    for (const SuiteResult& s : suites) {
        if (!s.passed) return false;
    }
    return true;
}

VerifyResult run_verify(const VerifyOptions& options) {
    if (options.samples < 1) throw std::invalid_argument("run_verify: samples must be >= 1");
    if (!(options.tol_scale > 0.0)) {
        throw std::invalid_argument("run_verify: tol_scale must be > 0");
    }
    VerifyResult out;
    const double ts = options.tol_scale;
    const int n = options.samples;
    std::mt19937_64 rng(options.seed);

    auto run = [&](Suite& suite, auto&& fn) {
        fn(suite);
        out.suites.push_back(std::move(suite.result));
    };

    {
        Suite s("projection_oracle_equivalence", 1e-10, ts);
        run(s, [&](Suite& q) { suite_projection_oracle(q, rng, n); });
    }
    {
        Suite s("projection_probability_law", 1e-10, ts);
        run(s, [&](Suite& q) { suite_projection_probability(q, rng, n); });
    }
    {
        Suite s("reduced_overlap_law", 1e-10, ts);
        run(s, [&](Suite& q) { suite_overlap_law(q, rng, n); });
    }
    {
        Suite s("three_mode_overlap", 1e-10, ts);
        run(s, [&](Suite& q) { suite_three_mode_overlap(q, rng, std::max(1, n / 5)); });
    }
    {
        Suite s("holevo_eigen_equivalence", 1e-12, ts);
        run(s, [&](Suite& q) { suite_holevo_eigen(q, rng, std::max(n, 1000)); });
    }
    {
        Suite s("holevo_full_cross_check", 1e-12, ts);
        run(s, [&](Suite& q) { suite_holevo_full_cross(q, rng, n); });
    }
    {
        Suite s("exact_rate_residual", 1e-12, ts);
        run(s, [&](Suite& q) { suite_rate_residual(q, rng, std::max(200, n)); });
    }
    {
        Suite s("plus_branch_dominance", 1e-12, ts);
        run(s, [&](Suite& q) { suite_plus_dominance(q, 21); });
    }
    {
        Suite s("information_series_oracle", 1e-9, ts);
        run(s, [&](Suite& q) { suite_info_series_oracle(q, rng, n); });
    }
    {
        Suite s("information_monotone_in_eta", 1e-12, ts);
        run(s, [&](Suite& q) { suite_info_monotone(q, 21); });
    }
    {
        Suite s("pm_orthogonality", 1e-10, ts);
        run(s, [&](Suite& q) { suite_pm_orthogonality(q, rng, std::max(1, n / 10)); });
    }
    {
        Suite s("wigner_row_against_jy_oracle", 1e-10, ts);
        run(s, [&](Suite& q) { suite_wigner_rows(q); });
    }
    {
        Suite s("wigner_bessel_convergence", 0.5, ts);
        run(s, [&](Suite& q) { suite_wigner_bessel_convergence(q); });
    }
    {
        Suite s("scw_power_budget", 0.5, ts);
        run(s, [&](Suite& q) { suite_scw_budget(q); });
    }
    {
        Suite s("gram_feasibility_monotone", 0.5, ts);
        run(s, [&](Suite& q) { suite_gram_monotone(q, rng, std::max(1, n / 5)); });
    }
    return out;
}

}  // namespace fockps
