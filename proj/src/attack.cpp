#include "fockps/attack.hpp"

#include "fockps/fock.hpp"
#include "fockps/infocalc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace fockps {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kSlack = 1e-12;

double rate_lhs(double z, double eta1, double mu) {
    return z * (-std::expm1(-2.0 * eta1 * mu)) * (1.0 - eta1) + (1.0 - z);
}

// Location of the maximum of f(eta) = (1 - e^{-2 eta mu})(1 - eta) on [0,1]:
// unique root of g(eta) = e^{-2 eta mu}(2 mu (1 - eta) + 1) - 1, g decreasing.
double exact_rate_peak_position(double mu) {
    double lo = 0.0;
    double hi = 1.0;
    for (int i = 0; i < 120 && hi - lo > 1e-16; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double g = std::exp(-2.0 * mid * mu) * (2.0 * mu * (1.0 - mid) + 1.0) - 1.0;
        (g > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Root of f(eta1) = eta_L on a half-interval where f is strictly monotone.
double bisect_rate(double mu, double eta_L, double lo, double hi, bool decreasing) {
    auto f = [mu](double e1) { return (-std::expm1(-2.0 * e1 * mu)) * (1.0 - e1); };
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double v = f(mid) - eta_L;
        if (std::abs(v) < 1e-15 || hi - lo < 1e-17) return mid;
        const bool go_right = decreasing ? (v > 0.0) : (v < 0.0);
        (go_right ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::string to_string(Branch b) { return b == Branch::plus ? "plus" : "minus"; }

std::string to_string(SolverMode m) {
    return m == SolverMode::mandel_approx ? "approx" : "exact";
}

std::string to_string(Region r) {
    switch (r) {
        case Region::top: return "top";
        case Region::middle: return "middle";
        case Region::bottom: return "bottom";
    }
    return "middle";
}

Branch branch_from_string(const std::string& s) {
    if (s == "plus") return Branch::plus;
    if (s == "minus") return Branch::minus;
    throw std::invalid_argument("unknown branch: " + s);
}

SolverMode mode_from_string(const std::string& s) {
    if (s == "approx") return SolverMode::mandel_approx;
    if (s == "exact") return SolverMode::exact_poisson;
    throw std::invalid_argument("unknown solver mode: " + s);
}

void AttackPoint::validate() const {
    if (!(mu >= 0.0) || !std::isfinite(mu)) {
        throw std::invalid_argument("AttackPoint: mu must be finite and >= 0");
    }
    if (!(delta > 0.0 && delta <= kHalfPi)) {
        throw std::invalid_argument("AttackPoint: delta outside (0, pi/2]");
    }
    if (!(eta_L >= -kSlack && eta_L <= 1.0 + kSlack)) {
        throw std::invalid_argument("AttackPoint: eta_L outside [0,1]");
    }
}

SplitPlan solve_split(double mu, double eta_L, SolverMode mode, Branch branch) {
    if (!(mu > 0.0) || !std::isfinite(mu)) {
        throw std::invalid_argument("solve_split: mu must be finite and > 0");
    }
    if (!(eta_L >= -kSlack && eta_L <= 1.0 + kSlack)) {
        throw std::invalid_argument("solve_split: eta_L outside [0,1]");
    }
    if (mode == SolverMode::mandel_approx && !(mu < 2.0)) {
        throw std::invalid_argument("solve_split: mandel_approx requires mu < 2");
    }
    eta_L = std::clamp(eta_L, 0.0, 1.0);

    SplitPlan plan;
    plan.mode = mode;
    plan.branch = branch;

    if (eta_L >= 1.0) {
        // Nothing is attacked; eta1 is immaterial and set to the symmetric point.
        plan.z = 0.0;
        plan.eta1 = 0.5;
        plan.eta2 = 0.5;
        return plan;
    }

    // Rate the attacked fraction can recover at eta1 = 1/2, z = 1; the regime
    // boundary. mu/2 under the Mandel linearization, (1 - e^{-mu})/2 exactly.
    const double peak =
        mode == SolverMode::mandel_approx ? 0.5 * mu : 0.5 * (-std::expm1(-mu));

    if (eta_L >= peak) {
        plan.z = (1.0 - eta_L) / (1.0 - peak);
        plan.eta1 = 0.5;
    } else {
        plan.z = 1.0;
        if (mode == SolverMode::mandel_approx) {
            const double disc = std::max(0.0, 1.0 - 2.0 * eta_L / mu);
            const double s = std::sqrt(disc);
            plan.eta1 = branch == Branch::plus ? 0.5 * (1.0 + s) : 0.5 * (1.0 - s);
        } else {
            // f(eta1) = (1 - e^{-2 eta1 mu})(1 - eta1) peaks left of 1/2 and is
            // strictly decreasing beyond it; the plus root lives in [1/2, 1],
            // the minus root in the increasing stretch [0, peak position].
            if (branch == Branch::plus) {
                plan.eta1 = bisect_rate(mu, eta_L, 0.5, 1.0, /*decreasing=*/true);
            } else {
                const double pos = exact_rate_peak_position(mu);
                plan.eta1 = bisect_rate(mu, eta_L, 0.0, pos, /*decreasing=*/false);
            }
        }
    }
    plan.eta2 = 1.0 - plan.eta1;
    return plan;
}

double verify_rate_condition(const SplitPlan& plan, double mu, double eta_L) {
    if (!(mu >= 0.0) || !std::isfinite(mu)) {
        throw std::invalid_argument("verify_rate_condition: mu must be finite and >= 0");
    }
    return rate_lhs(plan.z, plan.eta1, mu) - eta_L;
}

double attack_information(const AttackPoint& point, const SplitPlan& plan,
                          double tail_tol) {
    point.validate();
    if (!(tail_tol > 0.0)) {
        throw std::invalid_argument("attack_information: tail_tol must be > 0");
    }
    const double lambda = 2.0 * plan.eta1 * point.mu;
    if (lambda <= 0.0 || plan.z <= 0.0) return 0.0;

    const double denom = -std::expm1(-lambda);  // 1 - P(lambda, 0)
    double p = lambda * std::exp(-lambda);      // P(lambda, n), starting at n = 1
    double partial = std::exp(-lambda);         // running sum of P(lambda, k), k <= n
    double acc = 0.0;
    for (int n = 1; n <= 100000; ++n) {
        acc += p * holevo_per_n(point.delta, n);
        partial += p;
        const double tail = 1.0 - partial;
        if (tail <= tail_tol * denom) break;
        p *= lambda / (n + 1);
    }
    return std::clamp(plan.z * acc / denom, 0.0, 1.0);
}

double top_boundary(double mu, double delta) {
    if (!(mu >= 0.0 && mu < 2.0)) {
        throw std::invalid_argument("top_boundary: mu outside [0, 2)");
    }
    const double b = 1.0 - (1.0 - 0.5 * mu) * holevo_full(mu, delta);
    return std::clamp(b, 0.0, 1.0);
}

RegionReport classify_region(const AttackPoint& point) {
    point.validate();
    if (!(point.mu > 0.0 && point.mu < 2.0)) {
        throw std::invalid_argument("classify_region: mu outside (0, 2)");
    }
    RegionReport report;
    report.point = point;
    report.chi = holevo_full(point.mu, point.delta);
    const SplitPlan plan = solve_split(point.mu, point.eta_L);
    report.info_I = attack_information(point, plan);
    report.top_boundary_eta = top_boundary(point.mu, point.delta);
    report.bottom_boundary_eta = std::min(0.5 * point.mu, 1.0);
    if (point.eta_L <= report.bottom_boundary_eta) {
        report.region = Region::bottom;
    } else if (point.eta_L >= report.top_boundary_eta) {
        report.region = Region::top;
    } else {
        report.region = Region::middle;
    }
    return report;
}

std::optional<double> iso_info_boundary(double delta, double mu,
                                        std::optional<double> eta_lo) {
    if (!(delta > 0.0 && delta <= kHalfPi)) {
        throw std::invalid_argument("iso_info_boundary: delta outside (0, pi/2]");
    }
    if (!(mu > 0.0 && mu < 2.0)) {
        throw std::invalid_argument("iso_info_boundary: mu outside (0, 2)");
    }
    const double chi = holevo_full(mu, delta);
    auto excess = [&](double eta) {
        const SplitPlan plan = solve_split(mu, eta);
        return attack_information({mu, delta, eta}, plan) - chi;
    };
    double lo = std::clamp(eta_lo.value_or(0.5 * mu), 0.0, 1.0);
    if (excess(lo) < 0.0) return std::nullopt;  // I < chi everywhere on [lo, 1]
    double hi = 1.0;                            // I(1) = 0 < chi
    double mid = lo;
    for (int i = 0; i < 200; ++i) {
        mid = 0.5 * (lo + hi);
        const double v = excess(mid);
        if (std::abs(v) < 1e-9) break;
        (v > 0.0 ? lo : hi) = mid;
    }
    return mid;
}

LimitRatio limit_ratio_check(int n, double mu, double delta_probe) {
    if (n < 1) throw std::invalid_argument("limit_ratio_check: n must be >= 1");
    if (!(mu > 0.0)) throw std::invalid_argument("limit_ratio_check: mu must be > 0");
    if (!(delta_probe > 0.0 && delta_probe <= 1e-3)) {
        throw std::invalid_argument("limit_ratio_check: delta_probe outside (0, 1e-3]");
    }
    LimitRatio r;
    r.analytic = n / (4.0 * mu);
    r.numeric = holevo_per_n(delta_probe, n) / holevo_full(mu, delta_probe);
    return r;
}

namespace {

// I(mu, delta, eta_L = 0) - chi(mu, delta) with the plus-branch plan (z = 1,
// eta1 = 1). Positive where the attack beats the Holevo bound.
double zero_loss_excess(double mu, double delta) {
    SplitPlan plan;
    plan.z = 1.0;
    plan.eta1 = 1.0;
    plan.eta2 = 0.0;
    return attack_information({mu, delta, 0.0}, plan) - holevo_full(mu, delta);
}

// Root in mu of zero_loss_excess for fixed delta; infinity when the excess
// stays positive up to the search cap.
double zero_loss_mu_root(double delta) {
    double hi = 0.5;
    while (zero_loss_excess(hi, delta) > 0.0) {
        hi *= 2.0;
        if (hi > 64.0) return std::numeric_limits<double>::infinity();
    }
    double lo = 1e-6;
    for (int i = 0; i < 120 && hi - lo > 1e-10; ++i) {
        const double mid = 0.5 * (lo + hi);
        (zero_loss_excess(mid, delta) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

CriticalPoint critical_mu() {
    // Coarse geometric scan locates the stationary bracket; the root map is
    // unimodal on the scanned range (verified by the scan itself, not proven).
    const double d_lo = 1e-4;
    const double d_hi = kHalfPi - 1e-4;
    const int scan_n = 96;
    std::vector<double> deltas(scan_n);
    int best = 0;
    double best_mu = std::numeric_limits<double>::infinity();
    for (int i = 0; i < scan_n; ++i) {
        deltas[i] = d_lo * std::pow(d_hi / d_lo, static_cast<double>(i) / (scan_n - 1));
        const double m = zero_loss_mu_root(deltas[i]);
        if (m < best_mu) {
            best_mu = m;
            best = i;
        }
    }
    double a = deltas[std::max(0, best - 1)];
    double b = deltas[std::min(scan_n - 1, best + 1)];

    // Golden-section refinement of the interior stationary point.
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = zero_loss_mu_root(c);
    double fd = zero_loss_mu_root(d);
    while (b - a > 1e-6) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = zero_loss_mu_root(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = zero_loss_mu_root(d);
        }
    }
    CriticalPoint out;
    out.delta_star = 0.5 * (a + b);
    out.mu_star = zero_loss_mu_root(out.delta_star);
    out.analytic_bound = 0.5 * std::numbers::ln2;
    return out;
}

}  // namespace fockps
