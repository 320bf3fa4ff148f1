#pragma once

#include <optional>
#include <string>

namespace fockps {

enum class Branch { plus, minus };
enum class SolverMode { mandel_approx, exact_poisson };
enum class Region { top, middle, bottom };

std::string to_string(Branch b);
std::string to_string(SolverMode m);
std::string to_string(Region r);
Branch branch_from_string(const std::string& s);
SolverMode mode_from_string(const std::string& s);

/// The three protocol characteristics that determine the attack: mean photon
/// number mu = |alpha|^2, half phase difference delta in (0, pi/2], and the
/// expected channel transmission eta_L in [0,1].
struct AttackPoint {
    double mu = 0.0;
    double delta = 0.0;
    double eta_L = 0.0;

    void validate() const;
};

/// Beamsplitter settings and attacked fraction maintaining the expected
/// detection rate. eta1 + eta2 = 1.
struct SplitPlan {
    double eta1 = 0.5;
    double eta2 = 0.5;
    double z = 0.0;
    Branch branch = Branch::plus;
    SolverMode mode = SolverMode::mandel_approx;
};

struct RegionReport {
    AttackPoint point;
    double info_I = 0.0;
    double chi = 0.0;
    Region region = Region::middle;
    double top_boundary_eta = 0.0;
    double bottom_boundary_eta = 0.0;
};

/// Rate-preserving splitting coefficients.
///
/// mandel_approx implements the closed forms obtained under the Mandel
/// (rate linear in mean photon number) approximation:
///   z    = min(1, (1 - eta_L)/(1 - mu/2))
///   eta1 = (1 +- sqrt(1 - 2(eta_L - (1-z))/(z mu)))/2
/// with the regime split: eta_L >= mu/2 gives eta1 = 1/2 and z < 1;
/// eta_L <= mu/2 gives z = 1.
///
/// exact_poisson drops the linearization and solves
///   z (1 - e^{-2 eta1 mu})(1 - eta1) + (1 - z) = eta_L
/// exactly, with the analogous regime boundary at eta_L = (1 - e^{-mu})/2.
/// Requires mu > 0; mandel_approx additionally requires mu < 2.
SplitPlan solve_split(double mu, double eta_L, SolverMode mode = SolverMode::mandel_approx,
                      Branch branch = Branch::plus);

/// z (1 - P(2 eta1 mu, 0)) eta2 + (1 - z) - eta_L. Vanishes to 1e-12 for
/// exact_poisson plans; reports the linearization error for mandel_approx.
double verify_rate_condition(const SplitPlan& plan, double mu, double eta_L);

/// I = z sum_{n>=1} P(2 eta1 mu, n) chi^(n)(delta) / (1 - P(2 eta1 mu, 0)),
/// truncated once the remaining normalized Poisson tail drops below
/// tail_tol (chi^(n) <= 1 bounds the remainder). Result in [0, 1].
double attack_information(const AttackPoint& point, const SplitPlan& plan,
                          double tail_tol = 1e-12);

/// 1 - (1 - mu/2) chi, clipped to [0,1]. Above this transmission the attack
/// extracts less than the Holevo bound.
double top_boundary(double mu, double delta);

/// Region assignment with closed boundaries: eta_L <= mu/2 is bottom,
/// eta_L >= top_boundary is top, otherwise middle. I uses the plus-branch
/// mandel_approx plan.
RegionReport classify_region(const AttackPoint& point);

/// Solves I(mu, delta, eta) = chi(mu, delta) for eta in [eta_lo, 1] by
/// bisection (residual < 1e-9); eta_lo defaults to mu/2. Returns nothing
/// when I < chi on the whole interval (I is non-increasing in eta).
std::optional<double> iso_info_boundary(double delta, double mu,
                                        std::optional<double> eta_lo = std::nullopt);

struct LimitRatio {
    double analytic = 0.0;  // n / (4 mu)
    double numeric = 0.0;   // chi^(n)(probe) / chi(mu, probe)
};

/// Probes the small-delta relation chi^(n)(delta)/chi -> n/(4 mu).
/// Requires n >= 1, mu > 0, 0 < delta_probe <= 1e-3.
LimitRatio limit_ratio_check(int n, double mu, double delta_probe);

struct CriticalPoint {
    double mu_star = 0.0;
    double delta_star = 0.0;
    double analytic_bound = 0.0;  // ln(2)/2
};

/// Critical mean photon number above which the attack never beats the
/// Holevo bound at eta_L = 0 in the small-delta regime: the stationary
/// point of the root map delta -> mu_c(delta) of I(mu, delta, 0) = chi.
/// Nested 1-D solves: bisection inside, golden section outside, after a
/// coarse scan locating the bracket.
CriticalPoint critical_mu();

}  // namespace fockps
