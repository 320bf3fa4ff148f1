#include "fockps/protocols.hpp"

#include "fockps/projection.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fockps {

namespace {

constexpr double kCrossCheckTol = 1e-10;
constexpr double kRowNormTol = 1e-8;

FockVector coherent_mode(double mod, double phase, int n_max) {
    // Exact-n projection only reads amplitudes up to n_max, so the Poisson
    // tail beyond the cutoff is irrelevant here.
    return coherent_fock_vector(std::polar(mod, phase), n_max, 1.0);
}

ThreeModeState phase_time_state(const PhaseTimeParams& p, int n_max) {
    FockVector ref = coherent_mode(p.mod_alpha, 0.0, n_max);
    FockVector sig = coherent_mode(p.mod_alpha, p.phi, n_max);
    FockVector vac = coherent_mode(0.0, 0.0, n_max);
    if (p.basis == PhaseTimeParams::Basis::L) {
        return ThreeModeState(std::move(ref), std::move(sig), std::move(vac));
    }
    return ThreeModeState(std::move(vac), std::move(sig), std::move(ref));
}

}  // namespace

double bessel_j(int p, double x) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw std::invalid_argument("bessel_j: argument must be finite and >= 0");
    }
    const int q = p < 0 ? -p : p;
    const double v = std::cyl_bessel_j(static_cast<double>(q), x);
    return (p < 0 && (q & 1)) ? -v : v;
}

std::vector<double> wigner_d0_row(int s, double beta) {
    if (s < 0) throw std::invalid_argument("wigner_d0_row: S must be >= 0");
    if (!(beta >= 0.0 && beta < std::numbers::pi)) {
        throw std::invalid_argument("wigner_d0_row: beta outside [0, pi)");
    }
    std::vector<double> row(2 * s + 1, 0.0);
    if (s == 0 || beta == 0.0) {
        row[s] = 1.0;
        return row;
    }

    const double sb = std::sin(beta);
    const double cb = std::cos(beta);
    const double half_sb = 0.5 * sb;

    // log-magnitude record for p = 0..S; the mantissa pair carries a shared
    // scale so deep-tail seeds far below double range stay representable.
    std::vector<double> log_mag(s + 1, -std::numeric_limits<double>::infinity());
    std::vector<double> sign(s + 1, 0.0);
    auto record = [&](int p, double mantissa, double scale) {
        if (mantissa != 0.0) {
            log_mag[p] = std::log(std::abs(mantissa)) + scale;
            sign[p] = mantissa > 0.0 ? 1.0 : -1.0;
        }
    };

    // seed d^S_{0,S} = sqrt(C(2S,S)) (sin(beta)/2)^S
    double scale =
        0.5 * (std::lgamma(2.0 * s + 1.0) - 2.0 * std::lgamma(s + 1.0)) +
        s * std::log(half_sb);
    double above = 0.0;  // d_{p+1} mantissa
    double here = 1.0;   // d_p mantissa
    record(s, here, scale);

    // p = S step: the d_{p+1} term drops out since (S-p) = 0.
    above = here;
    here = s * cb * above / (half_sb * std::sqrt(2.0 * s));
    record(s - 1, here, scale);

    for (int p = s - 1; p >= 1; --p) {
        const double a_plus = std::sqrt(static_cast<double>(s - p) * (s + p + 1));
        const double a_minus = std::sqrt(static_cast<double>(s + p) * (s - p + 1));
        const double next = (p * cb * here - half_sb * a_plus * above) / (half_sb * a_minus);
        above = here;
        here = next;
        if (std::abs(here) > 1e250) {
            above *= 1e-250;
            here *= 1e-250;
            scale += std::log(1e250);
        }
        record(p - 1, here, scale);
    }

    for (int p = 0; p <= s; ++p) {
        const double v = log_mag[p] > -745.0 ? sign[p] * std::exp(log_mag[p]) : 0.0;
        row[s + p] = v;
        row[s - p] = (p % 2 == 0) ? v : -v;  // d_{0,-p} = (-1)^p d_{0,p}
    }

    double norm2 = 0.0;
    for (double v : row) norm2 += v * v;
    if (std::abs(norm2 - 1.0) > kRowNormTol) {
        throw std::runtime_error("wigner_d0_row: recurrence instability, row norm " +
                                 std::to_string(norm2));
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& v : row) v *= inv;
    return row;
}

AttackPoint mzi_to_canonical(const MZIParams& p, double eta_L, double delta) {
    if (!(p.mod_alpha >= 0.0) || !std::isfinite(p.mod_alpha)) {
        throw std::invalid_argument("mzi_to_canonical: |alpha| must be finite and >= 0");
    }
    AttackPoint point{p.mod_alpha * p.mod_alpha, delta, eta_L};
    point.validate();
    return point;
}

Complex pt_overlap_check(const PhaseTimeParams& a, const PhaseTimeParams& b, int n) {
    if (a.basis != b.basis) {
        throw std::invalid_argument("pt_overlap_check: time-slot bases differ");
    }
    if (std::abs(a.mod_alpha - b.mod_alpha) > 1e-12) {
        throw std::invalid_argument("pt_overlap_check: signal moduli differ");
    }
    if (n < 0) throw std::invalid_argument("pt_overlap_check: n must be >= 0");

    const ProjectionResult ra = project_total_n(phase_time_state(a, n), n);
    const ProjectionResult rb = project_total_n(phase_time_state(b, n), n);
    if (ra.degenerate || rb.degenerate) {
        throw std::runtime_error("pt_overlap_check: degenerate reduction (vacuum input)");
    }
    const Complex got = inner_product(ra.state, rb.state);
    const Complex want = reduced_overlap(a.phi, b.phi, n);
    if (std::abs(got - want) > kCrossCheckTol) {
        throw std::runtime_error("pt_overlap_check: overlap deviates from closed form by " +
                                 std::to_string(std::abs(got - want)));
    }
    return got;
}

Complex pm_reduced_overlap(const PhaseMatchingParams& p0, const PhaseMatchingParams& p1,
                           int n) {
    if (n < 0) throw std::invalid_argument("pm_reduced_overlap: n must be >= 0");
    auto same = [](double x, double y) { return std::abs(x - y) <= 1e-12; };
    if (!same(p0.mod_alpha, p1.mod_alpha) || !same(p0.theta_a, p1.theta_a) ||
        !same(p0.theta_b, p1.theta_b) || !same(p0.phi_a, p1.phi_a) ||
        !same(p0.phi_b, p1.phi_b) || !same(p0.theta_e, p1.theta_e)) {
        throw std::invalid_argument(
            "pm_reduced_overlap: states must differ only in a key bit");
    }
    const bool a_differs = p0.p_a != p1.p_a;
    const bool b_differs = p0.p_b != p1.p_b;
    if (a_differs == b_differs) {
        throw std::invalid_argument(
            "pm_reduced_overlap: exactly one key bit must differ");
    }
    const double theta_j = a_differs ? p0.theta_a : p0.theta_b;
    const double phi_j = a_differs ? p0.phi_a : p0.phi_b;
    const int bit0 = a_differs ? p0.p_a : p0.p_b;
    const int bit1 = a_differs ? p1.p_a : p1.p_b;
    auto signal_phase = [&](int bit) {
        return theta_j + phi_j + std::numbers::pi * bit;
    };

    // coefficient formula: e^{i theta_e n} e^{i(theta_j + phi_j + pi p_j - theta_e) k}
    const Complex alpha_e = std::polar(p0.mod_alpha, p0.theta_e);
    const ReducedState s0 =
        reduced_state_analytic(alpha_e, signal_phase(bit0) - p0.theta_e, n);
    const ReducedState s1 =
        reduced_state_analytic(alpha_e, signal_phase(bit1) - p0.theta_e, n);
    const Complex analytic = inner_product(s0, s1);

    // tensor oracle on |alpha e^{i theta_e}> (x) |alpha e^{i psi(bit)}>
    auto reduce = [&](int bit) {
        TwoModeState state(coherent_mode(p0.mod_alpha, p0.theta_e, n),
                           coherent_mode(p0.mod_alpha, signal_phase(bit), n));
        ProjectionResult r = project_total_n(state, n);
        if (r.degenerate) {
            throw std::runtime_error("pm_reduced_overlap: degenerate reduction");
        }
        return r.state;
    };
    const Complex oracle = inner_product(reduce(bit0), reduce(bit1));
    if (std::abs(analytic - oracle) > kCrossCheckTol) {
        throw std::runtime_error("pm_reduced_overlap: formula and oracle disagree by " +
                                 std::to_string(std::abs(analytic - oracle)));
    }
    return analytic;
}

double pm_block_probability(double mu, double eta1) {
    if (!(mu >= 0.0) || !std::isfinite(mu)) {
        throw std::invalid_argument("pm_block_probability: mu must be finite and >= 0");
    }
    if (!(eta1 >= 0.0 && eta1 <= 1.0)) {
        throw std::invalid_argument("pm_block_probability: eta1 outside [0,1]");
    }
    const double single = poisson_pmf(2.0 * eta1 * mu, 0);
    return single * single;
}

std::vector<SidebandAmplitude> scw_sideband_amplitudes(const SCWParams& p, bool use_bessel) {
    if (!(p.mod_alpha0 >= 0.0) || !std::isfinite(p.mod_alpha0)) {
        throw std::invalid_argument("scw_sideband_amplitudes: |alpha_0| must be >= 0");
    }
    if (p.s_modes < 1) throw std::invalid_argument("scw_sideband_amplitudes: S must be >= 1");
    if (!(p.m >= 0.0)) throw std::invalid_argument("scw_sideband_amplitudes: m must be >= 0");

    const int s = p.s_modes;
    std::vector<SidebandAmplitude> out;
    out.reserve(2 * s + 1);
    if (use_bessel) {
        double norm2 = 0.0;
        for (int k = -s; k <= s; ++k) {
            const double v = bessel_j(k, p.m);
            norm2 += v * v;
            out.push_back({k, Complex(p.mod_alpha0 * v, 0.0)});
        }
        if (std::abs(norm2 - 1.0) > kRowNormTol) {
            throw std::runtime_error(
                "scw_sideband_amplitudes: Bessel sum rule violated, S too small for m");
        }
    } else {
        const double beta = p.beta_scale * p.m / std::sqrt(static_cast<double>(s) * (s + 1));
        const std::vector<double> row = wigner_d0_row(s, beta);
        for (int k = -s; k <= s; ++k) {
            out.push_back({k, Complex(p.mod_alpha0 * row[s + k], 0.0)});
        }
    }
    return out;
}

SCWCanonical scw_to_canonical(const SCWParams& p, double eta_L, double delta) {
    const double j0 = bessel_j(0, p.m);
    const double j0sq = j0 * j0;
    if (!(j0sq > 1.0 - j0sq)) {
        throw std::runtime_error(
            "scw_to_canonical: carrier power budget violated, J0^2(m) <= 1 - J0^2(m)");
    }
    SCWCanonical out;
    const double power0 = p.mod_alpha0 * p.mod_alpha0;
    out.reference_power = power0 * j0sq;
    out.sideband_power = power0 * (1.0 - j0sq);
    const std::vector<SidebandAmplitude> amps = scw_sideband_amplitudes(p, /*use_bessel=*/true);
    for (const SidebandAmplitude& a : amps) {
        if (a.p == 0) continue;
        AttackPoint point{std::norm(a.amplitude), delta, eta_L};
        point.validate();
        out.pairs.push_back({a.p, point});
    }
    return out;
}

}  // namespace fockps
