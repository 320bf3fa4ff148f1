#include "fockps/projection.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fockps {

namespace {

constexpr double kMatchTol = 1e-12;
constexpr double kDegenerateProb = 1e-300;
constexpr double kLn2 = 0.69314718055994530942;

double reduce_angle(double a) {
    if (!std::isfinite(a)) throw std::invalid_argument("phase must be finite");
    return std::remainder(a, 2.0 * std::numbers::pi);
}

void check_mode_norm(const FockVector& v, const char* what) {
    if (v.norm2() > 1.0 + 1e-12) {
        throw std::invalid_argument(std::string(what) + ": mode squared norm exceeds 1");
    }
}

Complex ipow(Complex base, int n) {
    Complex r(1.0, 0.0);
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

ProjectionResult finalize(ReducedState&& reduced, double prob) {
    ProjectionResult out;
    out.prob = prob;
    if (prob < kDegenerateProb) {
        out.prob = 0.0;
        out.degenerate = true;
        for (Complex& c : reduced.coeffs) c = Complex(0.0, 0.0);
        out.state = std::move(reduced);
        return out;
    }
    const double scale = 1.0 / std::sqrt(prob);
    for (Complex& c : reduced.coeffs) c *= scale;
    out.state = std::move(reduced);
    return out;
}

}  // namespace

PhaseEncodedState::PhaseEncodedState(double mod_alpha_, double theta_, double phi_)
    : mod_alpha(mod_alpha_), theta(reduce_angle(theta_)), phi(reduce_angle(phi_)) {
    if (!(mod_alpha >= 0.0) || !std::isfinite(mod_alpha)) {
        throw std::invalid_argument("PhaseEncodedState: |alpha| must be finite and >= 0");
    }
}

Complex PhaseEncodedState::amplitude() const {
    return std::polar(mod_alpha, theta + phi);
}

TwoModeState::TwoModeState(FockVector ref, FockVector sig)
    : mode_ref(std::move(ref)), mode_sig(std::move(sig)) {
    if (mode_ref.cutoff() != mode_sig.cutoff()) {
        throw std::invalid_argument("TwoModeState: mode cutoffs differ");
    }
    check_mode_norm(mode_ref, "TwoModeState");
    check_mode_norm(mode_sig, "TwoModeState");
}

ThreeModeState::ThreeModeState(FockVector m1, FockVector m2, FockVector m3)
    : mode1(std::move(m1)), mode2(std::move(m2)), mode3(std::move(m3)) {
    if (mode1.cutoff() != mode2.cutoff() || mode2.cutoff() != mode3.cutoff()) {
        throw std::invalid_argument("ThreeModeState: mode cutoffs differ");
    }
    check_mode_norm(mode1, "ThreeModeState");
    check_mode_norm(mode2, "ThreeModeState");
    check_mode_norm(mode3, "ThreeModeState");
}

double ReducedState::norm2() const {
    double s = 0.0;
    for (const Complex& c : coeffs) s += std::norm(c);
    return s;
}

Complex inner_product(const ReducedState& a, const ReducedState& b) {
    if (a.n != b.n || a.mode_count != b.mode_count || a.coeffs.size() != b.coeffs.size()) {
        throw std::invalid_argument("inner_product: reduced states are not comparable");
    }
    Complex s(0.0, 0.0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) s += std::conj(a.coeffs[i]) * b.coeffs[i];
    return s;
}

TwoModeState concat_state(const PhaseEncodedState& ref, const PhaseEncodedState& sig,
                          int n_max, double tail_tol) {
    if (std::abs(ref.phi) > kMatchTol) {
        throw std::invalid_argument("concat_state: reference must carry no encoding phase");
    }
    if (std::abs(ref.mod_alpha - sig.mod_alpha) > kMatchTol) {
        throw std::invalid_argument("concat_state: reference modulus does not match signal");
    }
    if (std::abs(std::remainder(ref.theta - sig.theta, 2.0 * std::numbers::pi)) > kMatchTol) {
        throw std::invalid_argument("concat_state: reference is not phase matched");
    }
    return TwoModeState(coherent_fock_vector(ref.amplitude(), n_max, tail_tol),
                        coherent_fock_vector(sig.amplitude(), n_max, tail_tol));
}

ProjectionResult project_total_n(const TwoModeState& state, int n) {
    if (n < 0 || n > state.cutoff()) {
        throw std::invalid_argument("project_total_n: n outside [0, cutoff]");
    }
    ReducedState reduced;
    reduced.n = n;
    reduced.mode_count = 2;
    reduced.coeffs.resize(static_cast<std::size_t>(n) + 1);
    double prob = 0.0;
    for (int k = 0; k <= n; ++k) {
        const Complex c = state.mode_ref.amplitudes[n - k] * state.mode_sig.amplitudes[k];
        reduced.coeffs[k] = c;
        prob += std::norm(c);
    }
    return finalize(std::move(reduced), prob);
}

ProjectionResult project_total_n(const ThreeModeState& state, int n) {
    if (n < 0 || n > state.cutoff()) {
        throw std::invalid_argument("project_total_n: n outside [0, cutoff]");
    }
    ReducedState reduced;
    reduced.n = n;
    reduced.mode_count = 3;
    reduced.coeffs.resize(static_cast<std::size_t>(n + 1) * (n + 2) / 2);
    double prob = 0.0;
    std::size_t idx = 0;
    for (int k = 0; k <= n; ++k) {
        for (int m = 0; m <= k; ++m, ++idx) {
            const Complex c = state.mode1.amplitudes[n - k] * state.mode2.amplitudes[k - m] *
                              state.mode3.amplitudes[m];
            reduced.coeffs[idx] = c;
            prob += std::norm(c);
        }
    }
    return finalize(std::move(reduced), prob);
}

ReducedState reduced_state_analytic(Complex alpha, double phi, int n) {
    if (n < 0) throw std::invalid_argument("reduced_state_analytic: n must be >= 0");
    const double theta = std::arg(alpha);
    ReducedState reduced;
    reduced.n = n;
    reduced.mode_count = 2;
    reduced.coeffs.resize(static_cast<std::size_t>(n) + 1);
    const double lg_n = std::lgamma(n + 1.0);
    for (int k = 0; k <= n; ++k) {
        const double log_mag =
            0.5 * (lg_n - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) - 0.5 * n * kLn2;
        reduced.coeffs[k] = std::polar(std::exp(log_mag), phi * k + theta * n);
    }
    return reduced;
}

Complex reduced_overlap(double phi_i, double phi_j, int n) {
    if (n < 0) throw std::invalid_argument("reduced_overlap: n must be >= 0");
    const Complex base = 0.5 * (1.0 + std::polar(1.0, -(phi_i - phi_j)));
    return ipow(base, n);
}

}  // namespace fockps
