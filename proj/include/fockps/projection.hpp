#pragma once

#include "fockps/fock.hpp"

namespace fockps {

/// A coherent signal |alpha e^{i phi}> with alpha = |alpha| e^{i theta}.
/// Phases are stored reduced to (-pi, pi].
struct PhaseEncodedState {
    double mod_alpha;
    double theta;
    double phi;

    PhaseEncodedState(double mod_alpha, double theta, double phi);
    Complex amplitude() const;  // |alpha| e^{i(theta + phi)}
};

/// Product of two truncated modes at a shared cutoff.
struct TwoModeState {
    FockVector mode_ref;
    FockVector mode_sig;

    TwoModeState(FockVector ref, FockVector sig);
    int cutoff() const { return mode_ref.cutoff(); }
};

struct ThreeModeState {
    FockVector mode1;
    FockVector mode2;
    FockVector mode3;

    ThreeModeState(FockVector m1, FockVector m2, FockVector m3);
    int cutoff() const { return mode1.cutoff(); }
};

/// Normalized coefficients of a state restricted to total photon number n.
/// Two modes: coeffs[k] multiplies |n-k>|k>, k = 0..n.
/// Three modes: coeffs[k(k+1)/2 + m] multiplies |n-k>|k-m>|m>, k = 0..n,
/// m = 0..k; every occupation triple of total n appears exactly once.
struct ReducedState {
    int n = 0;
    int mode_count = 2;
    std::vector<Complex> coeffs;

    double norm2() const;
};

Complex inner_product(const ReducedState& a, const ReducedState& b);

struct ProjectionResult {
    ReducedState state;
    double prob = 0.0;
    /// Set when prob < 1e-300: normalization undefined, prob reported as 0,
    /// coefficients zeroed.
    bool degenerate = false;
};

/// Attach a phase-matched reference mode: |alpha> (x) |alpha e^{i phi}>.
/// The reference must carry no encoding phase and match the signal's
/// modulus and global phase within 1e-12.
TwoModeState concat_state(const PhaseEncodedState& ref, const PhaseEncodedState& sig,
                          int n_max, double tail_tol = 1e-12);

/// Brute-force projector onto total photon number n: gathers the product
/// amplitudes along the anti-diagonal and normalizes. prob is the
/// pre-normalization squared norm.
ProjectionResult project_total_n(const TwoModeState& state, int n);
ProjectionResult project_total_n(const ThreeModeState& state, int n);

/// Closed form: coeffs[k] = e^{i(phi k + theta n)} 2^{-n/2} sqrt(C(n,k)).
ReducedState reduced_state_analytic(Complex alpha, double phi, int n);

/// ((1 + e^{-i(phi_i - phi_j)})/2)^n; modulus cos^n((phi_i - phi_j)/2).
Complex reduced_overlap(double phi_i, double phi_j, int n);

}  // namespace fockps
