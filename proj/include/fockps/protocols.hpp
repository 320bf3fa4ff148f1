#pragma once

#include "fockps/attack.hpp"
#include "fockps/fock.hpp"

#include <vector>

namespace fockps {

/// J_p(x) for integer order of either sign, x >= 0.
double bessel_j(int p, double x);

/// Wigner small-d row d^S_{0,p}(beta), p = -S..S, by a three-term recurrence
/// in p run downward from the closed-form seed at p = S, with logarithmic
/// rescaling of the working pair. The row is validated against unit L2 norm
/// (throws if it deviates by more than 1e-8) and renormalized.
/// Requires 0 <= beta < pi.
std::vector<double> wigner_d0_row(int s, double beta);

struct MZIParams {
    double mod_alpha = 0.0;
    double phi = 0.0;
};

struct PhaseTimeParams {
    enum class Basis { L, R };
    double mod_alpha = 0.0;
    double phi = 0.0;
    Basis basis = Basis::L;
};

/// Two-sender phase-matching signal parameters. theta_a/theta_b are the
/// senders' unknown global phases, phi_a/phi_b the announced random shifts,
/// p_a/p_b the key bits, theta_e the eavesdropper's reference phase.
struct PhaseMatchingParams {
    double mod_alpha = 0.0;
    double theta_a = 0.0;
    double theta_b = 0.0;
    double phi_a = 0.0;
    double phi_b = 0.0;
    int p_a = 0;
    int p_b = 0;
    double theta_e = 0.0;
};

struct SCWParams {
    double mod_alpha0 = 0.0;  // carrier modulus |alpha_0|
    double m = 0.0;           // modulation index
    int s_modes = 1;          // S; sidebands p in [-S, S]
    double omega = 0.0;       // carrier frequency, bookkeeping only
    double big_omega = 0.0;   // subcarrier spacing, bookkeeping only
    double theta_e = 0.0;
    double beta_scale = 1.0;  // beta = beta_scale * m / sqrt(S(S+1))
};

/// The MZI state is already the canonical two-mode pair, so the adapter is a
/// relabeling: mu = |alpha|^2.
AttackPoint mzi_to_canonical(const MZIParams& p, double eta_L, double delta);

/// Three-mode reduced overlap for two phase-time signals in the same
/// time-slot basis, cross-checked against the two-mode closed form
/// (throws if they differ by more than 1e-10).
Complex pt_overlap_check(const PhaseTimeParams& a, const PhaseTimeParams& b, int n);

/// Reduced overlap between two phase-matching signals that differ in exactly
/// one key bit, computed from the coefficient formula and cross-checked by
/// the tensor oracle. delta_{n,0} when the non-key parameters are fixed.
Complex pm_reduced_overlap(const PhaseMatchingParams& p0, const PhaseMatchingParams& p1,
                           int n);

/// Blocking probability with two senders: P(2 eta1 mu, 0)^2.
double pm_block_probability(double mu, double eta1);

struct SidebandAmplitude {
    int p = 0;
    Complex amplitude;
};

/// Sideband amplitudes of the modulated carrier: alpha_0 J_p(m) in Bessel
/// mode, alpha_0 d^S_{0,p}(beta) in Wigner mode. Both rows satisfy
/// sum_p |amp|^2 = |alpha_0|^2 (throws if violated beyond 1e-8).
std::vector<SidebandAmplitude> scw_sideband_amplitudes(const SCWParams& p, bool use_bessel);

struct SCWCanonical {
    struct Pair {
        int p = 0;
        AttackPoint point;
    };
    std::vector<Pair> pairs;        // one canonical attack instance per sideband p != 0
    double reference_power = 0.0;   // |alpha_0|^2 J_0^2(m)
    double sideband_power = 0.0;    // |alpha_0|^2 (1 - J_0^2(m))
};

/// Pairs each sideband with a reference copy carved from the carrier and
/// emits the canonical attack point per pair. Requires the carrier power
/// to exceed the total sideband power: J_0^2(m) > 1 - J_0^2(m).
SCWCanonical scw_to_canonical(const SCWParams& p, double eta_L, double delta);

}  // namespace fockps
