#pragma once

#include <complex>
#include <vector>

namespace fockps {

using Complex = std::complex<double>;

/// Binary entropy -x log2(x) - (1-x) log2(1-x), with h(0) = h(1) = 0.
/// Inputs within 1e-12 of [0,1] are clamped to the nearest endpoint;
/// anything further out throws std::invalid_argument.
double binary_entropy(double x);

/// Poisson pmf e^{-x} x^n / n!. Direct product for n <= 20, log-space above.
double poisson_pmf(double x, int n);

/// 1 - sum_{k=0..n} P(x,k), clamped at 0.
double poisson_tail(double x, int n);

/// <n|alpha> = e^{-|alpha|^2/2} alpha^n / sqrt(n!).
Complex coherent_amplitude(Complex alpha, int n);

/// Truncated single-mode amplitude vector; index = photon number.
struct FockVector {
    std::vector<Complex> amplitudes;

    int cutoff() const { return static_cast<int>(amplitudes.size()) - 1; }
    double norm2() const;
};

/// Expansion of |alpha> up to n_max photons. Throws if the Poisson tail
/// beyond the cutoff exceeds tail_tol.
FockVector coherent_fock_vector(Complex alpha, int n_max, double tail_tol = 1e-12);

}  // namespace fockps
