#pragma once

#include "fockps/fock.hpp"

namespace fockps {

/// Per-photon-number Holevo bound chi^(n)(delta) = h((1 - cos^n(delta))/2).
/// Requires 0 < delta <= pi/2 and n >= 1.
double holevo_per_n(double delta, int n);

/// h((1 - |c|)/2) for a two-state ensemble with overlap modulus c_abs.
double holevo_from_overlap(double c_abs);

/// Builds the 2x2 ensemble density matrix from the Gram-Schmidt basis,
/// diagonalizes it, and returns the Shannon entropy of the eigenvalues.
/// Agrees with holevo_from_overlap(|c|) to 1e-12.
double holevo_eigen_oracle(Complex c);

/// Full Holevo bound h((1 - e^{-mu (1 - cos 2 delta)})/2) for coherent
/// encodings with mean photon number mu and half phase difference delta.
double holevo_full(double mu, double delta);

/// Hermitian matrix of pairwise state overlaps. The constructor enforces
/// hermiticity within 1e-12, unit diagonal, and positive semidefiniteness
/// within a -1e-10 eigenvalue slack.
class GramMatrix {
  public:
    explicit GramMatrix(std::vector<std::vector<Complex>> entries);

    int dim() const { return static_cast<int>(entries_.size()); }
    const std::vector<std::vector<Complex>>& entries() const { return entries_; }

  private:
    std::vector<std::vector<Complex>> entries_;
};

/// True iff min eigenvalue of (G_in - p_s G_out) >= -1e-10, i.e. a
/// post-selective transformation succeeding with probability p_s exists.
bool gram_feasible(const GramMatrix& g_in, const GramMatrix& g_out, double p_s);

/// Largest feasible p_s in [0,1], located by bisection to 1e-9.
double gram_max_success(const GramMatrix& g_in, const GramMatrix& g_out);

}  // namespace fockps
