#include "fockps/infocalc.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fockps {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kPsdSlack = -1e-10;
constexpr double kLn2 = 0.69314718055994530942;

Eigen::MatrixXcd to_eigen(const std::vector<std::vector<Complex>>& m) {
    const int d = static_cast<int>(m.size());
    Eigen::MatrixXcd out(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) out(i, j) = m[i][j];
    return out;
}

double min_hermitian_eigenvalue(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("hermitian eigensolver failed to converge");
    }
    return es.eigenvalues()(0);
}

}  // namespace

double holevo_per_n(double delta, int n) {
    if (!(delta > 0.0 && delta <= kHalfPi)) {
        throw std::invalid_argument("holevo_per_n: delta outside (0, pi/2]");
    }
    if (n < 1) throw std::invalid_argument("holevo_per_n: n must be >= 1");
    const double s = std::sin(0.5 * delta);
    const double y = std::min(1.0, 2.0 * s * s);       // 1 - cos(delta)
    const double log_cos = std::log1p(-y);             // -inf at delta = pi/2
    const double one_minus_cos_n = -std::expm1(n * log_cos);
    return binary_entropy(0.5 * one_minus_cos_n);
}

double holevo_from_overlap(double c_abs) {
    if (!(c_abs >= -1e-12 && c_abs <= 1.0 + 1e-12)) {
        throw std::invalid_argument("holevo_from_overlap: overlap outside [0,1]");
    }
    c_abs = std::clamp(c_abs, 0.0, 1.0);
    return binary_entropy(0.5 * (1.0 - c_abs));
}

double holevo_eigen_oracle(Complex c) {
    double c_abs = std::abs(c);
    if (c_abs > 1.0 + 1e-12) {
        throw std::invalid_argument("holevo_eigen_oracle: |c| exceeds 1");
    }
    c_abs = std::min(c_abs, 1.0);
    const double w = std::sqrt(1.0 - c_abs * c_abs);
    Eigen::Matrix2cd rho;
    rho(0, 0) = 0.5 * (1.0 + c_abs * c_abs);
    rho(0, 1) = 0.5 * std::conj(c) * w;
    rho(1, 0) = 0.5 * c * w;
    rho(1, 1) = 0.5 * (1.0 - c_abs * c_abs);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(rho);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("holevo_eigen_oracle: eigensolver failed");
    }
    double entropy = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double lambda = std::clamp(es.eigenvalues()(i), 0.0, 1.0);
        if (lambda > 0.0) entropy -= lambda * std::log(lambda) / kLn2;
    }
    return entropy;
}

double holevo_full(double mu, double delta) {
    if (!(mu >= 0.0) || !std::isfinite(mu)) {
        throw std::invalid_argument("holevo_full: mu must be finite and >= 0");
    }
    const double s = std::sin(delta);
    // 1 - |c| with |c| = e^{-mu(1-cos 2 delta)} = e^{-2 mu sin^2 delta}
    const double one_minus_c = -std::expm1(-2.0 * mu * s * s);
    return binary_entropy(0.5 * one_minus_c);
}

GramMatrix::GramMatrix(std::vector<std::vector<Complex>> entries)
    : entries_(std::move(entries)) {
    const std::size_t d = entries_.size();
    if (d == 0) throw std::invalid_argument("GramMatrix: dimension must be >= 1");
    for (const auto& row : entries_) {
        if (row.size() != d) throw std::invalid_argument("GramMatrix: matrix not square");
    }
    for (std::size_t i = 0; i < d; ++i) {
        if (std::abs(entries_[i][i] - Complex(1.0, 0.0)) > 1e-12) {
            throw std::invalid_argument("GramMatrix: diagonal entries must equal 1");
        }
        for (std::size_t j = 0; j < d; ++j) {
            if (std::abs(entries_[i][j] - std::conj(entries_[j][i])) > 1e-12) {
                throw std::invalid_argument("GramMatrix: matrix not Hermitian");
            }
        }
    }
    if (min_hermitian_eigenvalue(to_eigen(entries_)) < kPsdSlack) {
        throw std::invalid_argument("GramMatrix: matrix not positive semidefinite");
    }
}

bool gram_feasible(const GramMatrix& g_in, const GramMatrix& g_out, double p_s) {
    if (g_in.dim() != g_out.dim()) {
        throw std::invalid_argument("gram_feasible: dimension mismatch");
    }
    if (!(p_s >= -1e-12 && p_s <= 1.0 + 1e-12)) {
        throw std::invalid_argument("gram_feasible: p_s outside [0,1]");
    }
    p_s = std::clamp(p_s, 0.0, 1.0);
    const Eigen::MatrixXcd diff =
        to_eigen(g_in.entries()) - p_s * to_eigen(g_out.entries());
    return min_hermitian_eigenvalue(diff) >= kPsdSlack;
}

double gram_max_success(const GramMatrix& g_in, const GramMatrix& g_out) {
    // min eigenvalue of G_in - p G_out is non-increasing in p (G_out is PSD),
    // so feasibility is an interval [0, p_max] and bisection applies.
    if (gram_feasible(g_in, g_out, 1.0)) return 1.0;
    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        if (gram_feasible(g_in, g_out, mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

}  // namespace fockps
