#include "fockps/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fockps {

namespace {
constexpr double kDomainSlack = 1e-12;
constexpr double kLn2 = 0.69314718055994530942;
}  // namespace

double binary_entropy(double x) {
    if (!(x >= -kDomainSlack && x <= 1.0 + kDomainSlack)) {
        throw std::invalid_argument("binary_entropy: argument " + std::to_string(x) +
                                    " outside [0,1]");
    }
    if (x <= 0.0 || x >= 1.0) return 0.0;
    // log1p keeps full precision for x near 0 and near 1
    const double h = (-x * std::log(x) - (1.0 - x) * std::log1p(-x)) / kLn2;
    return h < 1.0 ? h : 1.0;
}

double poisson_pmf(double x, int n) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw std::invalid_argument("poisson_pmf: mean must be finite and >= 0");
    }
    if (n < 0) throw std::invalid_argument("poisson_pmf: n must be >= 0");
    if (x == 0.0) return n == 0 ? 1.0 : 0.0;
    if (n <= 20) {
        double p = std::exp(-x);
        for (int i = 1; i <= n; ++i) p *= x / i;
        return p;
    }
    return std::exp(-x + n * std::log(x) - std::lgamma(n + 1.0));
}

double poisson_tail(double x, int n) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw std::invalid_argument("poisson_tail: mean must be finite and >= 0");
    }
    if (n < 0) throw std::invalid_argument("poisson_tail: n must be >= 0");
    if (x == 0.0) return 0.0;
    double p = std::exp(-x);
    double sum = p;
    for (int i = 1; i <= n; ++i) {
        p *= x / i;
        sum += p;
    }
    return sum < 1.0 ? 1.0 - sum : 0.0;
}

Complex coherent_amplitude(Complex alpha, int n) {
    if (n < 0) throw std::invalid_argument("coherent_amplitude: n must be >= 0");
    const double a2 = std::norm(alpha);
    if (a2 == 0.0) return n == 0 ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
    if (n <= 20) {
        Complex c = std::exp(-0.5 * a2);
        for (int i = 1; i <= n; ++i) c *= alpha / std::sqrt(static_cast<double>(i));
        return c;
    }
    const double log_mag = -0.5 * a2 + 0.5 * n * std::log(a2) - 0.5 * std::lgamma(n + 1.0);
    return std::polar(std::exp(log_mag), n * std::arg(alpha));
}

double FockVector::norm2() const {
    double s = 0.0;
    for (const Complex& a : amplitudes) s += std::norm(a);
    return s;
}

FockVector coherent_fock_vector(Complex alpha, int n_max, double tail_tol) {
    if (n_max < 0) throw std::invalid_argument("coherent_fock_vector: n_max must be >= 0");
    FockVector v;
    v.amplitudes.resize(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) v.amplitudes[n] = coherent_amplitude(alpha, n);
    const double deficit = poisson_tail(std::norm(alpha), n_max);
    if (deficit > tail_tol) {
        throw std::runtime_error("coherent_fock_vector: cutoff " + std::to_string(n_max) +
                                 " leaves norm deficit " + std::to_string(deficit) +
                                 " above tolerance");
    }
    return v;
}

}  // namespace fockps
