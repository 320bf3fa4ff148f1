#include "fockps/infocalc.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace fockps;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("per-n Holevo bound") {
    for (int n = 1; n <= 5; ++n) {
        CHECK(holevo_per_n(kPi / 2.0, n) == doctest::Approx(1.0).epsilon(1e-14));
    }
    // cos^2(pi/3) = 1/4 -> h(0.375)
    CHECK(holevo_per_n(kPi / 3.0, 2) == doctest::Approx(0.954434002925).epsilon(1e-9));
    CHECK(holevo_per_n(1e-8, 3) < 1e-12);
    CHECK_THROWS_AS(holevo_per_n(0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(holevo_per_n(2.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(holevo_per_n(0.5, 0), std::invalid_argument);
}

TEST_CASE("per-n Holevo bound grows with n toward 1") {
    for (double delta : {0.1, 0.5, 1.0, kPi / 2.0 - 1e-3}) {
        double prev = 0.0;
        for (int n = 1; n <= 60; ++n) {
            const double chi_n = holevo_per_n(delta, n);
            CHECK(chi_n >= prev - 1e-15);
            prev = chi_n;
        }
        CHECK(holevo_per_n(delta, 4000) == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("Holevo bound from the overlap") {
    CHECK(holevo_from_overlap(1.0) == 0.0);
    CHECK(holevo_from_overlap(0.0) == 1.0);
    CHECK(holevo_from_overlap(0.5) == doctest::Approx(0.811278124459).epsilon(1e-9));
    CHECK_THROWS_AS(holevo_from_overlap(1.5), std::invalid_argument);
    CHECK_THROWS_AS(holevo_from_overlap(-0.2), std::invalid_argument);
}

TEST_CASE("eigenvalue oracle agrees with the closed form") {
    CHECK(holevo_eigen_oracle(Complex(0.0, 0.0)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(holevo_eigen_oracle(Complex(1.0, 0.0)) == doctest::Approx(0.0).epsilon(1e-12));
    const Complex c = std::polar(0.3, 1.2);
    CHECK(holevo_eigen_oracle(c) ==
          doctest::Approx(holevo_from_overlap(0.3)).epsilon(1e-13));

    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> mod(0.0, 1.0);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    for (int i = 0; i < 1000; ++i) {
        const Complex z = std::polar(mod(rng), ang(rng));
        CHECK(std::abs(holevo_eigen_oracle(z) - holevo_from_overlap(std::abs(z))) < 1e-12);
    }
}

TEST_CASE("full Holevo bound") {
    CHECK(holevo_full(0.0, 1.0) == 0.0);
    // h((1 - e^{-0.2})/2); the eigenvalue oracle derives the same value
    const double v = holevo_full(0.1, kPi / 2.0);
    CHECK(v == doctest::Approx(0.438584567674).epsilon(1e-9));
    CHECK(std::abs(v - holevo_eigen_oracle(Complex(std::exp(-0.2), 0.0))) < 1e-12);
    CHECK(holevo_full(500.0, kPi / 2.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(holevo_full(-0.1, 1.0), std::invalid_argument);
}

TEST_CASE("full Holevo bound is monotone in mu and delta") {
    double prev = -1.0;
    for (int i = 0; i <= 40; ++i) {
        const double v = holevo_full(i * 0.05, 0.8);
        CHECK(v >= prev - 1e-15);
        prev = v;
    }
    prev = -1.0;
    for (int i = 1; i <= 40; ++i) {
        const double v = holevo_full(0.4, i * (kPi / 2.0) / 40.0);
        CHECK(v >= prev - 1e-15);
        prev = v;
    }
}

TEST_CASE("Gram matrix validation") {
    using Row = std::vector<Complex>;
    CHECK_NOTHROW(GramMatrix({Row{1.0, 0.5}, Row{0.5, 1.0}}));
    // not Hermitian
    CHECK_THROWS_AS(GramMatrix({Row{1.0, 0.5}, Row{0.2, 1.0}}), std::invalid_argument);
    // diagonal off unity
    CHECK_THROWS_AS(GramMatrix({Row{0.9, 0.0}, Row{0.0, 1.0}}), std::invalid_argument);
    // indefinite
    CHECK_THROWS_AS(GramMatrix({Row{1.0, 2.0}, Row{2.0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(GramMatrix({}), std::invalid_argument);
}

TEST_CASE("Gram feasibility endpoints") {
    using Row = std::vector<Complex>;
    const GramMatrix g({Row{1.0, Complex(0.3, 0.2)}, Row{Complex(0.3, -0.2), 1.0}});
    CHECK(gram_feasible(g, g, 1.0));
    CHECK(gram_feasible(g, g, 0.0));
    CHECK(gram_max_success(g, g) == 1.0);
}

TEST_CASE("overlap-0.5 inputs with orthogonal outputs flip at p_s = 0.5") {
    using Row = std::vector<Complex>;
    const GramMatrix gin({Row{1.0, 0.5}, Row{0.5, 1.0}});
    const GramMatrix gout({Row{1.0, 0.0}, Row{0.0, 1.0}});
    CHECK(gram_feasible(gin, gout, 0.49));
    CHECK_FALSE(gram_feasible(gin, gout, 0.51));
    CHECK(gram_max_success(gin, gout) == doctest::Approx(0.5).epsilon(1e-8));
    // 2x2 algebra: min eigenvalue of G_in - p G_out is (1 - p) - |c_in|
    CHECK(gram_feasible(gin, gout, 0.5));
}

TEST_CASE("identity transformation is always fully feasible") {
    using Row = std::vector<Complex>;
    for (double c : {0.1, 0.9}) {
        const GramMatrix g({Row{1.0, c}, Row{c, 1.0}});
        CHECK(gram_max_success(g, g) == 1.0);
    }
}

TEST_CASE("feasibility is monotone in p_s") {
    using Row = std::vector<Complex>;
    const GramMatrix gin({Row{1.0, 0.6, 0.2}, Row{0.6, 1.0, 0.4}, Row{0.2, 0.4, 1.0}});
    const GramMatrix gout({Row{1.0, 0.1, 0.0}, Row{0.1, 1.0, 0.1}, Row{0.0, 0.1, 1.0}});
    const double pmax = gram_max_success(gin, gout);
    for (int i = 0; i <= 20; ++i) {
        const double p = i / 20.0;
        CHECK(gram_feasible(gin, gout, p) == (p <= pmax + 1e-6));
    }
}

TEST_CASE("gram dimension mismatch") {
    using Row = std::vector<Complex>;
    const GramMatrix g2({Row{1.0, 0.5}, Row{0.5, 1.0}});
    const GramMatrix g3(
        {Row{1.0, 0.0, 0.0}, Row{0.0, 1.0, 0.0}, Row{0.0, 0.0, 1.0}});
    CHECK_THROWS_AS(gram_feasible(g2, g3, 0.5), std::invalid_argument);
}
