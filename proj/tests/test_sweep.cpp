#include "fockps/sweep.hpp"

#include "fockps/report.hpp"

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>

using namespace fockps;

namespace {
constexpr double kPi = std::numbers::pi;

SweepSpec small_spec() {
    SweepSpec spec;
    spec.mu_min = 1e-3;
    spec.mu_max = 1.0;
    spec.mu_steps = 24;
    spec.eta_min = 1e-3;
    spec.eta_max = 1.0;
    spec.eta_steps = 24;
    spec.delta = kPi / 2.0;
    return spec;
}
}  // namespace

TEST_CASE("axis points hit both endpoints exactly") {
    const auto lin = axis_points(0.25, 0.75, 5, AxisScale::linear);
    REQUIRE(lin.size() == 5);
    CHECK(lin.front() == 0.25);
    CHECK(lin.back() == 0.75);
    CHECK(lin[2] == doctest::Approx(0.5));

    const auto lg = axis_points(1e-3, 1.0, 4, AxisScale::log);
    CHECK(lg.front() == 1e-3);
    CHECK(lg.back() == 1.0);
    CHECK(lg[1] == doctest::Approx(1e-2).epsilon(1e-12));
    CHECK_THROWS_AS(axis_points(0.0, 1.0, 4, AxisScale::log), std::invalid_argument);
    CHECK_THROWS_AS(axis_points(0.5, 0.4, 4, AxisScale::linear), std::invalid_argument);
    CHECK_THROWS_AS(axis_points(0.1, 0.5, 1, AxisScale::linear), std::invalid_argument);
}

TEST_CASE("sweep spec validation") {
    SweepSpec bad = small_spec();
    bad.mu_steps = 1;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = small_spec();
    bad.delta = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = small_spec();
    bad.eta_max = 1.5;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("parallel sweep kernel matches the serial reference bit for bit") {
    SweepSpec spec = small_spec();
    spec.delta = kPi / 3.0;
    const auto serial = run_sweep(spec, Execution::serial);
    const auto parallel = run_sweep(spec, Execution::parallel);
    REQUIRE(serial.size() == parallel.size());
    CHECK(std::memcmp(serial.data(), parallel.data(),
                      serial.size() * sizeof(SweepRow)) == 0);
}

TEST_CASE("sweep rows are mu-major and complete") {
    const SweepSpec spec = small_spec();
    const auto rows = run_sweep(spec);
    REQUIRE(rows.size() == static_cast<std::size_t>(spec.mu_steps) * spec.eta_steps);
    for (int i = 0; i < spec.mu_steps; ++i) {
        for (int j = 1; j < spec.eta_steps; ++j) {
            const auto& prev = rows[i * spec.eta_steps + j - 1];
            const auto& cur = rows[i * spec.eta_steps + j];
            CHECK(cur.mu == prev.mu);
            CHECK(cur.eta_L > prev.eta_L);
        }
    }
}

TEST_CASE("sweep csv format and determinism") {
    const SweepSpec spec = small_spec();
    const std::string a = sweep_csv(run_sweep(spec));
    const std::string b = sweep_csv(run_sweep(spec, Execution::serial));
    CHECK(a == b);
    CHECK(a.rfind("mu,eta_L,delta,I,chi,region,z,eta1\n", 0) == 0);
    CHECK(a.find("\r") == std::string::npos);
    const auto lines = 1 + spec.mu_steps * spec.eta_steps;
    std::size_t count = 0;
    for (char ch : a) count += ch == '\n';
    CHECK(count == static_cast<std::size_t>(lines));
}

TEST_CASE("regions form three contiguous bands per mu column at pi/2") {
    SweepSpec spec = small_spec();
    spec.mu_steps = 40;
    spec.eta_steps = 40;
    const auto rows = run_sweep(spec);
    for (int i = 0; i < spec.mu_steps; ++i) {
        int last = 0;  // bottom=0, middle=1, top=2 must be non-decreasing in eta
        for (int j = 0; j < spec.eta_steps; ++j) {
            const Region r = rows[i * spec.eta_steps + j].region;
            const int ord = r == Region::bottom ? 0 : (r == Region::middle ? 1 : 2);
            CHECK(ord >= last);
            last = ord;
        }
        CHECK(rows[i * spec.eta_steps + spec.eta_steps - 1].region == Region::top);
    }
}

TEST_CASE("boundary rows carry the three curves") {
    const auto rows = run_boundary(kPi / 2.0, 0.05, 1.0, 20);
    REQUIRE(rows.size() == 20);
    for (const auto& r : rows) {
        CHECK(r.bottom_eta == doctest::Approx(0.5 * r.mu));
        REQUIRE(r.iso_eta.has_value());
        CHECK(*r.iso_eta == doctest::Approx(r.top_eta).epsilon(1e-6));
    }
}

TEST_CASE("iso curve terminates near the critical mean photon number") {
    const double delta = 0.0237 * kPi;
    const auto rows = run_boundary(delta, 0.30, 0.40, 21);
    bool has_crossing_below = false;
    bool has_crossing_above = false;
    for (const auto& r : rows) {
        if (r.mu < 0.335 && r.iso_eta.has_value()) has_crossing_below = true;
        if (r.mu > 0.345 && r.iso_eta.has_value()) has_crossing_above = true;
    }
    CHECK(has_crossing_below);
    CHECK_FALSE(has_crossing_above);
}

TEST_CASE("csv numbers are 12-significant-digit round trips") {
    CHECK(format_sig12(0.5833446607096622) == "0.58334466071");
    CHECK(format_sig12(1.0) == "1");
    CHECK(format_sig12(round_sig12(0.5833446607096622)) == "0.58334466071");
}
