#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fockps {

struct VerifyOptions {
    std::uint64_t seed = 20240915;
    int samples = 500;
    /// Multiplies every suite tolerance; values below 1 tighten the checks
    /// (used to exercise the failure path of the harness).
    double tol_scale = 1.0;
};

struct SuiteResult {
    std::string name;
    bool passed = true;
    int samples = 0;
    double max_error = 0.0;
    double tolerance = 0.0;
    std::string counterexample;  // inputs of the first failing sample
};

struct VerifyResult {
    std::vector<SuiteResult> suites;
    bool all_passed() const;
};

/// Seeded oracle-equivalence and property suites covering the projection
/// oracles, the Holevo routes, the attack calculus, and the protocol
/// adapters. Deterministic for a fixed seed.
VerifyResult run_verify(const VerifyOptions& options);

}  // namespace fockps
