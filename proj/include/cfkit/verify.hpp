#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cfkit {

struct TrialFailure {
    std::uint64_t seed = 0;  // reproducer seed for the failing trial
    std::string inputs;
    std::string expected;
    std::string actual;
};

struct VerifyReport {
    std::string suite;
    long long trials = 0;
    std::vector<TrialFailure> failures;
    bool pass() const { return failures.empty(); }
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    long long trials = -1;   // -1 selects the suite default
    double eps = 1e-10;      // residual tolerance for the apps suite
    long long phi_depth = -1;  // extra by-depth layers for the phi suite, beyond closure
};

// Closed-form reconstruction equals forward iteration, exactly in rationals.
VerifyReport verify_closed_form(const VerifyOptions& opts);

// DP sum over gap-constrained subsets equals brute-force enumeration, and
// the by-depth layers close to the total, exactly in rationals.
VerifyReport verify_phi(const VerifyOptions& opts);

// Truncated series-ratio at n = m+2 equals the m-th convergent, exactly in
// rationals, skipping at-infinity convergents.
VerifyReport verify_bridge(const VerifyOptions& opts);

// Fraction-vs-series identity residuals for the three applications at their
// reference points, in the float realization at the current precision.
VerifyReport verify_apps(const VerifyOptions& opts);

// suite: closed-form | phi | bridge | apps | all.
std::vector<VerifyReport> run_verify_suites(const std::string& suite, const VerifyOptions& opts);

}  // namespace cfkit
