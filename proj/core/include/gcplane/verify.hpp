#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcplane/plane.hpp"

namespace gcp {

struct VerifyOptions {
    std::vector<double> p_values{-3.0, -1.0, 0.0, 1.0, 3.0};
    std::uint64_t seed = 42;
    std::int64_t cases = 10000; // per check and p cell; heavy checks scale it down
    double tol = 1e-8;          // threshold on normalized residuals
    std::string inject;         // testing hook: "bobillier-sign" flips one term
};

struct VerifyFailure {
    double p = 0.0;
    std::int64_t seed_offset = 0;
    double residual = 0.0;
    std::string check; // carried for diagnostics; not part of the wire format
};

struct CheckTiming {
    std::string check;
    double ms = 0.0;
};

struct VerifyReport {
    std::vector<double> p_values;
    std::uint64_t seed = 0;
    std::int64_t cases_run = 0;
    double max_abs_residual = 0.0;
    std::vector<VerifyFailure> failures;
    std::vector<CheckTiming> timings;

    bool ok() const { return failures.empty(); }
};

/// Run the property battery (p-trig identities, algebra of C_p, kinematic
/// oracles, Euler-Savary and Bobillier routes) over the requested p sweep.
/// All residuals are normalized to their natural scale so one tolerance
/// applies. Results are a deterministic function of (p_values, seed, cases).
VerifyReport run_verify(const VerifyOptions& opts);

/// Wire format with stable key order and 17-significant-digit numbers.
/// Timings vary run to run, so they are appended only on request (byte-
/// identical output must stay reproducible).
std::string verify_report_to_json(const VerifyReport& report, bool include_timings = false);

} // namespace gcp
