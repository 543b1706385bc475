#pragma once

#include <cstdint>

#include "msrcode/construct.hpp"

namespace msr {

struct SimSummary {
    int trials = 0;
    std::uint64_t seed = 0;
    int exact_repairs = 0;                  // equals trials on success
    std::uint64_t symbols_per_trial = 0;    // d * beta, identical every trial
    double mean_symbols_downloaded = 0.0;
    double savings_ratio = 0.0;             // k*alpha / (d*beta)

    bool operator==(const SimSummary&) const = default;
};

/// Seeded failure workload: each trial encodes a random stripe, fails a
/// random node, repairs it from a random size-d helper set, and compares
/// the repaired block against the original. A mismatch throws VerifyError;
/// the summary is fully determined by (pc, trials, seed).
SimSummary simulate_repairs(const ParityCheck& pc, int trials, std::uint64_t seed);

} // namespace msr
