#pragma once

// Cross-checks and timing of the fast path against the long-division oracle.

#include "repdec/period.hpp"

#include <optional>
#include <span>
#include <vector>

namespace repdec {

struct Mismatch {
    u64 n = 0;
    PeriodInfo fast;
    PeriodInfo oracle;
};

struct VerifyResult {
    u64 limit = 0;
    u64 checked = 0;
    std::optional<Mismatch> first_mismatch;
};

/// Compares period_length and naive_period_oracle for every n in [1, limit],
/// stopping at the first disagreement.
VerifyResult verify_range(u64 limit);

/// count values drawn uniformly from [lo, hi] by a generator seeded with seed.
std::vector<u64> bench_samples(u64 lo, u64 hi, u64 count, u64 seed);

struct BenchResult {
    std::vector<u64> samples;
    double fast_ms = 0.0;
    double naive_ms = 0.0;
    u64 disagreements = 0;

    double speedup() const noexcept { return fast_ms > 0.0 ? naive_ms / fast_ms : 0.0; }
};

BenchResult run_bench(std::span<const u64> samples);

} // namespace repdec
