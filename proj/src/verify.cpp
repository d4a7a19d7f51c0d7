#include "repdec/verify.hpp"

#include <chrono>
#include <random>

#include <fmt/format.h>

namespace repdec {

VerifyResult verify_range(u64 limit)
{
    if (limit > kOracleCap)
        throw Error(ErrorCode::OracleRangeExceeded,
                    fmt::format("verify limit {} exceeds the oracle cap {}", limit, kOracleCap));
    VerifyResult result{limit, 0, std::nullopt};
    for (u64 n = 1; n <= limit; ++n) {
        const PeriodInfo fast = period_length(n);
        const PeriodInfo slow = naive_period_oracle(n);
        ++result.checked;
        if (fast != slow) {
            result.first_mismatch = Mismatch{n, fast, slow};
            break;
        }
    }
    return result;
}

std::vector<u64> bench_samples(u64 lo, u64 hi, u64 count, u64 seed)
{
    if (lo == 0 || lo > hi)
        throw Error(ErrorCode::OutOfRange, fmt::format("empty sample range [{}, {}]", lo, hi));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<u64> pick(lo, hi);
    std::vector<u64> out(count);
    for (auto& n : out)
        n = pick(rng);
    return out;
}

BenchResult run_bench(std::span<const u64> samples)
{
    using clock = std::chrono::steady_clock;
    BenchResult result;
    result.samples.assign(samples.begin(), samples.end());

    std::vector<PeriodInfo> fast(samples.size());
    std::vector<PeriodInfo> slow(samples.size());

    auto t0 = clock::now();
    for (std::size_t i = 0; i < samples.size(); ++i)
        fast[i] = period_length(samples[i]);
    auto t1 = clock::now();
    for (std::size_t i = 0; i < samples.size(); ++i)
        slow[i] = naive_period_oracle(samples[i]);
    auto t2 = clock::now();

    result.fast_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    result.naive_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
    for (std::size_t i = 0; i < samples.size(); ++i)
        result.disagreements += fast[i] != slow[i];
    return result;
}

} // namespace repdec
