#include "repdec/scan.hpp"

#include "repdec/period.hpp"
#include "repdec/sieve.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include <fmt/format.h>

namespace repdec {

namespace {

struct ChunkResult {
    std::vector<u64> hits;
    u64 examined = 0;
};

template <typename Predicate>
ScanReport run_scan(ScanKind kind, u64 limit, unsigned threads, Predicate is_hit)
{
    if (limit < kMinScanLimit || limit > kMaxScanLimit)
        throw Error(ErrorCode::OutOfRange,
                    fmt::format("scan limit {} is outside [{}, {}]", limit, kMinScanLimit,
                                kMaxScanLimit));

    const auto start = std::chrono::steady_clock::now();
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<u64>(threads, limit / 2));

    std::vector<ChunkResult> chunks(threads);
    auto work = [&](unsigned index) {
        const u64 lo = 2 + (limit - 1) * index / threads;
        const u64 hi = 1 + (limit - 1) * (index + 1) / threads;
        ChunkResult& out = chunks[index];
        for_each_prime(lo, hi, [&](u64 p) {
            if (detail::divides_base(kBase, p))
                return;
            ++out.examined;
            if (is_hit(p))
                out.hits.push_back(p);
        });
    };

    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i)
            pool.emplace_back(work, i);
    }

    ScanReport report{kind, limit, {}, 0, std::nullopt, 0.0};
    for (const auto& chunk : chunks) {
        report.hits.insert(report.hits.end(), chunk.hits.begin(), chunk.hits.end());
        report.primes_examined += chunk.examined;
    }
    if (kind == ScanKind::FullReptend)
        report.density = report.primes_examined == 0
            ? 0.0
            : static_cast<double>(report.hits.size()) / static_cast<double>(report.primes_examined);
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace

ScanReport scan_full_reptend(u64 limit, unsigned threads)
{
    return run_scan(ScanKind::FullReptend, limit, threads,
                    [](u64 p) { return order_prime(p) == p - 1; });
}

ScanReport scan_wieferich_m(u64 limit, unsigned threads)
{
    return run_scan(ScanKind::WieferichM, limit, threads, [](u64 p) {
        // m_p > 0 iff p^2 | 10^{p-1} - 1, since l_p | p - 1. Only the rare
        // survivors of this filter pay for the full m_p computation.
        const u64 square = p * p;
        if (powmod(kBase % square, p - 1, Modulus(square)) != 1)
            return false;
        return compute_m_p(p) > 0;
    });
}

bool probe_m_ge_2(u64 p)
{
    const u64 order = order_prime(p);
    u128 cube = 0;
    if (__builtin_mul_overflow(static_cast<u128>(p) * p, static_cast<u128>(p), &cube)
        || cube > kMaxWideModulus)
        throw Error(ErrorCode::Overflow, fmt::format("{}^3 exceeds 2^127 - 1", p));
    return powmod_wide(kBase, order, WideModulus(cube)) == 1;
}

} // namespace repdec
