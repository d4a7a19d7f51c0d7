// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include "repdec/expansion.hpp"
#include "repdec/period.hpp"
#include "repdec/scan.hpp"
#include "repdec/sieve.hpp"
#include "repdec/verify.hpp"

#include <fmt/format.h>

#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

using namespace repdec;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double time_limit_s; // <= 0 means no runtime bound
    std::function<Outcome()> body;
};

Outcome golden_periods()
{
    const std::vector<std::pair<u64, u64>> table = {
        {7, 6}, {11, 2}, {13, 6}, {49, 42}, {27, 3}, {125, 1}, {42, 6}, {90, 1}, {2310, 6}};
    for (const auto& [n, expected] : table) {
        const u64 got = period_length(n).period;
        if (got != expected)
            return {false, fmt::format("l_{} = {}, expected {}", n, got, expected)};
    }
    return {true, "9/9 exact"};
}

Outcome golden_digits()
{
    struct Case {
        u64 n;
        const char* preperiod;
        const char* period;
    };
    const std::vector<Case> cases = {
        {7, "", "142857"},
        {27, "", "037"},
        {42, "0", "238095"},
        {49, "", "020408163265306122448979591836734693877551"},
        {11, "", "09"},
    };
    for (const auto& c : cases) {
        const auto e = expand(1, c.n);
        if (e.preperiod_digits != c.preperiod || e.period_digits != c.period)
            return {false, fmt::format("1/{} = 0.{}({})", c.n, e.preperiod_digits, e.period_digits)};
    }
    return {true, "5/5 byte-exact"};
}

Outcome oracle_equivalence()
{
    constexpr u64 limit = 100'000;
    for (u64 n = 1; n <= limit; ++n) {
        const auto fast = period_length(n);
        const auto slow = naive_period_oracle(n);
        if (fast.period != slow.period || fast.preperiod != slow.preperiod
            || fast.coprime_part != slow.coprime_part)
            return {false, fmt::format("mismatch at n = {}", n)};
    }
    return {true, fmt::format("{} values, 0 mismatches", limit)};
}

Outcome m_p_goldens()
{
    const std::vector<std::pair<u64, unsigned>> table = {{3, 1}, {7, 0}, {11, 0}, {487, 1}};
    for (const auto& [p, expected] : table) {
        const unsigned got = compute_m_p(p);
        if (got != expected)
            return {false, fmt::format("m_{} = {}, expected {}", p, got, expected)};
    }
    return {true, "4/4 exact"};
}

Outcome wieferich_scan()
{
    const auto report = scan_wieferich_m(1'000'000);
    const bool ok = report.hits == std::vector<u64>{3, 487};
    std::string hits;
    for (u64 p : report.hits)
        hits += (hits.empty() ? "" : ", ") + std::to_string(p);
    return {ok, fmt::format("hits {{{}}} over {} primes", hits, report.primes_examined)};
}

Outcome reptend_density()
{
    const auto report = scan_full_reptend(100'000);
    const double density = report.density.value_or(-1.0);
    return {density >= 0.359 && density <= 0.389,
            fmt::format("density {:.5f} ({} of {}), band [0.359, 0.389]", density,
                        report.hits.size(), report.primes_examined)};
}

Outcome prime_power_branches()
{
    u64 checked = 0;
    for (u64 p : small_primes(99)) {
        if (p == 2 || p == 5)
            continue;
        u64 pk = p;
        for (unsigned k = 1; pk * p <= 10'000'000; ++k, pk *= p) {
            const u64 lower = l_prime_power(p, k);
            const u64 upper = l_prime_power(p, k + 1);
            if (upper != lower && upper != p * lower)
                return {false, fmt::format("l_{}^{} = {} is neither l or p*l of {}", p, k + 1,
                                           upper, lower)};
            const std::string c = expand(1, pk).period_digits;
            if ((upper == lower) != digit_divisibility(c, p))
                return {false, fmt::format("branch disagrees with p | c at p = {}, k = {}", p, k)};
            ++checked;
        }
    }
    return {true, fmt::format("{} (p, k) pairs, 0 violations", checked)};
}

Outcome order_divides_p_minus_1()
{
    u64 checked = 0;
    for (u64 p : small_primes(100'000)) {
        if (p == 2 || p == 5)
            continue;
        if ((p - 1) % order_prime(p) != 0)
            return {false, fmt::format("l_{} does not divide {}", p, p - 1)};
        ++checked;
    }
    return {true, fmt::format("{} primes, 0 violations", checked)};
}

Outcome lcm_multiplicativity()
{
    std::mt19937_64 rng(20250101);
    int pairs = 0;
    while (pairs < 1000) {
        const u64 a = 1 + rng() % 100'000;
        const u64 b = 1 + rng() % (100'000 / a);
        if (std::gcd(a, b) != 1)
            continue;
        const u64 expected = std::lcm(period_length(a).period, period_length(b).period);
        if (period_length(a * b).period != expected)
            return {false, fmt::format("a = {}, b = {}", a, b)};
        ++pairs;
    }
    return {true, "1000 coprime pairs, 0 violations"};
}

Outcome fast_vs_naive()
{
    const auto samples = bench_samples(1'000'000, 10'000'000, 50, 5150);
    const auto result = run_bench(samples);
    const bool ok = result.disagreements == 0 && result.fast_ms * 10.0 <= result.naive_ms;
    return {ok, fmt::format("fast {:.3f} ms, naive {:.3f} ms, ratio {:.0f}x, {} disagreements",
                            result.fast_ms, result.naive_ms, result.speedup(),
                            result.disagreements)};
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "golden period table", 1.0, golden_periods},
        {2, "golden digit strings", 1.0, golden_digits},
        {3, "oracle equivalence on [1, 10^5]", 60.0, oracle_equivalence},
        {4, "m_p goldens", 1.0, m_p_goldens},
        {5, "m_p > 0 scan to 10^6", 120.0, wieferich_scan},
        {6, "full-reptend density at 10^5", 60.0, reptend_density},
        {7, "prime-power lifting branches", 0.0, prime_power_branches},
        {8, "l_p divides p - 1 for p <= 10^5", 30.0, order_divides_p_minus_1},
        {9, "lcm multiplicativity", 0.0, lcm_multiplicativity},
        {10, "fast path >= 10x faster than long division", 0.0, fast_vs_naive},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.body();
        } catch (const std::exception& e) {
            outcome = {false, fmt::format("threw: {}", e.what())};
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_s > 0.0 && seconds >= c.time_limit_s) {
            outcome.pass = false;
            outcome.detail += fmt::format("; exceeded {:.0f} s", c.time_limit_s);
        }
        failures += !outcome.pass;
        fmt::print("[{}] AC{:<2} {} - {} ({:.3f} s)\n", outcome.pass ? "PASS" : "FAIL", c.id,
                   c.name, outcome.detail, seconds);
    }
    fmt::print("{} of {} criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
