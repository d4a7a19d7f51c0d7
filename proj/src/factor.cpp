#include "repdec/factor.hpp"

#include <algorithm>
#include <map>

#include <fmt/format.h>

namespace repdec {

namespace {

constexpr u64 kTrialBound = 10'000;

const std::vector<u64>& trial_primes()
{
    static const std::vector<u64> primes = [] {
        std::vector<bool> composite(kTrialBound, false);
        std::vector<u64> out;
        for (u64 i = 2; i < kTrialBound; ++i) {
            if (composite[i])
                continue;
            out.push_back(i);
            for (u64 j = i * i; j < kTrialBound; j += i)
                composite[j] = true;
        }
        return out;
    }();
    return primes;
}

// Brent's variant of Pollard rho over f(x) = x^2 + c. Returns a nontrivial
// divisor of the odd composite n, or n itself when this c cycles out.
u64 brent_rho(u64 n, u64 x0, u64 c)
{
    constexpr u64 kBatch = 128;
    auto f = [&](u64 x) { return (detail::mulmod_u64(x, x, n) + c) % n; };

    u64 y = x0, x = x0, ys = x0;
    u64 g = 1, q = 1;
    for (u64 r = 1; g == 1; r <<= 1) {
        x = y;
        for (u64 i = 0; i < r; ++i)
            y = f(y);
        for (u64 k = 0; k < r && g == 1; k += kBatch) {
            ys = y;
            const u64 steps = std::min(kBatch, r - k);
            for (u64 i = 0; i < steps; ++i) {
                y = f(y);
                q = detail::mulmod_u64(q, x > y ? x - y : y - x, n);
            }
            g = gcd(q, n);
        }
    }
    if (g == n) {
        // The batched product overshot; walk back one step at a time.
        do {
            ys = f(ys);
            g = gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g;
}

u64 find_divisor(u64 n)
{
    // Seeded from n; each failed attempt moves to the next constant.
    const u64 seed = n * 0x9E3779B97F4A7C15ULL;
    for (u64 attempt = 0;; ++attempt) {
        const u64 c = 1 + (seed + attempt) % (n - 1);
        const u64 x0 = (seed >> 7) % n;
        const u64 d = brent_rho(n, x0, c);
        if (d != 1 && d != n)
            return d;
    }
}

void split(u64 n, std::map<u64, unsigned>& out)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    const u64 d = find_divisor(n);
    split(d, out);
    split(n / d, out);
}

} // namespace

Factorization factorize(u64 n)
{
    if (n == 0 || n > kMaxStandardModulus)
        throw Error(ErrorCode::OutOfRange,
                    fmt::format("cannot factor {}: supported range is [1, 2^63 - 1]", n));

    Factorization result{n, {}};
    u64 rest = n;
    for (u64 p : trial_primes()) {
        if (p * p > rest)
            break;
        if (rest % p != 0)
            continue;
        const auto v = valuation(rest, p);
        result.factors.push_back({p, v.exponent});
        rest = v.cofactor;
    }
    if (rest == 1)
        return result;

    const u64 last_trial = trial_primes().back();
    if (rest <= last_trial * last_trial || is_prime(rest)) {
        result.factors.push_back({rest, 1});
        return result;
    }

    std::map<u64, unsigned> large;
    split(rest, large);
    for (const auto& [p, e] : large)
        result.factors.push_back({p, e});
    return result;
}

u64 expand_product(const Factorization& f)
{
    u64 product = 1;
    for (const auto& [p, e] : f.factors)
        for (unsigned i = 0; i < e; ++i)
            product = mul_checked(product, p);
    return product;
}

} // namespace repdec
