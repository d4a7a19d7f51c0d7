#include "repdec/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace repdec {

namespace {

constexpr u64 kSegmentOdds = u64{1} << 18; // odd numbers per segment

u64 isqrt(u64 n)
{
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

} // namespace

std::vector<u64> small_primes(u64 limit)
{
    std::vector<u64> out;
    if (limit < 2)
        return out;
    std::vector<bool> composite(limit + 1, false);
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i])
            continue;
        out.push_back(i);
        for (u64 j = i * i; j <= limit; j += i)
            composite[j] = true;
    }
    return out;
}

void for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& visit)
{
    lo = std::max<u64>(lo, 2);
    if (lo > hi)
        return;
    if (lo == 2)
        visit(2);

    const std::vector<u64> base = small_primes(isqrt(hi));
    std::vector<std::uint8_t> sieve(kSegmentOdds);

    // Segments cover odd numbers first_odd + 2*i.
    u64 first_odd = std::max<u64>(lo | 1, 3);
    while (first_odd <= hi) {
        const u64 count = std::min(kSegmentOdds, (hi - first_odd) / 2 + 1);
        const u64 last = first_odd + 2 * (count - 1);
        std::fill_n(sieve.begin(), count, std::uint8_t{1});

        for (std::size_t k = 1; k < base.size(); ++k) {
            const u64 p = base[k];
            if (p * p > last)
                break;
            u64 start = std::max(p * p, (first_odd + p - 1) / p * p);
            if (start % 2 == 0)
                start += p;
            for (u64 m = start; m <= last; m += 2 * p)
                sieve[(m - first_odd) / 2] = 0;
        }

        for (u64 i = 0; i < count; ++i) {
            if (sieve[i])
                visit(first_odd + 2 * i);
        }
        first_odd = last + 2;
    }
}

} // namespace repdec
