#include "repdec/period.hpp"

#include <algorithm>
#include <mutex>
#include <vector>

#include <fmt/format.h>

namespace repdec {

namespace detail {

bool divides_base(u64 base, u64 p) noexcept
{
    return base % p == 0;
}

static void require_supported_prime(u64 base, u64 p)
{
    if (p > kMaxStandardModulus)
        throw Error(ErrorCode::OutOfRange, fmt::format("{} exceeds 2^63 - 1", p));
    if (!is_prime(p))
        throw Error(ErrorCode::NotPrime, fmt::format("{} is not prime", p));
    if (divides_base(base, p))
        throw Error(ErrorCode::UnsupportedPrime,
                    fmt::format("1/{} terminates in base {}; no repeating cycle", p, base));
}

u64 order_mod_prime(u64 base, u64 p)
{
    require_supported_prime(base, p);
    const Modulus mod(p);
    const u64 b = base % p;
    u64 order = p - 1;
    for (const auto& [q, e] : factorize(p - 1).factors) {
        for (unsigned i = 0; i < e && powmod(b, order / q, mod) == 1; ++i)
            order /= q;
    }
    return order;
}

// Largest e with p^e | base^order - 1, minus one.
unsigned excess_valuation(u64 base, u64 p, u64 order)
{
    unsigned e = 1;
    u128 power = p;
    for (;;) {
        u128 next = 0;
        if (__builtin_mul_overflow(power, static_cast<u128>(p), &next) || next > kMaxWideModulus)
            throw Error(ErrorCode::Overflow,
                        fmt::format("lifting {}^{} exceeds the 2^127 - 1 modulus range", p, e + 1));
        const bool divides = next <= kMaxStandardModulus
            ? powmod(base % static_cast<u64>(next), order, Modulus(static_cast<u64>(next))) == 1
            : powmod_wide(base, order, WideModulus(next)) == 1;
        if (!divides)
            return e - 1;
        ++e;
        power = next;
    }
}

} // namespace detail

u64 order_prime(u64 p)
{
    return detail::order_mod_prime(kBase, p);
}

unsigned compute_m_p(u64 p)
{
    const u64 order = order_prime(p);
    return detail::excess_valuation(kBase, p, order);
}

u64 l_prime_power(u64 p, unsigned k)
{
    if (k == 0)
        throw Error(ErrorCode::InvalidArgument, "prime power exponent must be >= 1");
    if (p <= kMaxStandardModulus && is_prime(p) && detail::divides_base(kBase, p))
        return 1;
    const u64 lp = order_prime(p);
    if (k == 1)
        return lp;
    const unsigned mp = detail::excess_valuation(kBase, p, lp);
    if (k <= mp + 1)
        return lp;
    u64 result = lp;
    for (unsigned i = 0; i < k - (mp + 1); ++i)
        result = mul_checked(result, p);
    return result;
}

PeriodInfo period_length(u64 n)
{
    if (n == 0 || n > kMaxStandardModulus)
        throw Error(ErrorCode::OutOfRange,
                    fmt::format("{} is outside the supported range [1, 2^63 - 1]", n));
    PeriodInfo info{n, n, 0, 1};
    for (const auto& [p, e] : factorize(n).factors) {
        if (detail::divides_base(kBase, p)) {
            info.preperiod = std::max(info.preperiod, e);
            for (unsigned i = 0; i < e; ++i)
                info.coprime_part /= p;
        }
        info.period = lcm_checked(info.period, l_prime_power(p, e));
    }
    return info;
}

PeriodInfo naive_period_oracle(u64 n)
{
    if (n == 0 || n > kOracleCap)
        throw Error(ErrorCode::OracleRangeExceeded,
                    fmt::format("oracle accepts 1 <= n <= {}, got {}", kOracleCap, n));

    // first_visit[r] is the long-division step at which remainder r appeared.
    // The buffer persists per thread and is reset after every call.
    constexpr std::uint32_t kUnseen = UINT32_MAX;
    thread_local std::vector<std::uint32_t> first_visit;
    if (first_visit.size() < n)
        first_visit.resize(n, kUnseen);

    u64 r = 1 % n;
    std::uint32_t step = 0;
    while (first_visit[r] == kUnseen) {
        first_visit[r] = step++;
        r = (r * kBase) % n;
    }
    const std::uint32_t cycle_start = first_visit[r];

    // Walk the same sequence again to clear what was written.
    u64 s = 1 % n;
    for (std::uint32_t i = 0; i < step; ++i) {
        first_visit[s] = kUnseen;
        s = (s * kBase) % n;
    }

    PeriodInfo info{n, n, cycle_start, step - cycle_start};
    while (info.coprime_part % 2 == 0)
        info.coprime_part /= 2;
    while (info.coprime_part % 5 == 0)
        info.coprime_part /= 5;
    return info;
}

PrimePeriodRecord prime_record(u64 p)
{
    if (p > kMaxStandardModulus)
        throw Error(ErrorCode::OutOfRange, fmt::format("{} exceeds 2^63 - 1", p));
    if (!is_prime(p))
        throw Error(ErrorCode::NotPrime, fmt::format("{} is not prime", p));
    if (detail::divides_base(kBase, p))
        return {p, 1, 0, false, true};
    PrimePeriodRecord rec{p, order_prime(p), 0, false, false};
    rec.m_p = detail::excess_valuation(kBase, p, rec.l_p);
    rec.full_reptend = rec.l_p == p - 1;
    return rec;
}

PrimePeriodRecord PrimeRecordCache::get(u64 p)
{
    {
        std::shared_lock lock(mutex_);
        if (auto it = records_.find(p); it != records_.end())
            return it->second;
    }
    const PrimePeriodRecord rec = prime_record(p);
    std::unique_lock lock(mutex_);
    return records_.try_emplace(p, rec).first->second;
}

std::size_t PrimeRecordCache::size() const
{
    std::shared_lock lock(mutex_);
    return records_.size();
}

} // namespace repdec
