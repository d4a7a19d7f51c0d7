#pragma once

// Period length of the repeating decimal of 1/n.
//
// The fast path factors n, computes l_p (the multiplicative order of 10
// mod p) and m_p (the excess power of p in 10^{l_p} - 1) for every prime
// factor, lifts each to its prime power and combines the results with lcm.
// A terminating expansion has period 1 by convention so the lcm composition
// also holds for n divisible by 2 or 5.
//
// naive_period_oracle() is the long-division reference used to check the
// fast path; it is linear in n and capped at kOracleCap.

#include "repdec/arith.hpp"
#include "repdec/factor.hpp"

#include <shared_mutex>
#include <unordered_map>

namespace repdec {

inline constexpr u64 kBase = 10;
inline constexpr u64 kOracleCap = 10'000'000;

struct PeriodInfo {
    u64 n = 1;
    u64 coprime_part = 1; // n with every factor of 2 and 5 removed
    unsigned preperiod = 0;
    u64 period = 1;

    bool operator==(const PeriodInfo&) const = default;
};

struct PrimePeriodRecord {
    u64 p = 0;
    u64 l_p = 1;
    unsigned m_p = 0;
    bool full_reptend = false;
    // p divides the base: 1/p terminates, l_p = 1 and m_p is stored as 0.
    bool terminating = false;

    bool operator==(const PrimePeriodRecord&) const = default;
};

/// Smallest d >= 1 with 10^d == 1 (mod p). Starts from p - 1 and divides
/// out each prime factor of p - 1 while the power stays congruent to 1.
/// Throws NotPrime, or UnsupportedPrime for p in {2, 5}.
u64 order_prime(u64 p);

/// m_p = (largest e with p^e | 10^{l_p} - 1) - 1. Throws Overflow if p^{e+1}
/// leaves the wide modulus range before the lifting stops.
unsigned compute_m_p(u64 p);

/// l_{p^k}: l_p while k <= m_p + 1, then multiplied by p for each further
/// power. Returns 1 for p in {2, 5}.
u64 l_prime_power(u64 p, unsigned k);

/// Fast path. Requires 1 <= n < 2^63 (OutOfRange otherwise).
PeriodInfo period_length(u64 n);

/// Long-division reference. Requires 1 <= n <= kOracleCap, otherwise throws
/// OracleRangeExceeded.
PeriodInfo naive_period_oracle(u64 n);

PrimePeriodRecord prime_record(u64 p);

/// Thread-safe memo over prime_record(). Lookups for the same p always
/// return the same record regardless of interleaving.
class PrimeRecordCache {
public:
    PrimePeriodRecord get(u64 p);
    std::size_t size() const;

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<u64, PrimePeriodRecord> records_;
};

namespace detail {

// Base-generic kernels; the public API fixes base = kBase.
bool divides_base(u64 base, u64 p) noexcept;
u64 order_mod_prime(u64 base, u64 p);
unsigned excess_valuation(u64 base, u64 p, u64 order);

} // namespace detail

} // namespace repdec
