#pragma once

// Overflow-safe integer kernels shared by every other module.
//
// Two widths exist. The standard path keeps moduli below 2^63 and uses a
// 128-bit intermediate for products. The wide path accepts moduli up to
// 2^127 - 1 and is only needed when lifting 10^l mod p^e for large p.

#include "repdec/error.hpp"

#include <cstdint>
#include <string>

namespace repdec {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline constexpr u64 kMaxStandardModulus = (u64{1} << 63) - 1;
inline constexpr u128 kMaxWideModulus = (u128{1} << 127) - 1;

/// A modulus on the standard path, 2 <= value <= 2^63 - 1.
class Modulus {
public:
    explicit Modulus(u64 value);
    u64 value() const noexcept { return value_; }

private:
    u64 value_;
};

/// A modulus on the wide path, 2 <= value <= 2^127 - 1. Construction
/// beyond that range throws ErrorCode::Overflow.
class WideModulus {
public:
    explicit WideModulus(u128 value);
    u128 value() const noexcept { return value_; }

private:
    u128 value_;
};

/// gcd(0, 0) == 0.
u64 gcd(u64 a, u64 b) noexcept;

/// a * b / gcd(a, b); throws ErrorCode::Overflow when the result does not
/// fit in 64 bits.
u64 lcm_checked(u64 a, u64 b);

/// a * b with overflow reported through ErrorCode::Overflow.
u64 mul_checked(u64 a, u64 b);

namespace detail {

// Raw kernels without modulus validation; m may be any value >= 1 below 2^64.
inline u64 mulmod_u64(u64 a, u64 b, u64 m) noexcept
{
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 powmod_u64(u64 base, u64 exp, u64 m) noexcept
{
    u64 result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return result;
}

} // namespace detail

inline u64 mulmod(u64 a, u64 b, Modulus m) noexcept
{
    return detail::mulmod_u64(a, b, m.value());
}

/// base^exp mod m by square-and-multiply. powmod(b, 0, m) == 1.
inline u64 powmod(u64 base, u64 exp, Modulus m) noexcept
{
    return detail::powmod_u64(base, exp, m.value());
}

u128 mulmod_wide(u128 a, u128 b, WideModulus m) noexcept;
u128 powmod_wide(u128 base, u64 exp, WideModulus m) noexcept;

struct Valuation {
    unsigned exponent = 0;
    u64 cofactor = 1;

    bool operator==(const Valuation&) const = default;
};

/// Splits n = p^exponent * cofactor with p not dividing cofactor.
/// Requires n >= 1 and p >= 2.
Valuation valuation(u64 n, u64 p);

/// Deterministic for every 64-bit n (Miller-Rabin over a fixed base set).
bool is_prime(u64 n) noexcept;

/// Decimal rendering of a 128-bit value.
std::string to_string(u128 value);

} // namespace repdec
