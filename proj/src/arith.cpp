#include "repdec/arith.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include <fmt/format.h>

namespace repdec {

Modulus::Modulus(u64 value) : value_(value)
{
    if (value < 2)
        throw Error(ErrorCode::OutOfRange, fmt::format("modulus {} is below 2", value));
    if (value > kMaxStandardModulus)
        throw Error(ErrorCode::Overflow, fmt::format("modulus {} exceeds 2^63 - 1", value));
}

WideModulus::WideModulus(u128 value) : value_(value)
{
    if (value < 2)
        throw Error(ErrorCode::OutOfRange, "wide modulus is below 2");
    if (value > kMaxWideModulus)
        throw Error(ErrorCode::Overflow,
                    fmt::format("wide modulus {} exceeds 2^127 - 1", to_string(value)));
}

u64 gcd(u64 a, u64 b) noexcept
{
    return std::gcd(a, b);
}

u64 mul_checked(u64 a, u64 b)
{
    u64 out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw Error(ErrorCode::Overflow, fmt::format("{} * {} overflows 64 bits", a, b));
    return out;
}

u64 lcm_checked(u64 a, u64 b)
{
    if (a == 0 || b == 0)
        throw Error(ErrorCode::InvalidArgument, "lcm requires positive arguments");
    return mul_checked(a / gcd(a, b), b);
}

// m < 2^127, so a + b < 2^128 never wraps for a, b < m.
static u128 addmod_wide(u128 a, u128 b, u128 m) noexcept
{
    u128 s = a + b;
    return s >= m ? s - m : s;
}

u128 mulmod_wide(u128 a, u128 b, WideModulus m) noexcept
{
    const u128 mod = m.value();
    a %= mod;
    b %= mod;
    if ((a >> 64) == 0 && (b >> 64) == 0)
        return (a * b) % mod;

    const u64 b_hi = static_cast<u64>(b >> 64);
    const int top = b_hi != 0 ? 127 - std::countl_zero(b_hi)
                              : 63 - std::countl_zero(static_cast<u64>(b));
    u128 result = 0;
    for (int bit = top; bit >= 0; --bit) {
        result = addmod_wide(result, result, mod);
        if ((b >> bit) & 1)
            result = addmod_wide(result, a, mod);
    }
    return result;
}

u128 powmod_wide(u128 base, u64 exp, WideModulus m) noexcept
{
    u128 result = 1;
    base %= m.value();
    while (exp > 0) {
        if (exp & 1)
            result = mulmod_wide(result, base, m);
        base = mulmod_wide(base, base, m);
        exp >>= 1;
    }
    return result;
}

Valuation valuation(u64 n, u64 p)
{
    if (n == 0)
        throw Error(ErrorCode::InvalidArgument, "valuation of 0 is undefined");
    if (p < 2)
        throw Error(ErrorCode::InvalidArgument, fmt::format("valuation base {} is below 2", p));
    Valuation v{0, n};
    while (v.cofactor % p == 0) {
        v.cofactor /= p;
        ++v.exponent;
    }
    return v;
}

bool is_prime(u64 n) noexcept
{
    constexpr std::array<u64, 12> small{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2)
        return false;
    for (u64 p : small) {
        if (n % p == 0)
            return n == p;
    }
    if (n < 37 * 37)
        return true;

    const u64 d0 = n - 1;
    const int s = std::countr_zero(d0);
    const u64 d = d0 >> s;

    // Jim Sinclair's base set; deterministic for all n < 2^64.
    constexpr std::array<u64, 7> bases{2, 325, 9375, 28178, 450775, 9780504, 1795265022};
    return std::ranges::none_of(bases, [&](u64 a) {
        a %= n;
        if (a == 0)
            return false;
        u64 x = detail::powmod_u64(a, d, n);
        if (x == 1 || x == n - 1)
            return false;
        for (int i = 1; i < s; ++i) {
            x = detail::mulmod_u64(x, x, n);
            if (x == n - 1)
                return false;
        }
        return true; // witness of compositeness
    });
}

std::string to_string(u128 value)
{
    if (value == 0)
        return "0";
    std::string out;
    while (value > 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

} // namespace repdec
