#include "repdec/arith.hpp"

#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include <random>
#include <vector>

using namespace repdec;
using boost::multiprecision::cpp_int;

namespace {

cpp_int big(u128 v)
{
    cpp_int out = static_cast<u64>(v >> 64);
    out <<= 64;
    out += static_cast<u64>(v);
    return out;
}

} // namespace

TEST_CASE("gcd")
{
    CHECK(gcd(12, 18) == 6);
    CHECK(gcd(7, 0) == 7);
    CHECK(gcd(0, 7) == 7);
    CHECK(gcd(2310, 100) == 10);
    CHECK(gcd(0, 0) == 0);
}

TEST_CASE("lcm_checked")
{
    CHECK(lcm_checked(6, 2) == 6);
    CHECK(lcm_checked(1, 1) == 1);
    CHECK(lcm_checked(42, 6) == 42);
    CHECK(lcm_checked(4, 6) == 12);

    SUBCASE("overflow is reported")
    {
        const u64 a = (u64{1} << 62) + 1; // odd
        try {
            lcm_checked(a, 6);
            FAIL("expected Overflow");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::Overflow);
        }
    }
}

TEST_CASE("Modulus range")
{
    CHECK_THROWS_AS(Modulus(0), Error);
    CHECK_THROWS_AS(Modulus(1), Error);
    CHECK(Modulus(2).value() == 2);
    CHECK(Modulus(kMaxStandardModulus).value() == kMaxStandardModulus);
    try {
        Modulus(kMaxStandardModulus + 1);
        FAIL("expected Overflow");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Overflow);
    }
}

TEST_CASE("mulmod")
{
    CHECK(mulmod(10, 10, Modulus(7)) == 2);
    CHECK(mulmod(0, 123456, Modulus(1000003)) == 0);

    const u64 m61 = (u64{1} << 61) - 1;
    CHECK(mulmod(1'000'000'000, 1'000'000'000, Modulus(m61)) == 1'000'000'000'000'000'000ULL);
    // (-1) * (-2) == 2 mod m
    CHECK(mulmod(m61 - 1, m61 - 2, Modulus(m61)) == 2);

    SUBCASE("agrees with arbitrary precision on random operands")
    {
        std::mt19937_64 rng(20240611);
        for (int i = 0; i < 20000; ++i) {
            const u64 m = 2 + rng() % (kMaxStandardModulus - 1);
            const u64 a = rng() % m;
            const u64 b = rng() % m;
            const cpp_int expected = cpp_int(a) * cpp_int(b) % cpp_int(m);
            REQUIRE(cpp_int(mulmod(a, b, Modulus(m))) == expected);
        }
    }
}

TEST_CASE("powmod")
{
    CHECK(powmod(10, 6, Modulus(7)) == 1);
    CHECK(powmod(10, 2, Modulus(11)) == 1);
    CHECK(powmod(10, 5, Modulus(13)) == 4);
    CHECK(powmod(3, 0, Modulus(7)) == 1);

    SUBCASE("exponents add")
    {
        std::mt19937_64 rng(7);
        for (int i = 0; i < 5000; ++i) {
            const Modulus m(2 + rng() % (kMaxStandardModulus - 1));
            const u64 b = rng() % m.value();
            const u64 e1 = rng() >> 2;
            const u64 e2 = rng() >> 2;
            REQUIRE(powmod(b, e1 + e2, m) == mulmod(powmod(b, e1, m), powmod(b, e2, m), m));
        }
    }

    SUBCASE("agrees with boost powm")
    {
        std::mt19937_64 rng(99);
        for (int i = 0; i < 2000; ++i) {
            const u64 m = 2 + rng() % (kMaxStandardModulus - 1);
            const u64 b = rng() % m;
            const u64 e = rng();
            REQUIRE(cpp_int(powmod(b, e, Modulus(m)))
                    == boost::multiprecision::powm(cpp_int(b), cpp_int(e), cpp_int(m)));
        }
    }
}

TEST_CASE("powmod_wide")
{
    const u128 p487sq = u128{487} * 487;
    CHECK(powmod_wide(10, 486, WideModulus(p487sq)) == 1);
    CHECK(powmod_wide(10, 0, WideModulus(p487sq)) == 1);

    u128 ten30 = 1;
    for (int i = 0; i < 30; ++i)
        ten30 *= 10;
    CHECK(powmod_wide(10, 1, WideModulus(ten30)) == 10);

    try {
        WideModulus(u128{1} << 127);
        FAIL("expected Overflow");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Overflow);
    }
    CHECK(WideModulus(kMaxWideModulus).value() == kMaxWideModulus);

    SUBCASE("agrees with arbitrary precision on wide moduli")
    {
        std::mt19937_64 rng(1234);
        for (int i = 0; i < 300; ++i) {
            const u128 m = ((u128{rng()} << 64) | rng()) & kMaxWideModulus;
            if (m < 2)
                continue;
            const u128 a = ((u128{rng()} << 64) | rng()) % m;
            const u128 b = ((u128{rng()} << 64) | rng()) % m;
            const u64 e = rng() % 100000;
            const WideModulus wm(m);
            REQUIRE(big(mulmod_wide(a, b, wm)) == big(a) * big(b) % big(m));
            REQUIRE(big(powmod_wide(a, e, wm))
                    == boost::multiprecision::powm(big(a), cpp_int(e), big(m)));
        }
    }
}

TEST_CASE("valuation")
{
    CHECK(valuation(90, 3) == Valuation{2, 10});
    CHECK(valuation(7, 7) == Valuation{1, 1});
    CHECK(valuation(142857, 7) == Valuation{0, 142857});
    CHECK_THROWS_AS(valuation(0, 3), Error);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 10000; ++i) {
        const u64 n = 1 + rng() % 1'000'000'000'000ULL;
        for (u64 p : {2, 3, 5, 7, 11, 487}) {
            const auto v = valuation(n, p);
            u64 back = v.cofactor;
            for (unsigned k = 0; k < v.exponent; ++k)
                back *= p;
            REQUIRE(back == n);
            REQUIRE(v.cofactor % p != 0);
        }
    }
}

TEST_CASE("is_prime")
{
    CHECK(is_prime(56598313));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(2310));
    CHECK(is_prime(2));
    CHECK(is_prime(18446744073709551557ULL)); // largest 64-bit prime
    CHECK_FALSE(is_prime(3215031751ULL));     // strong pseudoprime to 2, 3, 5, 7
    CHECK_FALSE(is_prime(4611686014132420609ULL)); // (2^31 - 1)^2

    SUBCASE("agrees with a sieve up to 10^6")
    {
        constexpr u64 limit = 1'000'000;
        std::vector<bool> prime(limit + 1, true);
        prime[0] = prime[1] = false;
        for (u64 i = 2; i * i <= limit; ++i)
            if (prime[i])
                for (u64 j = i * i; j <= limit; j += i)
                    prime[j] = false;
        for (u64 n = 0; n <= limit; ++n)
            REQUIRE(is_prime(n) == prime[n]);
    }
}
