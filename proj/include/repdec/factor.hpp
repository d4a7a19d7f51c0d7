#pragma once

#include "repdec/arith.hpp"

#include <vector>

namespace repdec {

struct PrimePower {
    u64 prime = 0;
    unsigned exponent = 0;

    bool operator==(const PrimePower&) const = default;
};

/// Canonical factorization: primes strictly increasing, each exponent >= 1,
/// product equal to n. n == 1 has no factors.
struct Factorization {
    u64 n = 1;
    std::vector<PrimePower> factors;

    bool operator==(const Factorization&) const = default;
};

/// Factors 1 <= n < 2^63 by trial division below 10^4 followed by
/// Pollard-Brent rho on the remaining cofactor. Output is deterministic.
/// Throws ErrorCode::OutOfRange for n == 0 or n >= 2^63.
Factorization factorize(u64 n);

/// Multiplies the factorization back out (throws Overflow if it cannot fit).
u64 expand_product(const Factorization& f);

} // namespace repdec
