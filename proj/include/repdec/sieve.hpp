#pragma once

#include "repdec/arith.hpp"

#include <functional>
#include <vector>

namespace repdec {

/// Plain sieve of Eratosthenes for [2, limit]; used for the base primes.
std::vector<u64> small_primes(u64 limit);

/// Calls visit(p) for every prime lo <= p <= hi in increasing order. The
/// interval is sieved in fixed-size odd-only segments.
void for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& visit);

} // namespace repdec
