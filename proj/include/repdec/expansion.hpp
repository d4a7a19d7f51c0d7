#pragma once

#include "repdec/arith.hpp"

#include <string>
#include <string_view>

namespace repdec {

/// Exact decimal expansion of numerator/denominator:
///   integer_part . preperiod_digits (period_digits)
/// The period starts right after the preperiod; period_digits is empty only
/// when the expansion terminates.
struct ExpansionInfo {
    u64 numerator = 0;
    u64 denominator = 1;
    u64 integer_part = 0;
    std::string preperiod_digits;
    std::string period_digits;

    bool terminates() const noexcept { return period_digits.empty(); }
    /// Period length under the terminating-means-1 convention.
    u64 period_length() const noexcept { return terminates() ? 1 : period_digits.size(); }

    bool operator==(const ExpansionInfo&) const = default;
};

/// Upper bound on preperiod + period digits that expand() will produce.
inline constexpr u64 kMaxExpansionDigits = 100'000'000;

/// Long division of q/n. Requires 1 <= n < 2^63; throws OutOfRange otherwise
/// or when the expansion would exceed kMaxExpansionDigits.
ExpansionInfo expand(u64 q, u64 n);

/// Period of 1/p zero-padded to l_p digits; read as an integer it is
/// c_p = (10^{l_p} - 1) / p. Throws NotPrime / UnsupportedPrime.
std::string c_digits(u64 p);

/// Whether the decimal integer spelled by digits is divisible by p.
/// Throws InvalidArgument for an empty string or a non-digit character.
bool digit_divisibility(std::string_view digits, u64 p);

/// Checks numerator/denominator == integer_part + (P + R / (10^l - 1)) / 10^t
/// in exact integer arithmetic, where P and R are the preperiod and period
/// digit strings read as integers. Malformed input yields false.
bool reconstruct_check(const ExpansionInfo& e);

} // namespace repdec
