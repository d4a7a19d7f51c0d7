#include "repdec/expansion.hpp"

#include "repdec/period.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include <fmt/format.h>

namespace repdec {

namespace {

// Non-negative integer in base 10^9 limbs, least significant first. Only the
// handful of operations reconstruct_check() needs.
class DecimalNat {
public:
    static constexpr std::uint32_t kLimbBase = 1'000'000'000;
    static constexpr std::size_t kLimbDigits = 9;

    DecimalNat() = default;

    // digits * 10^zeros; digits may be empty (reads as 0).
    static DecimalNat from_digits(std::string_view digits, std::size_t zeros = 0)
    {
        std::string text(digits);
        if (!text.empty())
            text.append(zeros, '0');
        DecimalNat out;
        for (std::size_t end = text.size(); end > 0;) {
            const std::size_t begin = end >= kLimbDigits ? end - kLimbDigits : 0;
            std::uint32_t limb = 0;
            for (std::size_t i = begin; i < end; ++i)
                limb = limb * 10 + static_cast<std::uint32_t>(text[i] - '0');
            out.limbs_.push_back(limb);
            end = begin;
        }
        out.trim();
        return out;
    }

    DecimalNat& operator+=(const DecimalNat& rhs)
    {
        limbs_.resize(std::max(limbs_.size(), rhs.limbs_.size()) + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            carry += limbs_[i];
            if (i < rhs.limbs_.size())
                carry += rhs.limbs_[i];
            limbs_[i] = static_cast<std::uint32_t>(carry % kLimbBase);
            carry /= kLimbBase;
        }
        trim();
        return *this;
    }

    // Requires *this >= rhs.
    DecimalNat& operator-=(const DecimalNat& rhs)
    {
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(limbs_[i]) - borrow;
            if (i < rhs.limbs_.size())
                cur -= rhs.limbs_[i];
            borrow = cur < 0 ? 1 : 0;
            limbs_[i] = static_cast<std::uint32_t>(cur + borrow * kLimbBase);
        }
        trim();
        return *this;
    }

    DecimalNat times(u64 factor) const
    {
        DecimalNat out;
        out.limbs_.reserve(limbs_.size() + 3);
        u128 carry = 0;
        for (std::uint32_t limb : limbs_) {
            carry += static_cast<u128>(limb) * factor;
            out.limbs_.push_back(static_cast<std::uint32_t>(carry % kLimbBase));
            carry /= kLimbBase;
        }
        while (carry > 0) {
            out.limbs_.push_back(static_cast<std::uint32_t>(carry % kLimbBase));
            carry /= kLimbBase;
        }
        out.trim();
        return out;
    }

    bool operator==(const DecimalNat&) const = default;

private:
    void trim()
    {
        while (!limbs_.empty() && limbs_.back() == 0)
            limbs_.pop_back();
    }

    std::vector<std::uint32_t> limbs_;
};

bool all_digits(std::string_view s) noexcept
{
    return std::ranges::all_of(s, [](char c) { return c >= '0' && c <= '9'; });
}

} // namespace

ExpansionInfo expand(u64 q, u64 n)
{
    if (n == 0 || n > kMaxStandardModulus)
        throw Error(ErrorCode::OutOfRange,
                    fmt::format("denominator {} is outside [1, 2^63 - 1]", n));

    ExpansionInfo info{q, n, q / n, {}, {}};
    const u64 remainder = q % n;
    const u64 reduced = n / gcd(remainder, n);
    const PeriodInfo shape = period_length(reduced);

    const u64 preperiod = shape.preperiod;
    const u64 period = shape.coprime_part == 1 ? 0 : shape.period;
    if (preperiod + period > kMaxExpansionDigits)
        throw Error(ErrorCode::OutOfRange,
                    fmt::format("expansion of {}/{} needs {} digits, above the limit of {}", q, n,
                                preperiod + period, kMaxExpansionDigits));

    info.preperiod_digits.reserve(preperiod);
    info.period_digits.reserve(period);
    u128 r = remainder;
    for (u64 i = 0; i < preperiod + period; ++i) {
        r *= kBase;
        const char digit = static_cast<char>('0' + static_cast<int>(r / n));
        r %= n;
        (i < preperiod ? info.preperiod_digits : info.period_digits).push_back(digit);
    }
    return info;
}

std::string c_digits(u64 p)
{
    if (p > kMaxStandardModulus)
        throw Error(ErrorCode::OutOfRange, fmt::format("{} exceeds 2^63 - 1", p));
    if (!is_prime(p))
        throw Error(ErrorCode::NotPrime, fmt::format("{} is not prime", p));
    if (detail::divides_base(kBase, p))
        throw Error(ErrorCode::UnsupportedPrime, fmt::format("1/{} terminates", p));
    return expand(1, p).period_digits;
}

bool digit_divisibility(std::string_view digits, u64 p)
{
    if (p == 0)
        throw Error(ErrorCode::InvalidArgument, "divisor must be positive");
    if (digits.empty() || !all_digits(digits))
        throw Error(ErrorCode::InvalidArgument,
                    fmt::format("'{}' is not a non-empty digit string", digits));
    u128 r = 0;
    for (char c : digits)
        r = (r * 10 + static_cast<unsigned>(c - '0')) % p;
    return r == 0;
}

bool reconstruct_check(const ExpansionInfo& e)
{
    if (e.denominator == 0 || !all_digits(e.preperiod_digits) || !all_digits(e.period_digits))
        return false;

    const std::size_t t = e.preperiod_digits.size();
    const std::size_t l = e.period_digits.size();
    const auto P = DecimalNat::from_digits(e.preperiod_digits);

    if (l == 0) {
        // q * 10^t == n * (I * 10^t + P)
        const auto scale = DecimalNat::from_digits("1", t);
        DecimalNat rhs = scale.times(e.integer_part);
        rhs += P;
        return scale.times(e.numerator) == rhs.times(e.denominator);
    }

    // With N = 10^l - 1 and D = 10^t * N:
    //   q * D == n * (I * D + P * N + R)
    const auto D = DecimalNat::from_digits(std::string(l, '9'), t);
    DecimalNat rhs = D.times(e.integer_part);
    DecimalNat preperiod_term = DecimalNat::from_digits(e.preperiod_digits, l);
    preperiod_term -= P;
    rhs += preperiod_term;
    rhs += DecimalNat::from_digits(e.period_digits);
    return D.times(e.numerator) == rhs.times(e.denominator);
}

} // namespace repdec
