#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace repdec {

enum class ErrorCode {
    OutOfRange,
    Overflow,
    NotPrime,
    UnsupportedPrime,
    OracleRangeExceeded,
    InvalidArgument,
};

// Stable identifier used on the CLI error stream ("error:<code>:").
constexpr std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::OutOfRange: return "out_of_range";
    case ErrorCode::Overflow: return "overflow";
    case ErrorCode::NotPrime: return "not_prime";
    case ErrorCode::UnsupportedPrime: return "unsupported_prime";
    case ErrorCode::OracleRangeExceeded: return "oracle_range_exceeded";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace repdec
