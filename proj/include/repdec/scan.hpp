#pragma once

// Empirical scans over primes p <= limit (2 and 5 excluded):
//   FullReptend: primes with l_p = p - 1, i.e. 10 is a primitive root mod p.
//   WieferichM:  primes with m_p > 0, equivalently 10^{p-1} == 1 (mod p^2).
//
// Work may be split across threads; the merged report does not depend on
// the split.

#include "repdec/arith.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace repdec {

enum class ScanKind { FullReptend, WieferichM };

constexpr std::string_view to_string(ScanKind kind) noexcept
{
    return kind == ScanKind::FullReptend ? "FullReptend" : "WieferichM";
}

struct ScanReport {
    ScanKind kind = ScanKind::FullReptend;
    u64 limit = 0;
    std::vector<u64> hits;
    u64 primes_examined = 0;
    std::optional<double> density; // FullReptend only
    double elapsed_ms = 0.0;
};

inline constexpr u64 kMinScanLimit = 3;
inline constexpr u64 kMaxScanLimit = 100'000'000;

/// threads == 0 picks std::thread::hardware_concurrency().
ScanReport scan_full_reptend(u64 limit, unsigned threads = 0);
ScanReport scan_wieferich_m(u64 limit, unsigned threads = 0);

/// Whether p^3 divides 10^{l_p} - 1 (that is, m_p >= 2). Needs p^3 < 2^127.
bool probe_m_ge_2(u64 p);

} // namespace repdec
