#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace repdec::cli {

inline constexpr int kSchemaVersion = 1;

/// Exit codes: 0 success, 1 domain error, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs the tool with argv-style arguments (args[0] is the program name).
/// Results go to out; errors go to err as "error:<code>: <message>".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace repdec::cli
