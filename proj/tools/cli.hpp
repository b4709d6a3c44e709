#pragma once

#include <iosfwd>

namespace efpe::cli {

/// Exit codes: 0 success, 1 domain or verification failure, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace efpe::cli
