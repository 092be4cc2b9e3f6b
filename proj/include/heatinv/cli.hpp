#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "heatinv/error.hpp"

namespace heatinv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitMath = 3;
inline constexpr int kExitVerification = 4;

int exitCodeFor(ErrorCode code);

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heatinv::cli
