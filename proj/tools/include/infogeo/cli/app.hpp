#pragma once

#include <ostream>

namespace infogeo::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitTolerance = 1;
inline constexpr int kExitConfig = 2;

/// Full command-line entry point. Tables go to --out (resolved against
/// INFOGEO_OUTPUT_DIR when relative and the variable is set) or to `out`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace infogeo::cli
