#pragma once

#include <ostream>

namespace oic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;  // bad flags, unreadable input, failed write
inline constexpr int kExitTampered = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace oic::cli
