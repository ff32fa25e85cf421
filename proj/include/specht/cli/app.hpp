#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace specht::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

// Entry point behind the `specht` binary. argv[0] is the program name; the
// vector overload takes the arguments after it.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace specht::cli
