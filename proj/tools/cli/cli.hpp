#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace otto::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitNonEngine = 2;
inline constexpr int kExitChecksFailed = 3;

/// Runs one `otto` invocation; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace otto::cli
