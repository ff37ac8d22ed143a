#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pmatch::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitParse = 2;

/// Runs one command line (without the program name). Reports go to `out`
/// (or the -o file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pmatch::cli
