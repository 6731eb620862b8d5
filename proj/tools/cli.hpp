#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace permlab::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kValidation = 1;
inline constexpr int kUsage = 2;
inline constexpr int kIo = 3;

// args excludes the program name. Data goes to `out` unless --out is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permlab::cli
