#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace digitopo::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDisagreement = 1;
inline constexpr int kPrecondition = 2;
inline constexpr int kNotConverged = 3;
inline constexpr int kUsage = 64;
inline constexpr int kDataError = 65;
inline constexpr int kIoError = 66;

/// `args` excludes the program name. All output goes through `out` / `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace digitopo::cli
