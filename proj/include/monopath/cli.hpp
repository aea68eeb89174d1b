#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monopath::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitViolation = 2;
inline constexpr int kSchemaVersion = 1;

/// Runs one command; `args` excludes the program name. Reports go to
/// `out`, help text and CLI usage notes to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monopath::cli
