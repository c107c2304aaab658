#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zagreb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args excludes the program name). Output goes to
/// `out` unless --out names a file; diagnostics go to `err`. Standard input
/// is read from `in` wherever a path of "-" is given.
///
/// Returns 0 on success or PASS, 1 when a verify certificate FAILs, 2 on
/// usage errors, unreadable input and size-limit errors.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err);

} // namespace zagreb::cli
