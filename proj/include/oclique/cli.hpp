#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oclique::cli {

// Exit codes, stable contract.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;        // bad flags, bad input files
inline constexpr int kVerifyFail = 2;   // a requested verification failed
inline constexpr int kBudget = 3;       // search stopped by node budget

// Entry point behind main(); args excludes argv[0]. All normal output goes
// to `out`, diagnostics to `err`, so tests can drive it in-process.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace oclique::cli
