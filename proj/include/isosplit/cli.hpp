#pragma once

// Command-line front end.
//
//   isosplit catalog  [--family F] [--rank N] [--rank-cap N] [--class C] [--n0 N]
//                     [--simple-k] [--golden] [--golden-file PATH]
//   isosplit verify   CASE [--seed S] [--samples N] [--restarts N] [--tol-* X]
//   isosplit selfcheck [--rank-cap N] [--golden-file PATH]
//
// Every command accepts --format json|csv|text and --out PATH. Exit status is
// 0 when every check passes, 1 when a check fails and 2 on invalid input or a
// case without a concrete model.

#include <ostream>
#include <string>
#include <vector>

namespace isosplit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Golden-list path compiled into the binary.
std::string default_golden_path();

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace isosplit::cli
