#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperspec {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// Runs the command line `args` (without the program name).
//
//   generate <family> [params] [-o FILE]
//   spectrum <FILE|-> [--signless] [--multiplicities] [--tol X] [--raw]
//   check <family> [params] [--tol X] [--cluster-tol X]
//
// Exit codes: 0 pass, 1 conformance failure, 2 usage or I/O error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace hyperspec
