// SPDX-License-Identifier: Apache-2.0

/// \file cli.hpp
/// The `qadd` command line: synth, verify, count, compare, equiv.
///
/// Exit codes: 0 success, 1 semantic failure (mismatch, nonconformance with
/// --strict, counterexample), 2 usage error, 3 internal validation failure.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qadd {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

/// `args` excludes the program name. Command output goes to `out` unless
/// --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qadd
