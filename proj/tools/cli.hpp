// Copyright 2026 The fasp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fasp::cli {

/// Exit codes shared by all subcommands.
enum Exit : int {
  kOk = 0,
  kConfigError = 1,
  kInfeasible = 2,  // design, crisp-baseline
  kBelowThreshold = 2,  // verify-tables: fewer than 90% feasible rows
  kRejected = 3,        // dispose
  kUndecided = 4,       // dispose
  kOracleFailed = 5,    // oracle
};

/// Runs the command line `args` (without the program name). JSON goes to
/// `out` unless an output path is given; summaries and errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Flat "key = value" config text to long-option arguments. Blank lines and
/// lines starting with '#' are skipped; boolean values expand to a bare
/// flag or nothing.
std::vector<std::string> config_to_args(const std::string& text,
                                        const std::vector<std::string>& flag_keys);

}  // namespace fasp::cli
