// Copyright 2026 The hshsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hsh {

/// Dispatches one command line (without the program name). Results go to
/// `out`, diagnostics and warnings to `err`. Returns the process exit
/// code: 0 on success, 1 when a verification check failed, 2 on usage or
/// input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace hsh
