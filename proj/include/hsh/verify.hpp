// Copyright 2026 The hshsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Self-verification suites: every exact identity the library rests on,
// checked exhaustively up to a caller-chosen register width. The closed
// form can be swapped out through a hook so the failure path (report names
// the broken identity and a counterexample) is itself testable.

#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "hsh/bitmath.hpp"

namespace hsh {

struct CheckResult {
  std::string name;
  std::uint64_t cases = 0;
  bool passed = true;
  std::string counterexample;  // first failing case, empty when passed
};

struct VerifyReport {
  int max_n = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

using ClosedFormFn = std::function<GaussianInt(int n, int weight)>;

/// Runs all identity checks for every register width up to max_n
/// (1 <= max_n <= 16): closed form against the brute-force oracle, the
/// half-range recursion, exact squared magnitudes, residual amplitudes
/// against direct summation (including the parity case split), and the
/// floating H.S.H statevector against the exact amplitudes.
///
/// `closed_form` substitutes for the library closed form where one is
/// consulted; tests use it to confirm a broken identity is caught.
VerifyReport run_verification(int max_n, ClosedFormFn closed_form = {});

/// One [PASS]/[FAIL] line per check plus a summary line.
void render_verify_report(const VerifyReport& report, std::ostream& out);

}  // namespace hsh
