// Copyright 2026 The hshsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "hsh/verify.hpp"

#include <cmath>
#include <complex>

#include "hsh/closedform.hpp"
#include "hsh/statevector.hpp"

namespace hsh {

namespace {

constexpr double kAmplitudeTolerance = 1e-10;
constexpr double kNormTolerance = 1e-12;

std::string case_tag(int n, BitString z) {
  return "n=" + std::to_string(n) + " z=" + z.binary();
}

CheckResult check_closed_form(int max_n, const ClosedFormFn& closed_form) {
  CheckResult r;
  r.name = "closed-form-vs-brute-force";
  for (int n = 1; n <= max_n && r.passed; ++n) {
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t zv = 0; zv < count; ++zv) {
      const BitString z(zv, n);
      const GaussianInt expected = brute_force_sum(n, z);
      const GaussianInt got = closed_form(n, hamming_weight(z));
      ++r.cases;
      if (got != expected) {
        r.passed = false;
        r.counterexample = case_tag(n, z) + ": closed form " + got.str() +
                           ", brute force " + expected.str();
        break;
      }
    }
  }
  return r;
}

CheckResult check_half_range(int max_n) {
  CheckResult r;
  r.name = "half-range-recursion";
  for (int n = 1; n <= max_n && r.passed; n += 2) {
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t zv = 0; zv < count; ++zv) {
      const BitString z(zv, n);
      const GaussianInt upper = upper_half_sum(n, z);
      GaussianInt expected =
          brute_force_sum(n - 1, low_bits(z, 1)).times_i();
      if (z.bit(n - 1)) expected = -expected;
      ++r.cases;
      if (upper != expected) {
        r.passed = false;
        r.counterexample = case_tag(n, z) + ": upper half " + upper.str() +
                           ", recursion gives " + expected.str();
        break;
      }
    }
  }
  return r;
}

CheckResult check_magnitude(int max_n, const ClosedFormFn& closed_form) {
  CheckResult r;
  r.name = "amplitude-magnitude";
  for (int n = 1; n <= max_n && r.passed; ++n) {
    for (int w = 0; w <= n; ++w) {
      const std::int64_t norm = closed_form(n, w).norm_sq();
      ++r.cases;
      if (norm != (std::int64_t{1} << n)) {
        r.passed = false;
        r.counterexample = "n=" + std::to_string(n) +
                           " weight=" + std::to_string(w) + ": |a|^2 = " +
                           std::to_string(norm) + ", expected 2^n = " +
                           std::to_string(std::int64_t{1} << n);
        break;
      }
    }
  }
  return r;
}

CheckResult check_residual(int max_n) {
  CheckResult r;
  r.name = "residual-amplitude";
  for (int n = 1; n <= max_n && r.passed; ++n) {
    for (int w = 0; w <= n; ++w) {
      ++r.cases;
      if (residual_correction(n, w) != residual_correction_split(n, w)) {
        r.passed = false;
        r.counterexample = "n=" + std::to_string(n) + " weight=" +
                           std::to_string(w) +
                           ": correction case split disagrees";
        break;
      }
    }
    if (!r.passed) break;
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t yv = 0; yv < count; ++yv) {
      const BitString y(yv, n);
      const std::uint64_t complement = y.complement().value;
      GaussianInt direct{};
      for (std::uint64_t x = 0; x < count; ++x) {
        if (x == yv || x == complement) continue;
        GaussianInt term = i_pow(std::popcount(x));
        if (std::popcount(x & yv) & 1) term = -term;
        direct += term;
      }
      const GaussianInt formula = residual_amplitude(n, hamming_weight(y));
      ++r.cases;
      if (formula != direct) {
        r.passed = false;
        r.counterexample = case_tag(n, y) + ": formula " + formula.str() +
                           ", direct sum " + direct.str();
        break;
      }
    }
  }
  return r;
}

CheckResult check_statevector(int max_n, const ClosedFormFn& closed_form) {
  CheckResult r;
  r.name = "hsh-statevector";
  for (int n = 1; n <= max_n && r.passed; ++n) {
    StateVector state(n);
    const auto all = qubit_range(0, n);
    state.hadamard(all);
    state.s_phase(all);
    state.hadamard(all);

    const double norm_err = std::abs(state.norm_sq() - 1.0);
    ++r.cases;
    if (norm_err > kNormTolerance) {
      r.passed = false;
      r.counterexample = "n=" + std::to_string(n) + ": norm off by " +
                         std::to_string(norm_err);
      break;
    }
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t zv = 0; zv < count; ++zv) {
      const BitString z(zv, n);
      const std::complex<double> expected =
          closed_form(n, hamming_weight(z)).to_complex() *
          std::ldexp(1.0, -n);
      ++r.cases;
      if (std::abs(state.amplitude(zv) - expected) > kAmplitudeTolerance) {
        r.passed = false;
        r.counterexample = case_tag(n, z) + ": statevector amplitude " +
                           "deviates from the exact value";
        break;
      }
    }
  }
  return r;
}

}  // namespace

VerifyReport run_verification(int max_n, ClosedFormFn closed_form) {
  if (max_n < 1 || max_n > 16) {
    throw std::invalid_argument("max_n out of range: " +
                                std::to_string(max_n));
  }
  if (!closed_form) {
    closed_form = [](int n, int w) { return closed_form_sum(n, w); };
  }
  VerifyReport report;
  report.max_n = max_n;
  report.checks.push_back(check_closed_form(max_n, closed_form));
  report.checks.push_back(check_half_range(max_n));
  report.checks.push_back(check_magnitude(max_n, closed_form));
  report.checks.push_back(check_residual(max_n));
  report.checks.push_back(check_statevector(max_n, closed_form));
  return report;
}

void render_verify_report(const VerifyReport& report, std::ostream& out) {
  std::size_t failed = 0;
  for (const auto& check : report.checks) {
    if (check.passed) {
      out << "[PASS] " << check.name << ": " << check.cases << " cases\n";
    } else {
      ++failed;
      out << "[FAIL] " << check.name << ": " << check.counterexample << "\n";
    }
  }
  if (failed == 0) {
    out << "verification: all " << report.checks.size()
        << " checks passed (max n = " << report.max_n << ")\n";
  } else {
    out << "verification: " << failed << " of " << report.checks.size()
        << " checks FAILED (max n = " << report.max_n << ")\n";
  }
}

}  // namespace hsh
