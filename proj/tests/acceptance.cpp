// Copyright 2026 The hshsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: one self-contained check per shipping criterion, each
// printing a [PASS]/[FAIL] line with its runtime. Exit code is the number
// of failed criteria. Tolerances and time budgets are pinned here, not
// taken from flags.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hsh/circuit.hpp"
#include "hsh/cli.hpp"
#include "hsh/closedform.hpp"
#include "hsh/partition.hpp"
#include "hsh/statevector.hpp"
#include "hsh/verify.hpp"
#include "test_support.hpp"

namespace {

using hsh::BitString;
using hsh::GaussianInt;

struct Criterion {
  std::string name;
  double seconds_budget;
  std::function<bool(std::string&)> body;  // fills a failure detail
};

// -------- criterion 1: exact amplitude tables for n = 3 and n = 4 --------

const std::vector<GaussianInt> kTable3 = {
    {-2, 2}, {2, 2}, {2, 2}, {2, -2}, {2, 2}, {2, -2}, {2, -2}, {-2, -2}};
const std::vector<GaussianInt> kTable4 = {
    {-4, 0}, {0, 4}, {0, 4}, {4, 0},  {0, 4}, {4, 0},  {4, 0},  {0, -4},
    {0, 4},  {4, 0}, {4, 0}, {0, -4}, {4, 0}, {0, -4}, {0, -4}, {-4, 0}};

bool table_matches(int n, const std::vector<GaussianInt>& expected,
                   std::string& detail) {
  std::ostringstream out;
  std::ostringstream err;
  const int code =
      hsh::run_cli({"table", "--n", std::to_string(n), "--exact"}, out, err);
  if (code != 0) {
    detail = "table command exited with " + std::to_string(code);
    return false;
  }
  const auto lines = hsh::testing::split_lines(out.str());
  if (lines.size() != expected.size() + 1) {
    detail = "expected " + std::to_string(expected.size()) + " rows, got " +
             std::to_string(lines.size() - 1);
    return false;
  }
  for (std::size_t row = 0; row < expected.size(); ++row) {
    const auto fields = hsh::testing::split_csv(lines[row + 1]);
    if (fields.size() != 5) {
      detail = "row " + std::to_string(row) + " malformed";
      return false;
    }
    if (fields[0] != BitString(row, n).binary()) {
      detail = "row " + std::to_string(row) + " has z = " + fields[0];
      return false;
    }
    const auto parsed = hsh::testing::parse_gaussian(fields[1]);
    if (!parsed || !(*parsed == expected[row])) {
      detail = "row " + std::to_string(row) + ": exact value " + fields[1] +
               ", expected " + expected[row].str();
      return false;
    }
  }
  return true;
}

bool criterion_tables(std::string& detail) {
  return table_matches(3, kTable3, detail) &&
         table_matches(4, kTable4, detail);
}

// -------- criterion 2: worked instance {1,2,3} --------

bool criterion_worked_instance(std::string& detail) {
  const auto path =
      std::filesystem::temp_directory_path() / "hsh_acceptance_worked.json";
  {
    std::ofstream file(path);
    file << R"({"weights":[1,2,3]})";
  }
  std::ostringstream out;
  std::ostringstream err;
  const int code = hsh::run_cli(
      {"run", "--instance", path.string(), "--format", "json"}, out, err);
  if (code != 0) {
    detail = "run command exited with " + std::to_string(code);
    return false;
  }
  const auto doc = nlohmann::json::parse(out.str());
  const double p011 = doc["probabilities"]["011"].get<double>();
  if (std::abs(p011 - 0.40625) > 1e-10) {
    detail = "P(011) = " + std::to_string(p011);
    return false;
  }
  for (const auto& diag : doc["solution_diagnostics"]) {
    if (diag["state"] == "011") {
      if (diag["residual_exact"] != "3-3i") {
        detail = "residual for 011 is " +
                 diag["residual_exact"].get<std::string>();
        return false;
      }
      return true;
    }
  }
  detail = "no diagnostic for state 011";
  return false;
}

// -------- criterion 3: closed form == brute force for all n <= 12 --------

bool criterion_oracle_equivalence(std::string& detail) {
  for (int n = 1; n <= 12; ++n) {
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t zv = 0; zv < count; ++zv) {
      const BitString z(zv, n);
      if (!(hsh::closed_form_sum(n, hsh::hamming_weight(z)) ==
            hsh::brute_force_sum(n, z))) {
        detail = "n=" + std::to_string(n) + " z=" + z.binary();
        return false;
      }
    }
  }
  return true;
}

// -------- criterion 4: half-range recursion for all odd n <= 13 --------

bool criterion_half_range(std::string& detail) {
  for (int n = 1; n <= 13; n += 2) {
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t zv = 0; zv < count; ++zv) {
      const BitString z(zv, n);
      GaussianInt expected =
          hsh::brute_force_sum(n - 1, hsh::low_bits(z, 1)).times_i();
      if (z.bit(n - 1)) expected = -expected;
      if (!(hsh::upper_half_sum(n, z) == expected)) {
        detail = "n=" + std::to_string(n) + " z=" + z.binary();
        return false;
      }
    }
  }
  return true;
}

// -------- criterion 5: H.S.H statevector vs closed form up to n = 16 -----

bool criterion_statevector(std::string& detail) {
  for (int n = 1; n <= 16; ++n) {
    hsh::StateVector state(n);
    const auto all = hsh::qubit_range(0, n);
    state.hadamard(all);
    state.s_phase(all);
    state.hadamard(all);
    if (std::abs(state.norm_sq() - 1.0) > 1e-12) {
      detail = "n=" + std::to_string(n) + ": norm drifted";
      return false;
    }
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t zv = 0; zv < count; ++zv) {
      const BitString z(zv, n);
      const std::complex<double> expected =
          hsh::closed_form_sum(n, hsh::hamming_weight(z)).to_complex() *
          std::ldexp(1.0, -n);
      if (std::abs(state.amplitude(zv) - expected) > 1e-10) {
        detail = "n=" + std::to_string(n) + " z=" + z.binary();
        return false;
      }
    }
  }
  return true;
}

// -------- criterion 6: fast/full mode equivalence on random instances ----

bool criterion_mode_equivalence(std::string& detail) {
  std::mt19937_64 rng(20260814);
  for (int trial = 0; trial < 20; ++trial) {
    const hsh::PartitionInstance instance =
        hsh::testing::random_two_solution_instance(rng, 20);
    const hsh::CircuitResult fast = hsh::run_fast(instance);
    const hsh::CircuitResult full = hsh::run_full(instance);
    for (std::size_t x = 0; x < fast.probabilities.size(); ++x) {
      if (std::abs(fast.probabilities[x] - full.probabilities[x]) > 1e-12) {
        detail = "trial " + std::to_string(trial) + ": probabilities differ";
        return false;
      }
    }
    if (full.sigma_residual_mass > 1e-12) {
      detail = "trial " + std::to_string(trial) +
               ": sigma register kept mass " +
               std::to_string(full.sigma_residual_mass);
      return false;
    }
  }
  return true;
}

// -------- criterion 7: doubling ratio bound for every n in 8..24 ---------

bool criterion_doubling_bound(std::string& detail) {
  for (int n = 8; n <= 24; ++n) {
    for (int w = 0; w <= n; ++w) {
      // Exact integer check of |P * 2^n - 2| <= (4 * 2^(n/2) + 4) / 2^n,
      // i.e. | |b|^2 - 2^n | <= 4 * 2^(n/2) + 4.
      const std::int64_t pow_n = std::int64_t{1} << n;
      const std::int64_t norm = hsh::residual_amplitude(n, w).norm_sq();
      const std::int64_t gap = norm > pow_n ? norm - pow_n : pow_n - norm;
      const std::int64_t cap = 4 * (std::int64_t{1} << (n / 2)) + 4;
      if (gap > cap) {
        detail = "n=" + std::to_string(n) + " w=" + std::to_string(w) +
                 ": gap " + std::to_string(gap) + " exceeds " +
                 std::to_string(cap);
        return false;
      }
      // The correction driving the gap has squared magnitude 0, 2 or 4.
      const std::int64_t corr = hsh::residual_correction(n, w).norm_sq();
      if (corr != 0 && corr != 2 && corr != 4) {
        detail = "n=" + std::to_string(n) + " w=" + std::to_string(w) +
                 ": correction norm " + std::to_string(corr);
        return false;
      }
    }
  }
  return true;
}

// -------- criterion 8: performance targets --------

bool criterion_performance(std::string& detail) {
  using clock = std::chrono::steady_clock;

  const auto h_start = clock::now();
  hsh::StateVector big(24);
  big.hadamard(hsh::qubit_range(0, 24));
  const double h_seconds =
      std::chrono::duration<double>(clock::now() - h_start).count();
  if (h_seconds >= 5.0) {
    detail = "24-qubit transform took " + std::to_string(h_seconds) + " s";
    return false;
  }
  if (std::abs(big.norm_sq() - 1.0) > 1e-9) {
    detail = "24-qubit transform lost normalization";
    return false;
  }

  const auto v_start = clock::now();
  std::ostringstream out;
  std::ostringstream err;
  const int code = hsh::run_cli({"verify", "--max-n", "12"}, out, err);
  const double v_seconds =
      std::chrono::duration<double>(clock::now() - v_start).count();
  if (code != 0) {
    detail = "verify --max-n 12 exited with " + std::to_string(code);
    return false;
  }
  if (v_seconds >= 120.0) {
    detail = "verify --max-n 12 took " + std::to_string(v_seconds) + " s";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"exact amplitude tables (n=3, n=4)", 1.0, criterion_tables},
      {"worked instance {1,2,3}", 1.0, criterion_worked_instance},
      {"closed form vs brute force, n<=12", 60.0,
       criterion_oracle_equivalence},
      {"half-range recursion, odd n<=13", 60.0, criterion_half_range},
      {"H.S.H statevector agreement, n<=16", 60.0, criterion_statevector},
      {"fast/full mode equivalence, 20 instances", 60.0,
       criterion_mode_equivalence},
      {"doubling ratio bound, n=8..24", 60.0, criterion_doubling_bound},
      {"performance targets", 130.0, criterion_performance},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    if (ok && seconds > criterion.seconds_budget) {
      ok = false;
      detail = "over time budget: " + std::to_string(seconds) + " s > " +
               std::to_string(criterion.seconds_budget) + " s";
    }
    std::printf("[%s] %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL",
                criterion.name.c_str(), seconds, detail.empty() ? "" : ": ",
                detail.c_str());
    if (!ok) ++failures;
  }
  if (failures == 0) {
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
  } else {
    std::printf("acceptance: %d of %zu criteria FAILED\n", failures,
                criteria.size());
  }
  return failures;
}
