// Copyright 2026 The hshsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end amplitude-doubling circuit for a partition instance, in two
// modes. Full mode simulates every stage on the whole (n+m+1)-qubit
// register. Fast mode keeps two length-2^n branch arrays, one per control
// value, exploiting that the accumulator is constant again after the
// uncompute and the control bit is a function of x alone. The two modes
// are cross-checked rather than assumed equal.

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "hsh/bitmath.hpp"
#include "hsh/closedform.hpp"
#include "hsh/partition.hpp"

namespace hsh {

enum class SimulationMode { fast, full };

/// Final-state observables for one solution state y.
struct SolutionDiagnostic {
  BitString state;  // y

  /// Amplitude of the (y, c=0) branch; magnitude 1/sqrt(2^n).
  std::complex<double> branch0;

  /// Amplitude of the (y, c=1) branch, i.e. the residual the transformed
  /// non-solution states leave on |y>; equals exact_residual / 2^n.
  std::complex<double> branch1;

  /// Exact unnormalized residual (divide by 2^n to get branch1). Present
  /// only when the instance has exactly two complementary solutions, the
  /// case the closed form covers.
  std::optional<GaussianInt> exact_residual;

  double probability = 0.0;
  double doubling_ratio = 0.0;  // probability * 2^n
};

struct CircuitResult {
  SimulationMode mode = SimulationMode::fast;
  RegisterLayout layout;
  std::vector<double> probabilities;  // x-register marginal, size 2^n
  std::vector<SolutionDiagnostic> solutions;

  /// Probability mass the sigma register holds outside encode(-S, m) at the
  /// end of the run. Zero when the uncompute disentangled the accumulator;
  /// fast mode never entangles it, so the value is identically zero there.
  double sigma_residual_mass = 0.0;
};

/// Gate-level simulation of the whole register: prepare (0, -S, 1),
/// Hadamard the x-register, run the conditional adders, flip the control on
/// sigma == 0, uncompute the adders, apply the S phase, then the
/// control-gated Hadamard on non-solution states. Register capped at
/// n + m + 1 <= 22 qubits.
CircuitResult run_full(const PartitionInstance& instance);

/// Two-branch simulation producing the same result; n <= 24.
CircuitResult run_fast(const PartitionInstance& instance);

/// Closed-form prediction of a solution state's probability for a
/// two-solution instance: (2^n + |residual|^2) / 4^n.
double predicted_solution_probability(int n, int weight);

/// One row of the doubling-ratio sweep.
struct RatioRow {
  int n = 0;
  int weight = 0;
  std::int64_t residual_norm_sq = 0;
  double predicted_probability = 0.0;
  double ratio = 0.0;  // predicted_probability * 2^n
  double bound = 0.0;  // proven cap on |ratio - 2|: (4 * 2^(n/2) + 4) / 2^n
};

RatioRow doubling_ratio_row(int n, int weight);

/// Rows for each n in [min_n, max_n] with the weight chosen per n.
/// Closed-form only; no statevector is allocated.
std::vector<RatioRow> doubling_ratio_sweep(
    int min_n, int max_n, const std::function<int(int)>& weight_rule);

}  // namespace hsh
