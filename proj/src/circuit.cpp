// Copyright 2026 The hshsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "hsh/circuit.hpp"

#include <cmath>

#include "hsh/statevector.hpp"

namespace hsh {

namespace {

constexpr int kFullModeMaxQubits = 22;
constexpr int kFastModeMaxElements = 24;

std::vector<SolutionDiagnostic> build_diagnostics(
    int n, const std::vector<BitString>& solutions,
    const std::vector<double>& probabilities,
    const std::function<std::complex<double>(BitString)>& branch0_of,
    const std::function<std::complex<double>(BitString)>& branch1_of) {
  const bool two_complementary =
      solutions.size() == 2 && solutions[1] == solutions[0].complement();
  std::vector<SolutionDiagnostic> out;
  out.reserve(solutions.size());
  for (const BitString& y : solutions) {
    SolutionDiagnostic d;
    d.state = y;
    d.branch0 = branch0_of(y);
    d.branch1 = branch1_of(y);
    if (two_complementary) {
      d.exact_residual = residual_amplitude(n, hamming_weight(y));
    }
    d.probability = probabilities[y.value];
    d.doubling_ratio = std::ldexp(d.probability, n);
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

CircuitResult run_full(const PartitionInstance& instance) {
  const RegisterLayout layout = RegisterLayout::for_instance(instance);
  if (layout.total > kFullModeMaxQubits) {
    throw std::invalid_argument(
        "register too large for full simulation: " +
        std::to_string(layout.total) + " qubits (limit " +
        std::to_string(kFullModeMaxQubits) + ")");
  }
  const int n = layout.n;
  const std::uint64_t sigma_start = layout.initial_sigma().value;

  StateVector state = StateVector::basis(
      layout.total, BitString(layout.pack(0, sigma_start, true), layout.total));
  const std::vector<int> x_qubits = qubit_range(0, n);

  state.hadamard(x_qubits);

  std::vector<BasisPermutation> adders;
  adders.reserve(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) {
    adders.push_back(conditional_add_permutation(instance, e, layout));
  }
  for (const auto& adder : adders) state.permute(adder);
  state.permute(zero_flip_permutation(layout));
  for (int e = n - 1; e >= 0; --e) state.permute(adders[e].inverted());

  state.s_phase(x_qubits);
  state.controlled_hadamard(x_qubits, layout.control_qubit(), true);

  CircuitResult result;
  result.mode = SimulationMode::full;
  result.layout = layout;
  result.probabilities = state.marginal_probabilities(x_qubits);

  const auto sigma_marginal =
      state.marginal_probabilities(qubit_range(n, layout.m));
  double off_mass = 0.0;
  for (std::size_t s = 0; s < sigma_marginal.size(); ++s) {
    if (s != sigma_start) off_mass += sigma_marginal[s];
  }
  result.sigma_residual_mass = off_mass;

  const auto solutions = enumerate_solutions(instance);
  result.solutions = build_diagnostics(
      n, solutions, result.probabilities,
      [&](BitString y) {
        return state.amplitude(layout.pack(y.value, sigma_start, false));
      },
      [&](BitString y) {
        return state.amplitude(layout.pack(y.value, sigma_start, true));
      });
  return result;
}

CircuitResult run_fast(const PartitionInstance& instance) {
  const RegisterLayout layout = RegisterLayout::for_instance(instance);
  const int n = layout.n;
  if (n > kFastModeMaxElements) {
    throw std::invalid_argument("too many elements for fast simulation: " +
                                std::to_string(n));
  }
  const auto solutions = enumerate_solutions(instance);
  const std::uint64_t dim = std::uint64_t{1} << n;

  std::vector<bool> solution_mask(dim, false);
  for (const BitString& y : solutions) solution_mask[y.value] = true;

  // After H, oracle, uncompute and S every basis state x carries amplitude
  // i^w(x) / sqrt(2^n), sitting in the c=0 branch when x solves the
  // instance and in the c=1 branch otherwise. Only the c=1 branch gets the
  // final Hadamard.
  const double coeff = 1.0 / std::sqrt(static_cast<double>(dim));
  StateVector branch1(n);
  auto amps = branch1.amplitudes();
  amps[0] = {0.0, 0.0};
  for (std::uint64_t x = 0; x < dim; ++x) {
    if (solution_mask[x]) continue;
    const GaussianInt phase = i_pow(std::popcount(x));
    amps[x] = {static_cast<double>(phase.re) * coeff,
               static_cast<double>(phase.im) * coeff};
  }
  branch1.hadamard(qubit_range(0, n));

  CircuitResult result;
  result.mode = SimulationMode::fast;
  result.layout = layout;
  result.probabilities.resize(dim);
  for (std::uint64_t x = 0; x < dim; ++x) {
    result.probabilities[x] = std::norm(branch1.amplitude(x));
  }
  const double solution_prob = coeff * coeff;  // |i^w / sqrt(2^n)|^2
  for (const BitString& y : solutions) {
    result.probabilities[y.value] += solution_prob;
  }

  result.solutions = build_diagnostics(
      n, solutions, result.probabilities,
      [&](BitString y) {
        const GaussianInt phase = i_pow(hamming_weight(y));
        return std::complex<double>(static_cast<double>(phase.re) * coeff,
                                    static_cast<double>(phase.im) * coeff);
      },
      [&](BitString y) { return branch1.amplitude(y.value); });
  return result;
}

double predicted_solution_probability(int n, int weight) {
  const std::int64_t numerator =
      (std::int64_t{1} << n) + residual_amplitude(n, weight).norm_sq();
  return std::ldexp(static_cast<double>(numerator), -2 * n);
}

RatioRow doubling_ratio_row(int n, int weight) {
  RatioRow row;
  row.n = n;
  row.weight = weight;
  row.residual_norm_sq = residual_amplitude(n, weight).norm_sq();
  row.predicted_probability = predicted_solution_probability(n, weight);
  row.ratio = std::ldexp(row.predicted_probability, n);
  row.bound = std::ldexp(4.0 * std::ldexp(1.0, n / 2) + 4.0, -n);
  return row;
}

std::vector<RatioRow> doubling_ratio_sweep(
    int min_n, int max_n, const std::function<int(int)>& weight_rule) {
  if (min_n < 1 || min_n > max_n) {
    throw std::invalid_argument("invalid qubit range");
  }
  std::vector<RatioRow> rows;
  rows.reserve(static_cast<std::size_t>(max_n - min_n + 1));
  for (int n = min_n; n <= max_n; ++n) {
    rows.push_back(doubling_ratio_row(n, weight_rule(n)));
  }
  return rows;
}

}  // namespace hsh
