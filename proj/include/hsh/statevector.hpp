// Copyright 2026 The hshsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Dense complex statevector with in-place kernels for the only operations
// the circuit needs: per-qubit Hadamard butterflies (a fast Walsh-Hadamard
// transform over the chosen qubits), the diagonal S phase, a control-gated
// variant of the transform, and basis permutations. There is no general
// gate-matrix engine.

#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hsh/bitmath.hpp"

namespace hsh {

/// A bijection on basis indices [0, dim), carried together with its
/// inverse so reversible steps can be uncomputed.
struct BasisPermutation {
  std::uint64_t dim = 0;
  std::function<std::uint64_t(std::uint64_t)> forward;
  std::function<std::uint64_t(std::uint64_t)> inverse;

  BasisPermutation inverted() const { return {dim, inverse, forward}; }
};

/// Checks that `p.forward` is a bijection on [0, p.dim) and that
/// `p.inverse` undoes it. Intended for tests; cost is O(dim).
bool is_bijection(const BasisPermutation& p);

/// 2^q complex amplitudes over q qubits. Single-writer semantics: at most
/// one mutating operation at a time; hand off between threads freely.
class StateVector {
 public:
  /// |0...0> over q qubits.
  explicit StateVector(int qubit_count);

  /// Unit amplitude on the given basis state.
  static StateVector basis(int qubit_count, BitString x);

  int qubit_count() const { return qubit_count_; }
  std::uint64_t dim() const { return amps_.size(); }
  std::complex<double> amplitude(std::uint64_t index) const {
    return amps_[index];
  }
  std::span<const std::complex<double>> amplitudes() const { return amps_; }
  std::span<std::complex<double>> amplitudes() { return amps_; }

  /// H on every target qubit. The butterflies run unnormalized and a single
  /// 2^(-k/2) scale is applied at the end of the call; externally this is
  /// the normalized transform.
  void hadamard(std::span<const int> targets);

  /// Multiplies the amplitude at index x by i^(number of set target bits
  /// of x). Diagonal; no basis state moves.
  void s_phase(std::span<const int> targets);

  /// hadamard(targets) restricted to the subspace where `control` reads
  /// `control_value`; identity elsewhere. The control must not be a target.
  void controlled_hadamard(std::span<const int> targets, int control,
                           bool control_value);

  /// Moves amplitude at x to p.forward(x). Exact norm preservation. In
  /// builds with assertions enabled the image is checked for collisions.
  void permute(const BasisPermutation& p);

  /// Probability table over the kept qubits: bit i of the table index is
  /// qubit kept[i]. Discarded qubits are summed out.
  std::vector<double> marginal_probabilities(std::span<const int> kept) const;

  double norm_sq() const;

 private:
  void check_targets(std::span<const int> targets, int control) const;

  int qubit_count_ = 0;
  std::vector<std::complex<double>> amps_;
};

/// Qubits [first, first + count) as a target list.
std::vector<int> qubit_range(int first, int count);

}  // namespace hsh
