// Copyright 2026 The hshsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Partition-problem instances and the oracle arithmetic the circuit builds
// on: the half-sum target, the two's-complement accumulator layout,
// conditional adders as exact basis permutations, and the zero-detection
// control flip. Classical enumeration of solutions lives here too, as the
// verification counterpart of the quantum oracle.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsh/bitmath.hpp"
#include "hsh/statevector.hpp"

namespace hsh {

/// Instance whose total weight is odd: the half-sum is not an integer, so
/// the accumulator target is undefined and the instance is rejected before
/// any register is laid out.
class RejectedInstance : public std::runtime_error {
 public:
  explicit RejectedInstance(const std::string& what)
      : std::runtime_error(what) {}
};

/// Element weights s(e), e = 0..n-1, all strictly positive.
class PartitionInstance {
 public:
  explicit PartitionInstance(std::vector<std::int64_t> weights);

  int element_count() const { return static_cast<int>(weights_.size()); }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  std::int64_t total_weight() const;

 private:
  std::vector<std::int64_t> weights_;
};

/// Half the total weight. Throws RejectedInstance when the total is odd.
std::int64_t half_sum(const PartitionInstance& instance);

/// Register layout of the full circuit: x-register (qubits 0..n-1),
/// sigma accumulator (qubits n..n+m-1), control qubit (n+m). The
/// accumulator width m = ceil(log2 S) + 1 guarantees 2^m > S, so a sigma
/// of zero is detected exactly even though the arithmetic wraps mod 2^m.
struct RegisterLayout {
  int n = 0;
  int m = 0;
  int total = 0;        // n + m + 1
  std::int64_t half = 0;  // S, the subset-sum target

  static RegisterLayout for_instance(const PartitionInstance& instance);

  int control_qubit() const { return n + m; }
  std::uint64_t dim() const { return std::uint64_t{1} << total; }

  std::uint64_t x_field(std::uint64_t index) const {
    return index & BitString::mask(n);
  }
  std::uint64_t sigma_field(std::uint64_t index) const {
    return (index >> n) & BitString::mask(m);
  }
  bool control_field(std::uint64_t index) const {
    return (index >> (n + m)) & 1u;
  }
  std::uint64_t pack(std::uint64_t x, std::uint64_t sigma_bits,
                     bool control) const {
    return x | (sigma_bits << n) |
           (static_cast<std::uint64_t>(control) << (n + m));
  }

  /// Accumulator start value: encode(-S, m).
  BitString initial_sigma() const { return twos_complement_encode(-half, m); }
};

/// -S plus the sum of the weights selected by the set bits of x.
std::int64_t subset_sigma(const PartitionInstance& instance, BitString x);

/// True iff subset_sigma(instance, x) == 0.
bool is_solution(const PartitionInstance& instance, BitString x);

/// All solutions, ascending. The result is closed under bitwise
/// complement. Exhaustive; capped at 24 elements.
std::vector<BitString> enumerate_solutions(const PartitionInstance& instance);

/// Basis permutation that adds s(element) into the sigma field mod 2^m on
/// every state whose x_element bit is set, and fixes all other states. The
/// inverse subtracts.
BasisPermutation conditional_add_permutation(const PartitionInstance& instance,
                                             int element,
                                             const RegisterLayout& layout);

/// Involution that flips the control bit exactly on states whose sigma
/// field is all zeros.
BasisPermutation zero_flip_permutation(const RegisterLayout& layout);

}  // namespace hsh
