// Copyright 2026 The hshsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "hsh/partition.hpp"

#include <bit>
#include <numeric>

namespace hsh {

namespace {

constexpr int kMaxElements = 24;

int ceil_log2(std::uint64_t v) {
  return v <= 1 ? 0 : std::bit_width(v - 1);
}

}  // namespace

PartitionInstance::PartitionInstance(std::vector<std::int64_t> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) {
    throw std::invalid_argument("instance needs at least one element");
  }
  if (weights_.size() > 62) {
    throw std::invalid_argument("too many elements");
  }
  for (std::size_t e = 0; e < weights_.size(); ++e) {
    if (weights_[e] < 1) {
      throw std::invalid_argument("weight of element " + std::to_string(e) +
                                  " must be positive");
    }
    if (weights_[e] > (std::int64_t{1} << 40)) {
      throw std::invalid_argument("weight of element " + std::to_string(e) +
                                  " too large");
    }
  }
}

std::int64_t PartitionInstance::total_weight() const {
  return std::accumulate(weights_.begin(), weights_.end(), std::int64_t{0});
}

std::int64_t half_sum(const PartitionInstance& instance) {
  const std::int64_t total = instance.total_weight();
  if (total % 2 != 0) {
    throw RejectedInstance("instance rejected: half-sum not integer (total " +
                           std::to_string(total) + " is odd)");
  }
  return total / 2;
}

RegisterLayout RegisterLayout::for_instance(const PartitionInstance& instance) {
  RegisterLayout layout;
  layout.n = instance.element_count();
  layout.half = half_sum(instance);
  layout.m = ceil_log2(static_cast<std::uint64_t>(layout.half)) + 1;
  layout.total = layout.n + layout.m + 1;
  return layout;
}

std::int64_t subset_sigma(const PartitionInstance& instance, BitString x) {
  if (x.width != instance.element_count()) {
    throw std::invalid_argument("subset_sigma: x width must equal n");
  }
  std::int64_t sigma = -half_sum(instance);
  for (int e = 0; e < instance.element_count(); ++e) {
    if (x.bit(e)) sigma += instance.weights()[e];
  }
  return sigma;
}

bool is_solution(const PartitionInstance& instance, BitString x) {
  return subset_sigma(instance, x) == 0;
}

std::vector<BitString> enumerate_solutions(const PartitionInstance& instance) {
  const int n = instance.element_count();
  if (n > kMaxElements) {
    throw std::invalid_argument("enumerate_solutions: too many elements");
  }
  const std::int64_t target = half_sum(instance);
  std::vector<BitString> solutions;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < count; ++x) {
    std::int64_t sum = 0;
    for (std::uint64_t bits = x; bits != 0; bits &= bits - 1) {
      sum += instance.weights()[std::countr_zero(bits)];
    }
    if (sum == target) solutions.emplace_back(x, n);
  }
  return solutions;
}

BasisPermutation conditional_add_permutation(const PartitionInstance& instance,
                                             int element,
                                             const RegisterLayout& layout) {
  if (element < 0 || element >= layout.n) {
    throw std::invalid_argument("element index out of range: " +
                                std::to_string(element));
  }
  const int n = layout.n;
  const std::uint64_t smask = BitString::mask(layout.m) << n;
  const std::uint64_t weight =
      static_cast<std::uint64_t>(instance.weights()[element]) &
      BitString::mask(layout.m);
  const std::uint64_t ebit = std::uint64_t{1} << element;

  // Adds `addend` into the sigma field, wrapping mod 2^m inside the field.
  auto add_into_sigma = [n, smask](std::uint64_t index, std::uint64_t addend) {
    const std::uint64_t s = (index & smask) + (addend << n);
    return (index & ~smask) | (s & smask);
  };

  const std::uint64_t negated =
      (BitString::mask(layout.m) + 1 - weight) & BitString::mask(layout.m);
  return BasisPermutation{
      layout.dim(),
      [=](std::uint64_t index) {
        return (index & ebit) ? add_into_sigma(index, weight) : index;
      },
      [=](std::uint64_t index) {
        return (index & ebit) ? add_into_sigma(index, negated) : index;
      }};
}

BasisPermutation zero_flip_permutation(const RegisterLayout& layout) {
  const std::uint64_t smask = BitString::mask(layout.m) << layout.n;
  const std::uint64_t cbit = std::uint64_t{1} << layout.control_qubit();
  auto flip = [smask, cbit](std::uint64_t index) {
    return (index & smask) == 0 ? index ^ cbit : index;
  };
  return BasisPermutation{layout.dim(), flip, flip};
}

}  // namespace hsh
