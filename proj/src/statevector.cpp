// Copyright 2026 The hshsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "hsh/statevector.hpp"

#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hsh {

namespace {

constexpr int kMaxQubits = 26;  // 2^26 amplitudes ~ 1 GiB

// Exact i^k on a complex value by component swaps; no rounding.
inline std::complex<double> rotate_i(std::complex<double> a, int k) {
  switch (k & 3) {
    case 0:
      return a;
    case 1:
      return {-a.imag(), a.real()};
    case 2:
      return {-a.real(), -a.imag()};
    default:
      return {a.imag(), -a.real()};
  }
}

}  // namespace

bool is_bijection(const BasisPermutation& p) {
  std::vector<bool> seen(p.dim, false);
  for (std::uint64_t x = 0; x < p.dim; ++x) {
    const std::uint64_t y = p.forward(x);
    if (y >= p.dim || seen[y]) return false;
    if (p.inverse && p.inverse(y) != x) return false;
    seen[y] = true;
  }
  return true;
}

StateVector::StateVector(int qubit_count) : qubit_count_(qubit_count) {
  if (qubit_count < 1 || qubit_count > kMaxQubits) {
    throw std::invalid_argument("StateVector: qubit count out of range: " +
                                std::to_string(qubit_count));
  }
  amps_.assign(std::uint64_t{1} << qubit_count, {0.0, 0.0});
  amps_[0] = {1.0, 0.0};
}

StateVector StateVector::basis(int qubit_count, BitString x) {
  if (x.width != qubit_count) {
    throw std::invalid_argument("StateVector::basis: width mismatch");
  }
  StateVector s(qubit_count);
  s.amps_[0] = {0.0, 0.0};
  s.amps_[x.value] = {1.0, 0.0};
  return s;
}

void StateVector::check_targets(std::span<const int> targets,
                                int control) const {
  std::uint64_t seen = 0;
  for (int t : targets) {
    if (t < 0 || t >= qubit_count_) {
      throw std::invalid_argument("target qubit out of range: " +
                                  std::to_string(t));
    }
    if (seen & (std::uint64_t{1} << t)) {
      throw std::invalid_argument("duplicate target qubit: " +
                                  std::to_string(t));
    }
    if (t == control) {
      throw std::invalid_argument("control qubit is also a target: " +
                                  std::to_string(t));
    }
    seen |= std::uint64_t{1} << t;
  }
  if (control >= qubit_count_) {
    throw std::invalid_argument("control qubit out of range: " +
                                std::to_string(control));
  }
}

void StateVector::hadamard(std::span<const int> targets) {
  check_targets(targets, -1);
  const std::uint64_t dim = amps_.size();
  for (int t : targets) {
    const std::uint64_t h = std::uint64_t{1} << t;
    for (std::uint64_t base = 0; base < dim; base += h << 1) {
      for (std::uint64_t i = base; i < base + h; ++i) {
        const auto a = amps_[i];
        const auto b = amps_[i + h];
        amps_[i] = a + b;
        amps_[i + h] = a - b;
      }
    }
  }
  const double scale =
      1.0 / std::sqrt(static_cast<double>(std::uint64_t{1} << targets.size()));
  if (!targets.empty()) {
    for (auto& a : amps_) a *= scale;
  }
}

void StateVector::s_phase(std::span<const int> targets) {
  check_targets(targets, -1);
  std::uint64_t mask = 0;
  for (int t : targets) mask |= std::uint64_t{1} << t;
  const std::uint64_t dim = amps_.size();
  for (std::uint64_t x = 0; x < dim; ++x) {
    amps_[x] = rotate_i(amps_[x], std::popcount(x & mask));
  }
}

void StateVector::controlled_hadamard(std::span<const int> targets,
                                      int control, bool control_value) {
  if (control < 0) {
    throw std::invalid_argument("control qubit out of range");
  }
  check_targets(targets, control);
  const std::uint64_t dim = amps_.size();
  const std::uint64_t cbit = std::uint64_t{1} << control;
  const std::uint64_t cwant = control_value ? cbit : 0;
  for (int t : targets) {
    const std::uint64_t h = std::uint64_t{1} << t;
    for (std::uint64_t base = 0; base < dim; base += h << 1) {
      for (std::uint64_t i = base; i < base + h; ++i) {
        if ((i & cbit) != cwant) continue;
        const auto a = amps_[i];
        const auto b = amps_[i + h];
        amps_[i] = a + b;
        amps_[i + h] = a - b;
      }
    }
  }
  if (!targets.empty()) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(
                                   std::uint64_t{1} << targets.size()));
    for (std::uint64_t x = 0; x < dim; ++x) {
      if ((x & cbit) == cwant) amps_[x] *= scale;
    }
  }
}

void StateVector::permute(const BasisPermutation& p) {
  if (p.dim != amps_.size()) {
    throw std::invalid_argument("permutation dimension mismatch");
  }
  std::vector<std::complex<double>> next(amps_.size(), {0.0, 0.0});
#ifndef NDEBUG
  std::vector<bool> seen(amps_.size(), false);
#endif
  for (std::uint64_t x = 0; x < p.dim; ++x) {
    const std::uint64_t y = p.forward(x);
    if (y >= p.dim) {
      throw std::invalid_argument("permutation image out of range");
    }
#ifndef NDEBUG
    if (seen[y]) {
      throw std::invalid_argument("permutation is not a bijection");
    }
    seen[y] = true;
#endif
    next[y] = amps_[x];
  }
  amps_ = std::move(next);
}

std::vector<double> StateVector::marginal_probabilities(
    std::span<const int> kept) const {
  check_targets(kept, -1);
  if (kept.size() >= 63) {
    throw std::invalid_argument("too many kept qubits");
  }
  std::vector<double> table(std::uint64_t{1} << kept.size(), 0.0);
  const std::uint64_t dim = amps_.size();
  for (std::uint64_t x = 0; x < dim; ++x) {
    std::uint64_t packed = 0;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      packed |= ((x >> kept[i]) & 1u) << i;
    }
    table[packed] += std::norm(amps_[x]);
  }
  return table;
}

double StateVector::norm_sq() const {
  double total = 0.0;
  for (const auto& a : amps_) total += std::norm(a);
  return total;
}

std::vector<int> qubit_range(int first, int count) {
  std::vector<int> qs(static_cast<std::size_t>(count));
  std::iota(qs.begin(), qs.end(), first);
  return qs;
}

}  // namespace hsh
