// Copyright 2026 The hshsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "hsh/closedform.hpp"

#include <cassert>
#include <cmath>

namespace hsh {

namespace {

constexpr int kBruteForceMaxQubits = 24;
constexpr int kClosedFormMaxQubits = 30;

void check_weight(int n, int weight) {
  if (n < 1 || n > kClosedFormMaxQubits) {
    throw std::invalid_argument("qubit count out of range: " +
                                std::to_string(n));
  }
  if (weight < 0 || weight > n) {
    throw std::invalid_argument("weight out of range: " +
                                std::to_string(weight) + " for n = " +
                                std::to_string(n));
  }
}

}  // namespace

std::complex<double> UnnormalizedAmplitude::normalized() const {
  return value.to_complex() * std::ldexp(1.0, -n);
}

double UnnormalizedAmplitude::probability() const {
  return std::ldexp(static_cast<double>(value.norm_sq()), -2 * n);
}

GaussianInt brute_force_sum(int n, BitString z) {
  if (n < 0 || n > kBruteForceMaxQubits) {
    throw std::invalid_argument("brute_force_sum: n out of range: " +
                                std::to_string(n));
  }
  if (z.width != n) {
    throw std::invalid_argument("brute_force_sum: z width must equal n");
  }
  const std::uint64_t count = std::uint64_t{1} << n;
  GaussianInt acc{};
  for (std::uint64_t x = 0; x < count; ++x) {
    GaussianInt term = i_pow(std::popcount(x));
    if (std::popcount(x & z.value) & 1) term = -term;
    acc += term;
  }
  return acc;
}

GaussianInt closed_form_sum(int n, int weight) {
  check_weight(n, weight);
  const int m = n / 2;
  GaussianInt a = i_pow(m + weight);
  if (weight & 1) a = -a;
  a = a * GaussianInt{std::int64_t{1} << m, 0};
  if (n & 1) a = a * GaussianInt{1, 1};
  return a;
}

GaussianInt upper_half_sum(int n_odd, BitString z) {
  if (n_odd < 1 || n_odd > kBruteForceMaxQubits || (n_odd % 2) == 0) {
    throw std::invalid_argument("upper_half_sum: n must be odd and <= " +
                                std::to_string(kBruteForceMaxQubits));
  }
  if (z.width != n_odd) {
    throw std::invalid_argument("upper_half_sum: z width must equal n");
  }
  const std::uint64_t lo = std::uint64_t{1} << (n_odd - 1);
  const std::uint64_t hi = std::uint64_t{1} << n_odd;
  GaussianInt acc{};
  for (std::uint64_t x = lo; x < hi; ++x) {
    GaussianInt term = i_pow(std::popcount(x));
    if (std::popcount(x & z.value) & 1) term = -term;
    acc += term;
  }
  return acc;
}

GaussianInt residual_correction(int n, int weight) {
  check_weight(n, weight);
  GaussianInt own = i_pow(weight);
  if (weight & 1) own = -own;  // (-1)^w factor
  return own + i_pow(n - weight);
}

GaussianInt residual_correction_split(int n, int weight) {
  check_weight(n, weight);
  const GaussianInt s = i_pow(weight) * (GaussianInt{1, 0} + i_pow(n));
  return (weight & 1) ? -s : s;
}

GaussianInt residual_amplitude(int n, int weight) {
  const GaussianInt correction = residual_correction(n, weight);
  assert(correction == residual_correction_split(n, weight));
  return closed_form_sum(n, weight) - correction;
}

UnnormalizedAmplitude table_row(int n, BitString z) {
  if (z.width != n) {
    throw std::invalid_argument("table_row: z width must equal n");
  }
  return {closed_form_sum(n, hamming_weight(z)), n};
}

}  // namespace hsh
