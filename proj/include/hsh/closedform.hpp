// Copyright 2026 The hshsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Exact amplitudes of the H.S.H gate sandwich, all in Gaussian-integer
// arithmetic. `brute_force_sum` is the independent oracle: it evaluates the
// defining sum term by term, while `closed_form_sum` evaluates the
// weight-only formula the oracle is checked against. Floating point appears
// nowhere in this module.

#pragma once

#include <complex>

#include "hsh/bitmath.hpp"

namespace hsh {

/// An amplitude before the global 1/2^n normalization is applied.
/// For the H.S.H construction |value|^2 == 2^n exactly.
struct UnnormalizedAmplitude {
  GaussianInt value;
  int n = 0;  // normalization divisor is 2^n

  std::complex<double> normalized() const;
  double probability() const;  // |value|^2 / 4^n
};

/// Exponent of the phase S^(x)n attaches to |x>: the amplitude picks up
/// i^hamming_weight(x) and no basis state moves.
inline int s_phase_exponent(BitString x) { return hamming_weight(x); }

/// The literal sum over all 2^n basis states of i^w(x) * (-1)^(x.z),
/// accumulated term by term. This is the oracle every closed form is
/// validated against. n = 0 yields the single x = 0 term, i.e. 1.
/// Cost is 2^n; capped at n <= 24.
GaussianInt brute_force_sum(int n, BitString z);

/// Closed form for the same sum, which depends on z only through its
/// Hamming weight: for even n = 2m the value is (-1)^w * i^(m+w) * 2^m, and
/// for odd n = 2m+1 it is (-1)^w * i^(m+w) * 2^m * (1+i).
GaussianInt closed_form_sum(int n, int weight);

/// Upper-half portion of the brute-force sum for odd n = 2m+1: only the
/// basis states x in [2^2m, 2^(2m+1)) contribute. Satisfies the half-range
/// recursion: equals i * (-1)^(z_2m) times the 2m-qubit sum over
/// low_bits(z, 1).
GaussianInt upper_half_sum(int n_odd, BitString z);

/// The term the two solution states contribute to their own amplitude:
/// i^w * (-1)^w + i^(n-w), evaluated directly.
GaussianInt residual_correction(int n, int weight);

/// Same term by the parity case split: +i^w * (1 + i^n) for even w and
/// -i^w * (1 + i^n) for odd w. Kept as a second route so the two can be
/// asserted equal.
GaussianInt residual_correction_split(int n, int weight);

/// Amplitude a solution state |y> receives from the Hadamard transform of
/// the non-solution branch: the full sum minus the two excluded terms,
/// i.e. closed_form_sum(n, w) - residual_correction(n, w).
GaussianInt residual_amplitude(int n, int weight);

/// One row of the unnormalized amplitude table for |z>.
UnnormalizedAmplitude table_row(int n, BitString z);

}  // namespace hsh
