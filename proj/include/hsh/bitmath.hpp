// Copyright 2026 The hshsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Integer and bit primitives shared by the exact amplitude formulas and the
// circuit simulation: basis-index bit strings, Gaussian-integer arithmetic,
// exact powers of i, and two's-complement register encoding.
//
// Everything here fits in 64-bit signed arithmetic. The supported register
// envelope is n <= 30 qubits per transformed register: basis indices stay
// below 2^30, closed-form amplitude components below 2^16, and brute-force
// sums of 2^n unit terms below 2^31, so squared magnitudes fit comfortably
// in an int64_t. No arbitrary-precision arithmetic is needed or provided.

#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hsh {

/// A basis-state index together with its register width.
///
/// Qubit j is bit j of `value`; qubit 0 is the least significant bit, so a
/// ket written |x_{n-1} ... x_1 x_0> reads directly as the integer value.
struct BitString {
  std::uint64_t value = 0;
  int width = 0;

  constexpr BitString() = default;

  BitString(std::uint64_t value_, int width_) : value(value_), width(width_) {
    if (width_ < 0 || width_ > 62) {
      throw std::invalid_argument("BitString width out of range: " +
                                  std::to_string(width_));
    }
    if ((value_ >> width_) != 0) {
      throw std::invalid_argument("BitString value does not fit in " +
                                  std::to_string(width_) + " bits");
    }
  }

  bool bit(int j) const { return (value >> j) & 1u; }

  BitString complement() const {
    return BitString(~value & mask(width), width);
  }

  /// MSB-first binary rendering, exactly `width` characters.
  std::string binary() const {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int j = 0; j < width; ++j) {
      if (bit(j)) s[static_cast<std::size_t>(width - 1 - j)] = '1';
    }
    return s;
  }

  static constexpr std::uint64_t mask(int w) {
    return (std::uint64_t{1} << w) - 1;
  }

  friend bool operator==(const BitString&, const BitString&) = default;
};

/// Exact complex integer a + b*i. Closed under +, -, *, negation and
/// multiplication by i; equality is exact.
struct GaussianInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  friend constexpr GaussianInt operator+(GaussianInt a, GaussianInt b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend constexpr GaussianInt operator-(GaussianInt a, GaussianInt b) {
    return {a.re - b.re, a.im - b.im};
  }
  constexpr GaussianInt operator-() const { return {-re, -im}; }
  friend constexpr GaussianInt operator*(GaussianInt a, GaussianInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  constexpr GaussianInt& operator+=(GaussianInt o) {
    re += o.re;
    im += o.im;
    return *this;
  }

  /// Exact multiplication by i: (a, b) -> (-b, a).
  constexpr GaussianInt times_i() const { return {-im, re}; }

  constexpr std::int64_t norm_sq() const { return re * re + im * im; }

  std::complex<double> to_complex() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }

  /// Renders like "0", "1", "-i", "4i", "2-2i", "-2+2i".
  std::string str() const {
    if (re == 0 && im == 0) return "0";
    std::string s;
    if (re != 0) s += std::to_string(re);
    if (im != 0) {
      if (im == 1) {
        s += s.empty() ? "i" : "+i";
      } else if (im == -1) {
        s += "-i";
      } else {
        if (im > 0 && !s.empty()) s += "+";
        s += std::to_string(im) + "i";
      }
    }
    return s;
  }

  friend constexpr bool operator==(const GaussianInt&, const GaussianInt&) =
      default;
};

/// Number of set bits of x.
inline int hamming_weight(BitString x) { return std::popcount(x.value); }

/// Bitwise dot product mod 2. Widths must match.
inline int dot_mod2(BitString z, BitString x) {
  if (z.width != x.width) {
    throw std::invalid_argument("dot_mod2: width mismatch (" +
                                std::to_string(z.width) + " vs " +
                                std::to_string(x.width) + ")");
  }
  return std::popcount(z.value & x.value) & 1;
}

/// Drops the k most significant bits, keeping the width-k least significant
/// ones. k = 0 is the identity.
inline BitString low_bits(BitString z, int k) {
  if (k < 0 || k > z.width) {
    throw std::invalid_argument("low_bits: k out of range");
  }
  const int w = z.width - k;
  return BitString(z.value & BitString::mask(w), w);
}

/// i^k for any signed exponent, reduced mod 4.
constexpr GaussianInt i_pow(std::int64_t k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return {1, 0};
    case 1:
      return {0, 1};
    case 2:
      return {-1, 0};
    default:
      return {0, -1};
  }
}

/// v mod 2^m as an m-bit pattern. Modular by construction: any signed v is
/// accepted and wraps. Patterns >= 2^(m-1) decode back to negative values.
inline BitString twos_complement_encode(std::int64_t v, int m) {
  if (m < 1 || m > 62) {
    throw std::invalid_argument("twos_complement_encode: width out of range");
  }
  return BitString(static_cast<std::uint64_t>(v) & BitString::mask(m), m);
}

/// Inverse of twos_complement_encode on the representable range
/// [-2^(m-1), 2^(m-1)).
inline std::int64_t twos_complement_decode(BitString b) {
  if (b.width < 1) {
    throw std::invalid_argument("twos_complement_decode: empty pattern");
  }
  const auto v = static_cast<std::int64_t>(b.value);
  return b.bit(b.width - 1) ? v - (std::int64_t{1} << b.width) : v;
}

}  // namespace hsh
