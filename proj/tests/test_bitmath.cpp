// Copyright 2026 The hshsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "hsh/bitmath.hpp"

#include <random>
#include <stdexcept>

#include <doctest.h>

namespace hsh {
namespace {

TEST_CASE("BitString validates width and value") {
  CHECK_THROWS_AS(BitString(0, -1), std::invalid_argument);
  CHECK_THROWS_AS(BitString(0, 63), std::invalid_argument);
  CHECK_THROWS_AS(BitString(4, 2), std::invalid_argument);
  CHECK_NOTHROW(BitString(3, 2));
  CHECK_NOTHROW(BitString(0, 0));
}

TEST_CASE("BitString bit access and rendering") {
  const BitString x(0b00110, 5);
  CHECK(x.bit(1));
  CHECK(x.bit(2));
  CHECK_FALSE(x.bit(0));
  CHECK_FALSE(x.bit(4));
  CHECK(x.binary() == "00110");
  CHECK(BitString(0, 3).binary() == "000");
  CHECK(BitString(7, 3).binary() == "111");
}

TEST_CASE("BitString complement flips every bit inside the width") {
  const BitString x(0b1010, 4);
  CHECK(x.complement() == BitString(0b0101, 4));
  CHECK(x.complement().complement() == x);
  CHECK(BitString(0, 6).complement() == BitString(0b111111, 6));
}

TEST_CASE("hamming_weight and dot_mod2") {
  CHECK(hamming_weight(BitString(0, 4)) == 0);
  CHECK(hamming_weight(BitString(0b1011, 4)) == 3);
  CHECK(dot_mod2(BitString(0b101, 3), BitString(0b100, 3)) == 1);
  CHECK(dot_mod2(BitString(0b101, 3), BitString(0b101, 3)) == 0);
  CHECK_THROWS_AS(dot_mod2(BitString(0, 3), BitString(0, 4)),
                  std::invalid_argument);
}

TEST_CASE("low_bits drops the most significant bits") {
  const BitString z(0b10110, 5);
  CHECK(low_bits(z, 0) == z);
  CHECK(low_bits(z, 1) == BitString(0b0110, 4));
  CHECK(low_bits(z, 4) == BitString(0, 1));
  CHECK(low_bits(z, 5) == BitString(0, 0));
  CHECK_THROWS_AS(low_bits(z, 6), std::invalid_argument);
  CHECK_THROWS_AS(low_bits(z, -1), std::invalid_argument);
}

TEST_CASE("GaussianInt ring operations") {
  const GaussianInt a{3, -2};
  const GaussianInt b{-1, 4};
  CHECK(a + b == GaussianInt{2, 2});
  CHECK(a - b == GaussianInt{4, -6});
  CHECK(-a == GaussianInt{-3, 2});
  CHECK(a * b == GaussianInt{5, 14});
  CHECK(a * GaussianInt{1, 0} == a);
  CHECK(a.norm_sq() == 13);

  GaussianInt acc{1, 1};
  acc += GaussianInt{2, -3};
  CHECK(acc == GaussianInt{3, -2});
}

TEST_CASE("GaussianInt ring axioms hold on random values") {
  std::mt19937_64 rng(20260814);
  std::uniform_int_distribution<std::int64_t> pick(-1000, 1000);
  for (int trial = 0; trial < 200; ++trial) {
    const GaussianInt a{pick(rng), pick(rng)};
    const GaussianInt b{pick(rng), pick(rng)};
    const GaussianInt c{pick(rng), pick(rng)};
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).norm_sq() == a.norm_sq() * b.norm_sq());
    CHECK(a.times_i() == a * GaussianInt{0, 1});
  }
}

TEST_CASE("GaussianInt renders exactly like hand-written complex integers") {
  CHECK(GaussianInt{0, 0}.str() == "0");
  CHECK(GaussianInt{1, 0}.str() == "1");
  CHECK(GaussianInt{-1, 0}.str() == "-1");
  CHECK(GaussianInt{0, 1}.str() == "i");
  CHECK(GaussianInt{0, -1}.str() == "-i");
  CHECK(GaussianInt{0, 4}.str() == "4i");
  CHECK(GaussianInt{0, -4}.str() == "-4i");
  CHECK(GaussianInt{2, -2}.str() == "2-2i");
  CHECK(GaussianInt{-2, 2}.str() == "-2+2i");
  CHECK(GaussianInt{1, 1}.str() == "1+i");
  CHECK(GaussianInt{-1, -1}.str() == "-1-i");
  CHECK(GaussianInt{3, 1}.str() == "3+i");
}

TEST_CASE("i_pow cycles with period four over any signed exponent") {
  CHECK(i_pow(0) == GaussianInt{1, 0});
  CHECK(i_pow(1) == GaussianInt{0, 1});
  CHECK(i_pow(2) == GaussianInt{-1, 0});
  CHECK(i_pow(3) == GaussianInt{0, -1});
  for (std::int64_t k = -9; k <= 9; ++k) {
    CHECK(i_pow(k + 4) == i_pow(k));
    CHECK(i_pow(k + 1) == i_pow(k).times_i());
    CHECK((i_pow(k) * i_pow(-k)) == GaussianInt{1, 0});
  }
}

TEST_CASE("two's complement encode/decode round-trips the representable range") {
  for (int m = 1; m <= 8; ++m) {
    const std::int64_t lo = -(std::int64_t{1} << (m - 1));
    const std::int64_t hi = (std::int64_t{1} << (m - 1)) - 1;
    for (std::int64_t v = lo; v <= hi; ++v) {
      const BitString pattern = twos_complement_encode(v, m);
      CHECK(pattern.width == m);
      CHECK(twos_complement_decode(pattern) == v);
    }
  }
}

TEST_CASE("two's complement encoding wraps mod 2^m") {
  for (int m = 1; m <= 8; ++m) {
    const std::int64_t period = std::int64_t{1} << m;
    for (std::int64_t v = -40; v <= 40; ++v) {
      CHECK(twos_complement_encode(v, m) ==
            twos_complement_encode(v + period, m));
    }
  }
  CHECK(twos_complement_encode(-3, 3) == BitString(0b101, 3));
  CHECK(twos_complement_encode(3, 3) == BitString(0b011, 3));
  CHECK_THROWS_AS(twos_complement_encode(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(twos_complement_decode(BitString(0, 0)),
                  std::invalid_argument);
}

}  // namespace
}  // namespace hsh
