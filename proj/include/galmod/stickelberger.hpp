// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "galmod/finite_field.hpp"
#include "galmod/rational.hpp"

namespace galmod {

// Residue field F_q with tame index e_t | q-1 and wild index e_w a power of p.
struct TameLocalDatum {
  PrimePower prime_power;
  std::uint64_t e_t = 1;
  std::uint64_t e_w = 1;

  static TameLocalDatum make(const PrimePower& pp, std::uint64_t e_t, std::uint64_t e_w = 1);
};

// Sorted multiset of fractional parts.
struct FracTuple {
  std::vector<Rational> entries;
  bool operator==(const FracTuple& o) const { return entries == o.entries; }
};

FracTuple s_tuple(const TameLocalDatum& datum, std::int64_t d);
// {{c p^i / (q-1)} : i < r}
FracTuple c_tuple(const PrimePower& pp, std::uint64_t c);

std::uint64_t composition_exponent(const TameLocalDatum& datum);
// Same residue computed with a caller-chosen N (e_w | q^N required).
std::uint64_t composition_exponent_with(const TameLocalDatum& datum, unsigned N);

std::uint64_t c_from_d(const TameLocalDatum& datum, std::int64_t d);
// Inverse of c_from_d on its image; domain error off the image.
std::uint64_t d_from_c(const TameLocalDatum& datum, std::uint64_t c);

Rational stickelberger_valuation(const TameLocalDatum& datum, std::int64_t d);
Rational digit_sum_valuation(const PrimePower& pp, std::uint64_t c);

}  // namespace galmod
