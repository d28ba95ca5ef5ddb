// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace galmod {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational q(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

inline Integer floor_of(const Rational& x) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

// x - floor(x), in [0, 1).
inline Rational frac(const Rational& x) { return x - Rational(floor_of(x)); }

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

// "a/b", or "a" when the denominator is 1.
inline std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace galmod
