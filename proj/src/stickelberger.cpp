// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#include "galmod/stickelberger.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "galmod/error.hpp"
#include "galmod/numtheory.hpp"

namespace galmod {

TameLocalDatum TameLocalDatum::make(const PrimePower& pp, std::uint64_t e_t, std::uint64_t e_w) {
  if (e_t == 0 || (pp.q - 1) % e_t != 0)
    fail(ErrorKind::Domain, "e_t must divide q-1");
  if (!nt::is_power_of(e_w, pp.p)) fail(ErrorKind::Domain, "e_w must be a power of p");
  TameLocalDatum d;
  d.prime_power = pp;
  d.e_t = e_t;
  d.e_w = e_w;
  return d;
}

FracTuple s_tuple(const TameLocalDatum& datum, std::int64_t d) {
  const auto& pp = datum.prime_power;
  FracTuple t;
  std::uint64_t x = nt::mod(d, datum.e_t);
  for (unsigned i = 0; i < pp.r; ++i) {
    t.entries.push_back(make_rational(static_cast<std::int64_t>(x),
                                      static_cast<std::int64_t>(datum.e_t)));
    x = x * pp.p % datum.e_t;
  }
  std::sort(t.entries.begin(), t.entries.end());
  return t;
}

FracTuple c_tuple(const PrimePower& pp, std::uint64_t c) {
  const std::uint64_t n = pp.q - 1;
  FracTuple t;
  std::uint64_t x = c % n;
  for (unsigned i = 0; i < pp.r; ++i) {
    t.entries.push_back(make_rational(static_cast<std::int64_t>(x), static_cast<std::int64_t>(n)));
    x = x * pp.p % n;
  }
  std::sort(t.entries.begin(), t.entries.end());
  return t;
}

std::uint64_t composition_exponent_with(const TameLocalDatum& datum, unsigned N) {
  const auto& pp = datum.prime_power;
  const std::uint64_t n = pp.q - 1;
  // q^N / e_w is a power of p; reduce it mod q-1 without forming q^N.
  const unsigned vw = nt::valuation(datum.e_w, pp.p);
  if (static_cast<std::uint64_t>(N) * pp.r < vw)
    fail(ErrorKind::Domain, "e_w does not divide q^N");
  std::uint64_t ratio = nt::pow_mod(pp.p, std::uint64_t(N) * pp.r - vw, n);
  return (n / datum.e_t) % n * ratio % n;
}

std::uint64_t composition_exponent(const TameLocalDatum& datum) {
  const unsigned vw = nt::valuation(datum.e_w, datum.prime_power.p);
  const unsigned r = datum.prime_power.r;
  return composition_exponent_with(datum, (vw + r - 1) / r);
}

std::uint64_t c_from_d(const TameLocalDatum& datum, std::int64_t d) {
  const std::uint64_t n = datum.prime_power.q - 1;
  return nt::mod(d, datum.e_t) * composition_exponent(datum) % n;
}

std::uint64_t d_from_c(const TameLocalDatum& datum, std::uint64_t c) {
  const auto& pp = datum.prime_power;
  const std::uint64_t n = pp.q - 1;
  const unsigned vw = nt::valuation(datum.e_w, pp.p);
  const unsigned N = (vw + pp.r - 1) / pp.r;
  // Undo the p-power factor, then divide by (q-1)/e_t.
  std::uint64_t u = nt::pow_mod(pp.p, std::uint64_t(N) * pp.r - vw, n);
  std::uint64_t x = (c % n) * nt::inv_mod(u, n) % n;
  const std::uint64_t step = n / datum.e_t;
  if (x % step != 0)
    fail(ErrorKind::Domain, "character index " + std::to_string(c) + " is not in the image");
  return x / step;
}

Rational stickelberger_valuation(const TameLocalDatum& datum, std::int64_t d) {
  Rational acc = 0;
  for (const auto& e : s_tuple(datum, d).entries) acc += e;
  return acc;
}

Rational digit_sum_valuation(const PrimePower& pp, std::uint64_t c) {
  if (c > pp.q - 2) fail(ErrorKind::Domain, "character index out of range");
  std::uint64_t s = 0;
  for (std::uint64_t x = c; x; x /= pp.p) s += x % pp.p;
  return make_rational(static_cast<std::int64_t>(s), pp.p - 1);
}

}  // namespace galmod
