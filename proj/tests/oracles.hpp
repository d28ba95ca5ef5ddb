// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
//
// Reference computations used only by tests.  Each one takes a route that
// differs from the library path it checks.
#pragma once

#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

#include "galmod/cover.hpp"
#include "galmod/euler_char.hpp"
#include "galmod/finite_field.hpp"
#include "galmod/rational.hpp"

namespace galmod::oracle {

// Genus from the Hilbert different of a weakly ramified cover: each point
// above q contributes (e - 1) + (e_w - 1), and there are deg(q) |G| / e of
// them on the geometric curve.
inline std::int64_t genus_hilbert(const CoverDatum& c) {
  const std::int64_t n = static_cast<std::int64_t>(c.group.order());
  std::int64_t R = 0;
  for (const auto& pl : c.places) {
    const std::int64_t e = static_cast<std::int64_t>(pl.e_t) * pl.e_w;
    R += static_cast<std::int64_t>(pl.degree) * (n / e) * ((e - 1) + (pl.e_w - 1));
  }
  const std::int64_t r = c.r;
  return (n * r * (2 * c.g_base - 2) + R) / (2 * r) + 1;
}

// Non-equivariant Euler characteristic of O(D) on the geometric curve:
// deg D + r (1 - g_X), computed from the Hilbert genus.
inline Rational riemann_roch_total(const CoverDatum& c, const DivisorSpec& D) {
  const std::int64_t n = static_cast<std::int64_t>(c.group.order());
  std::int64_t deg = 0;
  for (std::size_t i = 0; i < c.places.size(); ++i) {
    const auto& pl = c.places[i];
    const std::int64_t points = static_cast<std::int64_t>(pl.degree) * n / (pl.e_t * pl.e_w);
    deg += points * D.value(i);
  }
  for (const auto& [d, v] : D.unramified) deg += static_cast<std::int64_t>(d) * n * v;
  return Rational(static_cast<long>(deg + static_cast<std::int64_t>(c.r) * (1 - genus_hilbert(c))));
}

// Smallest d >= 0 with (omega|_I)^d = chi_{p'}|_I, by evaluating both
// characters on the elements of the inertia group.
inline std::uint32_t tame_index_by_evaluation(const CoverDatum& c, const PlaceDatum& pl,
                                              std::size_t chi) {
  const auto& g = c.group;
  const std::size_t target = g.p_prime_part(chi, c.p);
  const std::uint64_t N = g.exponent();
  for (std::uint32_t d = 0; d < pl.e_t; ++d) {
    bool ok = true;
    for (auto x : pl.inertia.elements())
      if ((g.phase(pl.cotangent, x) * d) % N != g.phase(target, x) % N) {
        ok = false;
        break;
      }
    if (ok) return d;
  }
  return UINT32_MAX;
}

// Composition multiplicity of the prime-to-p character theta in
// chi(G, X, O_X), computed on Z = X / G_{p'}: the theta-eigensheaf of the
// tame G_{p'}-cover X -> Z is a line bundle on Z of degree
// -sum over branch points of {d(theta) p^i / e_t}, and Z -> Y is a weakly
// ramified G_p-cover whose genus follows from Riemann-Hurwitz.
inline Rational weak_rhs_by_quotient(const CoverDatum& c, std::size_t theta) {
  const std::int64_t gp = static_cast<std::int64_t>(c.group.sylow_order(c.p));
  const std::int64_t r = c.r;
  std::int64_t R = 0;
  for (const auto& pl : c.places)
    if (pl.e_w > 1) R += static_cast<std::int64_t>(pl.degree) * (gp / pl.e_w) * 2 * (pl.e_w - 1);
  const std::int64_t two_gz_minus_2 = (gp * r * (2 * c.g_base - 2) + R) / r;
  const Rational gZ = make_rational(two_gz_minus_2 + 2, 2);
  Rational deg = 0;
  const std::uint64_t Q = c.base_field_size();
  for (const auto& pl : c.places) {
    if (pl.e_t == 1) continue;
    const std::uint64_t d = tame_index_by_evaluation(c, pl, theta);
    std::uint64_t x = d % pl.e_t;
    Rational s = 0;
    for (std::uint32_t i = 0; i < pl.degree; ++i) {
      s += make_rational(static_cast<std::int64_t>(x), pl.e_t);
      x = x * Q % pl.e_t;
    }
    deg -= s * make_rational(gp, pl.e_w);
  }
  return deg + Rational(static_cast<long>(r)) * (1 - gZ);
}

// tau(chi_c) as a complex number by direct summation.
inline std::complex<double> gauss_sum_complex(const FieldContext& ctx, std::uint64_t c) {
  const double pi = 3.14159265358979323846;
  const std::uint64_t n = ctx.q() - 1;
  std::complex<double> acc = 0;
  for (std::uint32_t x = 1; x < ctx.q(); ++x) {
    const std::uint64_t k = ctx.log_table()[x];
    const double a = -2 * pi * static_cast<double>((c * k) % n) / static_cast<double>(n) +
                     2 * pi * static_cast<double>(ctx.trace_table()[x]) / ctx.p();
    acc += std::polar(1.0, a);
  }
  return acc;
}

// Base-p digit sum of c divided by p - 1, computed on the q - 1 cycle
// sum_i {c p^i / (q - 1)}.
inline Rational fractional_orbit_sum(std::uint32_t p, std::uint32_t r, std::uint64_t c) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < r; ++i) q *= p;
  const std::uint64_t n = q - 1;
  Rational s = 0;
  std::uint64_t x = c % n;
  for (std::uint32_t i = 0; i < r; ++i) {
    s += make_rational(static_cast<std::int64_t>(x), static_cast<std::int64_t>(n));
    x = x * p % n;
  }
  return s;
}

}  // namespace galmod::oracle
