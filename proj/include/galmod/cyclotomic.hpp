// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "galmod/finite_field.hpp"
#include "galmod/parallel.hpp"

namespace galmod {

// Coefficients of the m-th cyclotomic polynomial, low to high (memoized).
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t m);

// Element of Z[zeta_m] in the power basis 1, zeta, ..., zeta^{phi(m)-1}.
class CyclotomicInt {
 public:
  explicit CyclotomicInt(std::uint32_t m = 1);

  static CyclotomicInt constant(std::uint32_t m, long value);
  static CyclotomicInt zeta(std::uint32_t m, std::int64_t k);
  // sum_k counts[k] zeta^k for a vector of length m.
  static CyclotomicInt from_exponent_counts(std::uint32_t m,
                                            const std::vector<std::int64_t>& counts);

  std::uint32_t order() const { return m_; }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  bool is_zero() const;

  bool operator==(const CyclotomicInt& o) const { return m_ == o.m_ && c_ == o.c_; }
  bool operator!=(const CyclotomicInt& o) const { return !(*this == o); }

  CyclotomicInt operator+(const CyclotomicInt& o) const;
  CyclotomicInt operator-(const CyclotomicInt& o) const;
  CyclotomicInt operator-() const;
  CyclotomicInt operator*(const CyclotomicInt& o) const;

  // zeta_m -> zeta_m^t; gcd(t, m) must be 1.
  CyclotomicInt twist(std::int64_t t) const;
  // Image in Z[zeta_M] for m | M.
  CyclotomicInt embed(std::uint32_t M) const;

  std::string to_string() const;

 private:
  std::uint32_t m_;
  std::vector<mpz_class> c_;
};

CyclotomicInt cyc_add(const CyclotomicInt& a, const CyclotomicInt& b);
CyclotomicInt cyc_mul(const CyclotomicInt& a, const CyclotomicInt& b);
CyclotomicInt cyc_twist(const CyclotomicInt& a, std::int64_t t);

// chi(x) = zeta_{q-1}^{index * dlog x}.
struct MultChar {
  std::shared_ptr<const FieldContext> ctx;
  std::uint64_t index = 0;

  MultChar(std::shared_ptr<const FieldContext> c, std::int64_t idx);
};

std::uint32_t gauss_order(const FieldContext& ctx);

// Exponent histogram of the Gauss sum over x^m - 1: counts[k] is the number
// of x in F_q^* whose summand is zeta_m^k.
std::vector<std::int64_t> gauss_exponent_counts_serial(const FieldContext& ctx,
                                                       std::uint64_t c);
std::vector<std::int64_t> gauss_exponent_counts_parallel(const FieldContext& ctx,
                                                         std::uint64_t c);

// tau(chi) = sum_{x != 0} chi(x)^{-1} zeta_p^{Tr x} in Z[zeta_m], m = lcm(p, q-1).
CyclotomicInt gauss_sum(const FieldContext& ctx, const MultChar& chi,
                        Exec exec = Exec::Serial);
CyclotomicInt gauss_sum(const FieldContext& ctx, std::uint64_t c,
                        Exec exec = Exec::Serial);

// Twist acting on the zeta_{q-1} part only (zeta_{q-1} -> zeta_{q-1}^t,
// zeta_p fixed), for an element of Z[zeta_{lcm(p, q-1)}].
CyclotomicInt twist_mult_part(const CyclotomicInt& z, const FieldContext& ctx,
                              std::int64_t t);

// chi(-1) * q as an element of Z[zeta_m].
CyclotomicInt gauss_product_target(const FieldContext& ctx, std::uint64_t c);

// Coordinates of sum_k counts[k] zeta_m^k (counts of length m) in the
// Z-basis prod_i zeta_{n_i}^{a_i}, 0 <= a_i < phi(n_i), where m = prod n_i
// is the prime-power factorization.  Exact; costs O(m) per prime of m, so
// it scales to orders where power-basis products do not.  Throws Capacity
// if the result might not fit in 64 bits.
std::vector<std::int64_t> crt_basis_coordinates(std::uint32_t m,
                                                const std::vector<std::int64_t>& counts);

// tau(chi_c) * sigma_{-1}(tau(chi_c)) == chi_c(-1) q, decided exactly by
// convolving exponent histograms in Z[C_m] and testing the difference for
// zero with crt_basis_coordinates.  Agrees with the CyclotomicInt product.
bool gauss_product_identity(const FieldContext& ctx, std::uint64_t c, Exec exec = Exec::Serial);

// |z|^2 under zeta_m -> exp(2 pi i / m).  Floating point; not exact.
double complex_abs2(const CyclotomicInt& z);

}  // namespace galmod
