// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#include "galmod/numtheory.hpp"

#include <numeric>
#include <stdexcept>

#include "galmod/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace galmod {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace nt {

namespace {
using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}
}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> lo, hi;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    lo.push_back(d);
    if (d != n / d) hi.push_back(n / d);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t b, unsigned e,
                                         std::uint64_t limit) {
  std::uint64_t acc = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (b != 0 && acc > limit / b) return std::nullopt;
    acc *= b;
  }
  if (acc > limit) return std::nullopt;
  return acc;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t acc = 1;
  b %= m;
  while (e) {
    if (e & 1) acc = mul_mod(acc, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return acc;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
  while (nr) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::domain_error("inv_mod: not invertible");
  return mod(t, m);
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t out = n;
  for (auto l : prime_factors(n)) out = out / l * (l - 1);
  return out;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t out = 1;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  unsigned v = 0;
  while (n && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::uint64_t crt(std::uint64_t a, std::uint64_t m1, std::uint64_t b,
                  std::uint64_t m2) {
  if (m1 == 1) return b % m2;
  if (m2 == 1) return a % m1;
  // x = a + m1 * k, m1 * k = b - a mod m2
  std::uint64_t diff = mod(static_cast<std::int64_t>(b % m2) -
                               static_cast<std::int64_t>(a % m2),
                           m2);
  std::uint64_t k = mul_mod(diff, inv_mod(m1 % m2, m2), m2);
  return (a % m1) + m1 * k;
}

std::uint64_t mult_order(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 1;
  std::uint64_t ord = euler_phi(m);
  for (auto l : prime_factors(ord))
    while (ord % l == 0 && pow_mod(a, ord / l, m) == 1) ord /= l;
  return ord;
}

}  // namespace nt
}  // namespace galmod
