// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace galmod::nt {

bool is_prime(std::uint64_t n);

// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);

// b^e, or nullopt if the result exceeds limit.
std::optional<std::uint64_t> checked_pow(std::uint64_t b, unsigned e,
                                         std::uint64_t limit = UINT64_MAX);

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m);

// Inverse of a mod m; requires gcd(a, m) == 1.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

// Nonnegative residue of a mod m.
inline std::uint64_t mod(std::int64_t a, std::uint64_t m) {
  std::int64_t r = a % static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

std::uint64_t euler_phi(std::uint64_t n);

// Largest power of p dividing n, and the exponent.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
unsigned valuation(std::uint64_t n, std::uint64_t p);

bool is_power_of(std::uint64_t n, std::uint64_t p);

// x with x = a mod m1 and x = b mod m2, for coprime m1, m2.
std::uint64_t crt(std::uint64_t a, std::uint64_t m1, std::uint64_t b,
                  std::uint64_t m2);

// Multiplicative order of a modulo m (gcd(a, m) == 1).
std::uint64_t mult_order(std::uint64_t a, std::uint64_t m);

}  // namespace galmod::nt
