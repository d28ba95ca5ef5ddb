// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace galmod::fp {

// Dense polynomial over F_p, coefficients low to high, no trailing zeros.
// The zero polynomial is the empty vector.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& f);
int degree(const Poly& f);  // -1 for zero
Poly add(const Poly& a, const Poly& b, std::uint32_t p);
Poly sub(const Poly& a, const Poly& b, std::uint32_t p);
Poly mul(const Poly& a, const Poly& b, std::uint32_t p);
Poly scale(const Poly& a, std::uint32_t c, std::uint32_t p);
// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint32_t p);
Poly rem(const Poly& a, const Poly& b, std::uint32_t p);
Poly gcd(Poly a, Poly b, std::uint32_t p);  // monic
Poly make_monic(const Poly& a, std::uint32_t p);
Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p);

bool is_irreducible(const Poly& f, std::uint32_t p);

// Factorization of a nonzero polynomial into monic irreducibles by trial
// division, smallest factors first.  The leading constant is dropped.
std::vector<std::pair<Poly, unsigned>> factor(const Poly& f, std::uint32_t p);

// Integer encoding sum c_i p^i of the low `len` coefficients.
std::uint64_t encode(const Poly& f, std::uint32_t p, std::size_t len);

// "x^2+4x+1" style rendering with coefficients in [0, p).
std::string render(const Poly& f);

}  // namespace galmod::fp
