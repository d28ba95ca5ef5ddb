// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "galmod/polyfp.hpp"

namespace galmod {

struct PrimePower {
  std::uint32_t p = 2;
  std::uint32_t r = 1;
  std::uint64_t q = 2;

  // Validates primality of p and r >= 1; q must fit in 64 bits.
  static PrimePower make(std::uint64_t p, unsigned r);
};

// Polynomial residue c_0 + c_1 x + ... + c_{r-1} x^{r-1} modulo the field
// modulus.  Always exactly r coefficients in [0, p).
struct FqElem {
  std::vector<std::uint32_t> coeffs;
  bool operator==(const FqElem&) const = default;
};

// F_q with the smallest monic irreducible modulus of degree r (ordered by
// the integer sum c_i p^i of its non-leading coefficients) and the smallest
// primitive element under the same encoding.  Elements are also addressed by
// that integer encoding ("packed" form, 0 <= packed < q).
class FieldContext {
 public:
  FieldContext(std::uint32_t p, unsigned r);

  const PrimePower& prime_power() const { return pp_; }
  std::uint32_t p() const { return pp_.p; }
  std::uint32_t r() const { return pp_.r; }
  std::uint64_t q() const { return pp_.q; }
  const fp::Poly& modulus() const { return modulus_; }
  const FqElem& generator() const { return generator_; }

  FqElem zero() const;
  FqElem one() const;
  FqElem from_int(std::int64_t a) const;

  std::uint32_t pack(const FqElem& x) const;
  FqElem unpack(std::uint32_t packed) const;

  FqElem add(const FqElem& a, const FqElem& b) const;
  FqElem sub(const FqElem& a, const FqElem& b) const;
  FqElem neg(const FqElem& a) const;
  FqElem mul(const FqElem& a, const FqElem& b) const;
  FqElem pow(const FqElem& a, std::uint64_t e) const;
  FqElem inv(const FqElem& a) const;
  FqElem frobenius(const FqElem& a) const { return pow(a, pp_.p); }

  // Absolute trace to F_p.
  std::uint32_t trace(const FqElem& x) const;
  // Discrete log to base generator(); x != 0.
  std::uint64_t dlog(const FqElem& x) const;
  FqElem gen_pow(std::uint64_t k) const;

  // Packed tables.  exp_table()[k] = generator^k for k < q-1;
  // log_table()[x] for packed x != 0; trace_table()[x] for every packed x.
  const std::vector<std::uint32_t>& exp_table() const { return exp_; }
  const std::vector<std::uint32_t>& log_table() const { return log_; }
  const std::vector<std::uint32_t>& trace_table() const { return trace_; }

  // Slow reference trace, sum of x^{p^i}; used to cross-check the table.
  std::uint32_t trace_by_frobenius(const FqElem& x) const;

 private:
  FqElem mul_poly(const FqElem& a, const FqElem& b) const;

  PrimePower pp_;
  fp::Poly modulus_;
  FqElem generator_;
  std::vector<std::uint32_t> exp_, log_, trace_;
};

FieldContext make_field(std::uint64_t p, unsigned r);

// Memoized, shared, immutable contexts.
std::shared_ptr<const FieldContext> field_context(std::uint64_t p, unsigned r);

std::uint32_t trace(const FieldContext& ctx, const FqElem& x);
std::uint64_t dlog(const FieldContext& ctx, const FqElem& x);

}  // namespace galmod
