// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "galmod/finite_field.hpp"
#include "galmod/parallel.hpp"
#include "galmod/rational.hpp"

namespace galmod {

// (Z/p^M)[x] / (F), F the integer lift (coefficients in [0, p)) of the
// field modulus.  F is monic and reduces to the field modulus, so this is
// the truncated unramified extension W(F_q)/p^M.
class WittRing {
 public:
  using Elem = std::vector<std::uint64_t>;  // r coefficients mod p^M

  WittRing(std::shared_ptr<const FieldContext> ctx, unsigned M);

  const FieldContext& field() const { return *ctx_; }
  unsigned precision() const { return M_; }
  std::uint64_t modulus_pm() const { return pm_; }
  unsigned degree() const { return r_; }

  Elem zero() const { return Elem(r_, 0); }
  Elem one() const;
  Elem from_int(std::int64_t a) const;
  Elem lift(const FqElem& x) const;
  FqElem reduce(const Elem& a) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem scale(const Elem& a, std::uint64_t c) const;
  Elem pow(Elem a, std::uint64_t e) const;

  // min over coefficients of v_p; M when a == 0 mod p^M.
  unsigned valuation(const Elem& a) const;

 private:
  std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) const;

  std::shared_ptr<const FieldContext> ctx_;
  unsigned M_, r_;
  std::uint64_t p_, pm_;
  std::vector<std::uint64_t> lifted_modulus_;  // r+1 entries, monic
};

struct WittApprox {
  unsigned precision = 0;
  WittRing::Elem value;
};

// omega with omega^{q-1} = 1 and omega = x mod p, by iterating y -> y^q.
WittApprox teichmuller(const FieldContext& ctx, const FqElem& x, unsigned M);

// W[lambda] / E(lambda), E the Eisenstein polynomial Phi_p(1 + lambda) of
// degree p-1.  Elements are p-1 coefficients in the lambda power basis.
class RamifiedRing {
 public:
  using Elem = std::vector<WittRing::Elem>;

  explicit RamifiedRing(const WittRing& base);

  const WittRing& base() const { return base_; }
  unsigned width() const { return w_; }

  Elem zero() const;
  Elem from_base(const WittRing::Elem& a) const;
  Elem lambda() const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;

  // Reduce a lambda-polynomial of any length to width p-1.
  Elem reduce(std::vector<WittRing::Elem> poly) const;

  // lambda-adic valuation min_j (j + (p-1) v_p(a_j)); nullopt if a == 0 at
  // this precision.
  std::optional<unsigned> lambda_valuation(const Elem& a) const;

 private:
  const WittRing& base_;
  unsigned w_;
  // lambda^{p-1} = sum_j tail_[j] lambda^j, j < p-1.
  std::vector<std::uint64_t> tail_;
};

struct RamifiedElem {
  unsigned lambda_precision = 0;
  RamifiedRing::Elem value;
};

// Default lambda precision r(p-1)+2.
unsigned default_lambda_precision(const FieldContext& ctx);

// Shared state for many valuations over one field: the ring at the precision
// needed for lambda-precision N and the Teichmueller powers T^k, T = [g].
class PadicGaussEngine {
 public:
  PadicGaussEngine(std::shared_ptr<const FieldContext> ctx, unsigned N);

  unsigned lambda_precision() const { return N_; }
  const WittRing& ring() const { return *ring_; }

  // tau(chi_c) inside the ramified ring.
  RamifiedElem gauss_sum(std::uint64_t c) const;
  // v_p(tau(chi_c)) as k/(p-1); throws PrecisionError if k >= N.
  Rational valuation(std::uint64_t c) const;

 private:
  std::shared_ptr<const FieldContext> ctx_;
  unsigned N_;
  std::unique_ptr<WittRing> ring_;
  std::unique_ptr<RamifiedRing> ram_;
  std::vector<WittRing::Elem> teich_pow_;
  // p-adic binomials C(p, k) mod p^M for the Eisenstein relation are in ram_.
};

Rational padic_gauss_valuation(const FieldContext& ctx, std::uint64_t c,
                               std::optional<unsigned> N = std::nullopt);

// All q-1 valuations; index c of the result is character c.
std::vector<Rational> padic_valuation_sweep(const FieldContext& ctx, Exec exec,
                                            std::optional<unsigned> N = std::nullopt);

}  // namespace galmod
