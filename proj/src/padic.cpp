// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#include "galmod/padic.hpp"

#include <algorithm>
#include <string>

#include "galmod/error.hpp"
#include "galmod/numtheory.hpp"

namespace galmod {

namespace {
using u128 = unsigned __int128;
constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;
constexpr std::uint64_t kMaxRamifiedPrime = 3000;
}  // namespace

WittRing::WittRing(std::shared_ptr<const FieldContext> ctx, unsigned M)
    : ctx_(std::move(ctx)), M_(M), r_(ctx_->r()), p_(ctx_->p()) {
  if (M < 1) fail(ErrorKind::Domain, "p-adic precision must be at least 1");
  auto pm = nt::checked_pow(p_, M, kMaxModulus);
  if (!pm) fail(ErrorKind::Capacity, "p^M does not fit the 62-bit p-adic kernel");
  pm_ = *pm;
  lifted_modulus_.assign(ctx_->modulus().begin(), ctx_->modulus().end());
}

std::uint64_t WittRing::mulmod(std::uint64_t a, std::uint64_t b) const {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % pm_);
}

WittRing::Elem WittRing::one() const { return from_int(1); }

WittRing::Elem WittRing::from_int(std::int64_t a) const {
  Elem e = zero();
  e[0] = nt::mod(a, pm_);
  return e;
}

WittRing::Elem WittRing::lift(const FqElem& x) const {
  Elem e = zero();
  for (unsigned i = 0; i < r_; ++i) e[i] = x.coeffs[i];
  return e;
}

FqElem WittRing::reduce(const Elem& a) const {
  FqElem x = ctx_->zero();
  for (unsigned i = 0; i < r_; ++i) x.coeffs[i] = static_cast<std::uint32_t>(a[i] % p_);
  return x;
}

WittRing::Elem WittRing::add(const Elem& a, const Elem& b) const {
  Elem e(r_);
  for (unsigned i = 0; i < r_; ++i) {
    std::uint64_t s = a[i] + b[i];
    e[i] = s >= pm_ ? s - pm_ : s;
  }
  return e;
}

WittRing::Elem WittRing::sub(const Elem& a, const Elem& b) const {
  Elem e(r_);
  for (unsigned i = 0; i < r_; ++i) e[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + pm_ - b[i];
  return e;
}

WittRing::Elem WittRing::scale(const Elem& a, std::uint64_t c) const {
  Elem e(r_);
  c %= pm_;
  for (unsigned i = 0; i < r_; ++i) e[i] = mulmod(a[i], c);
  return e;
}

WittRing::Elem WittRing::mul(const Elem& a, const Elem& b) const {
  std::vector<u128> acc(2 * r_ - 1, 0);
  for (unsigned i = 0; i < r_; ++i) {
    if (!a[i]) continue;
    for (unsigned j = 0; j < r_; ++j)
      acc[i + j] = (acc[i + j] + static_cast<u128>(a[i]) * b[j]) % pm_;
  }
  // x^r = -sum_{j<r} F_j x^j.
  for (unsigned i = 2 * r_ - 1; i-- > r_;) {
    u128 c = acc[i];
    if (!c) continue;
    acc[i] = 0;
    for (unsigned j = 0; j < r_; ++j) {
      if (!lifted_modulus_[j]) continue;
      u128 t = c * lifted_modulus_[j] % pm_;
      acc[i - r_ + j] = (acc[i - r_ + j] + pm_ - t) % pm_;
    }
  }
  Elem e(r_);
  for (unsigned i = 0; i < r_; ++i) e[i] = static_cast<std::uint64_t>(acc[i]);
  return e;
}

WittRing::Elem WittRing::pow(Elem a, std::uint64_t e) const {
  Elem acc = one();
  while (e) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

unsigned WittRing::valuation(const Elem& a) const {
  unsigned v = M_;
  for (auto c : a)
    if (c) v = std::min(v, nt::valuation(c, p_));
  return v;
}

WittApprox teichmuller(const FieldContext& ctx, const FqElem& x, unsigned M) {
  if (ctx.pack(x) == 0) fail(ErrorKind::Domain, "Teichmueller lift of zero");
  WittRing ring(field_context(ctx.p(), ctx.r()), M);
  WittRing::Elem y = ring.lift(x);
  // Each step y -> y^q gains one p-adic digit.
  for (unsigned i = 0; i < M; ++i) y = ring.pow(y, ctx.q());
  return WittApprox{M, y};
}

RamifiedRing::RamifiedRing(const WittRing& base) : base_(base), w_(base.field().p() - 1) {
  const std::uint64_t p = base.field().p(), pm = base.modulus_pm();
  tail_.assign(w_, 0);
  // C(p, k) mod p^M, k = 1..p-1, then lambda^{p-1} = -sum C(p,k) lambda^{k-1}.
  std::uint64_t binom = 1;
  for (std::uint64_t k = 1; k < p; ++k) {
    u128 t = static_cast<u128>(binom) * ((p - k + 1) % pm) % pm;
    binom = static_cast<std::uint64_t>(t * nt::inv_mod(k % pm, pm) % pm);
    tail_[k - 1] = (pm - binom) % pm;
  }
}

RamifiedRing::Elem RamifiedRing::zero() const { return Elem(w_, base_.zero()); }

RamifiedRing::Elem RamifiedRing::from_base(const WittRing::Elem& a) const {
  Elem e = zero();
  e[0] = a;
  return e;
}

RamifiedRing::Elem RamifiedRing::lambda() const {
  std::vector<WittRing::Elem> poly(2, base_.zero());
  poly[1] = base_.one();
  return reduce(std::move(poly));
}

RamifiedRing::Elem RamifiedRing::add(const Elem& a, const Elem& b) const {
  Elem e(w_);
  for (unsigned i = 0; i < w_; ++i) e[i] = base_.add(a[i], b[i]);
  return e;
}

RamifiedRing::Elem RamifiedRing::reduce(std::vector<WittRing::Elem> poly) const {
  if (poly.size() < w_) poly.resize(w_, base_.zero());
  for (std::size_t i = poly.size(); i-- > w_;) {
    WittRing::Elem c = poly[i];
    poly[i] = base_.zero();
    bool nz = false;
    for (auto v : c) nz = nz || v;
    if (!nz) continue;
    for (unsigned j = 0; j < w_; ++j)
      if (tail_[j]) poly[i - w_ + j] = base_.add(poly[i - w_ + j], base_.scale(c, tail_[j]));
  }
  poly.resize(w_);
  return poly;
}

RamifiedRing::Elem RamifiedRing::mul(const Elem& a, const Elem& b) const {
  std::vector<WittRing::Elem> acc(2 * w_ - 1, base_.zero());
  for (unsigned i = 0; i < w_; ++i)
    for (unsigned j = 0; j < w_; ++j) acc[i + j] = base_.add(acc[i + j], base_.mul(a[i], b[j]));
  return reduce(std::move(acc));
}

std::optional<unsigned> RamifiedRing::lambda_valuation(const Elem& a) const {
  std::optional<unsigned> best;
  const unsigned M = base_.precision();
  for (unsigned j = 0; j < w_; ++j) {
    unsigned v = base_.valuation(a[j]);
    if (v >= M) continue;
    unsigned k = j + w_ * v;
    if (!best || k < *best) best = k;
  }
  return best;
}

unsigned default_lambda_precision(const FieldContext& ctx) {
  return ctx.r() * (ctx.p() - 1) + 2;
}

PadicGaussEngine::PadicGaussEngine(std::shared_ptr<const FieldContext> ctx, unsigned N)
    : ctx_(std::move(ctx)), N_(N) {
  const unsigned w = ctx_->p() - 1;
  if (ctx_->p() > kMaxRamifiedPrime)
    fail(ErrorKind::Capacity, "p-adic Gauss oracle limited to p <= 3000");
  if (N < 1) fail(ErrorKind::Domain, "lambda precision must be positive");
  unsigned M = std::max(ctx_->r() + 2, (N + w - 1) / w);
  ring_ = std::make_unique<WittRing>(ctx_, M);
  ram_ = std::make_unique<RamifiedRing>(*ring_);
  const std::uint64_t n = ctx_->q() - 1;
  WittRing::Elem T = teichmuller(*ctx_, ctx_->generator(), M).value;
  teich_pow_.resize(n);
  WittRing::Elem acc = ring_->one();
  for (std::uint64_t k = 0; k < n; ++k) {
    teich_pow_[k] = acc;
    acc = ring_->mul(acc, T);
  }
}

RamifiedElem PadicGaussEngine::gauss_sum(std::uint64_t c) const {
  const std::uint64_t n = ctx_->q() - 1;
  const std::uint32_t p = ctx_->p();
  c %= n;
  const auto& exp = ctx_->exp_table();
  const auto& tr = ctx_->trace_table();
  // A_t = sum over k with Tr(g^k) = t of T^{-ck}.
  std::vector<WittRing::Elem> A(p, ring_->zero());
  for (std::uint64_t k = 0; k < n; ++k) {
    std::uint64_t e = (n - (c * k) % n) % n;
    auto& slot = A[tr[exp[k]]];
    slot = ring_->add(slot, teich_pow_[e]);
  }
  // sum_t A_t (1 + lambda)^t by Horner in lambda.
  std::vector<WittRing::Elem> poly{A[p - 1]};
  for (std::uint32_t t = p - 1; t-- > 0;) {
    poly.push_back(ring_->zero());
    for (std::size_t j = poly.size() - 1; j > 0; --j) poly[j] = ring_->add(poly[j], poly[j - 1]);
    poly[0] = ring_->add(poly[0], A[t]);
  }
  return RamifiedElem{N_, ram_->reduce(std::move(poly))};
}

Rational PadicGaussEngine::valuation(std::uint64_t c) const {
  const unsigned w = ctx_->p() - 1;
  RamifiedElem tau = gauss_sum(c);
  auto k = ram_->lambda_valuation(tau.value);
  if (!k || *k >= N_) {
    unsigned need = k ? *k + 1 : ring_->precision() * w + w;
    throw PrecisionError("Gauss sum valuation not resolved at lambda-precision " +
                             std::to_string(N_) + "; need N >= " + std::to_string(need),
                         need);
  }
  return make_rational(static_cast<std::int64_t>(*k), static_cast<std::int64_t>(w));
}

Rational padic_gauss_valuation(const FieldContext& ctx, std::uint64_t c,
                               std::optional<unsigned> N) {
  auto shared = field_context(ctx.p(), ctx.r());
  PadicGaussEngine engine(shared, N.value_or(default_lambda_precision(ctx)));
  return engine.valuation(c);
}

std::vector<Rational> padic_valuation_sweep(const FieldContext& ctx, Exec exec,
                                            std::optional<unsigned> N) {
  auto shared = field_context(ctx.p(), ctx.r());
  PadicGaussEngine engine(shared, N.value_or(default_lambda_precision(ctx)));
  return parallel_map<Rational>(ctx.q() - 1, exec,
                                [&](std::size_t c) { return engine.valuation(c); });
}

}  // namespace galmod
