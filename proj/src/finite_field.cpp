// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#include "galmod/finite_field.hpp"

#include <map>
#include <mutex>
#include <string>

#include "galmod/error.hpp"
#include "galmod/numtheory.hpp"

namespace galmod {

namespace {
constexpr std::uint64_t kMaxFieldSize = 1000000;
constexpr unsigned kMaxDegree = 12;
}  // namespace

PrimePower PrimePower::make(std::uint64_t p, unsigned r) {
  if (!nt::is_prime(p)) fail(ErrorKind::InvalidInput, std::to_string(p) + " is not prime");
  if (r < 1) fail(ErrorKind::InvalidInput, "field degree must be positive");
  auto q = nt::checked_pow(p, r);
  if (!q) fail(ErrorKind::Capacity, "p^r overflows");
  PrimePower pp;
  pp.p = static_cast<std::uint32_t>(p);
  pp.r = r;
  pp.q = *q;
  return pp;
}

FieldContext::FieldContext(std::uint32_t p, unsigned r) {
  if (!nt::is_prime(p)) fail(ErrorKind::InvalidInput, std::to_string(p) + " is not prime");
  if (r < 1) fail(ErrorKind::InvalidInput, "field degree must be positive");
  if (r > kMaxDegree) fail(ErrorKind::Capacity, "field degree above 12");
  auto q = nt::checked_pow(p, r, kMaxFieldSize);
  if (!q) fail(ErrorKind::Capacity, "field size above 10^6");
  pp_ = PrimePower::make(p, r);

  // Smallest monic irreducible of degree r.
  for (std::uint64_t k = 0; k < pp_.q; ++k) {
    fp::Poly f(r + 1, 0);
    std::uint64_t t = k;
    for (unsigned i = 0; i < r; ++i) {
      f[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    f[r] = 1;
    if (fp::is_irreducible(f, p)) {
      modulus_ = f;
      break;
    }
  }

  const std::uint64_t order = pp_.q - 1;
  const auto ell = nt::prime_factors(order);
  for (std::uint32_t cand = 1; cand < pp_.q; ++cand) {
    FqElem g = unpack(cand);
    bool primitive = true;
    for (auto l : ell)
      if (pow(g, order / l) == one()) {
        primitive = false;
        break;
      }
    if (primitive) {
      generator_ = g;
      break;
    }
  }

  exp_.resize(order);
  log_.assign(pp_.q, 0);
  FqElem acc = one();
  for (std::uint64_t k = 0; k < order; ++k) {
    std::uint32_t packed = pack(acc);
    exp_[k] = packed;
    log_[packed] = static_cast<std::uint32_t>(k);
    acc = mul_poly(acc, generator_);
  }

  // The trace is F_p-linear: tabulate it on the power basis.
  std::vector<std::uint32_t> basis_trace(r);
  for (unsigned i = 0; i < r; ++i) {
    FqElem e = zero();
    e.coeffs[i] = 1;
    basis_trace[i] = trace_by_frobenius(e);
  }
  trace_.resize(pp_.q);
  for (std::uint64_t x = 0; x < pp_.q; ++x) {
    std::uint64_t t = x, s = 0;
    for (unsigned i = 0; i < r; ++i) {
      s += (t % p) * basis_trace[i];
      t /= p;
    }
    trace_[x] = static_cast<std::uint32_t>(s % p);
  }
}

FqElem FieldContext::zero() const { return FqElem{std::vector<std::uint32_t>(pp_.r, 0)}; }

FqElem FieldContext::one() const {
  FqElem e = zero();
  e.coeffs[0] = 1;
  return e;
}

FqElem FieldContext::from_int(std::int64_t a) const {
  FqElem e = zero();
  e.coeffs[0] = static_cast<std::uint32_t>(nt::mod(a, pp_.p));
  return e;
}

std::uint32_t FieldContext::pack(const FqElem& x) const {
  std::uint64_t acc = 0;
  for (unsigned i = pp_.r; i-- > 0;) acc = acc * pp_.p + x.coeffs[i];
  return static_cast<std::uint32_t>(acc);
}

FqElem FieldContext::unpack(std::uint32_t packed) const {
  FqElem e = zero();
  for (unsigned i = 0; i < pp_.r; ++i) {
    e.coeffs[i] = packed % pp_.p;
    packed /= pp_.p;
  }
  return e;
}

FqElem FieldContext::add(const FqElem& a, const FqElem& b) const {
  FqElem out = zero();
  for (unsigned i = 0; i < pp_.r; ++i) out.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % pp_.p;
  return out;
}

FqElem FieldContext::sub(const FqElem& a, const FqElem& b) const {
  FqElem out = zero();
  for (unsigned i = 0; i < pp_.r; ++i)
    out.coeffs[i] = (a.coeffs[i] + pp_.p - b.coeffs[i]) % pp_.p;
  return out;
}

FqElem FieldContext::neg(const FqElem& a) const { return sub(zero(), a); }

FqElem FieldContext::mul_poly(const FqElem& a, const FqElem& b) const {
  fp::Poly pa(a.coeffs), pb(b.coeffs);
  fp::trim(pa);
  fp::trim(pb);
  fp::Poly prod = fp::rem(fp::mul(pa, pb, pp_.p), modulus_, pp_.p);
  FqElem out = zero();
  for (std::size_t i = 0; i < prod.size(); ++i) out.coeffs[i] = prod[i];
  return out;
}

FqElem FieldContext::mul(const FqElem& a, const FqElem& b) const {
  if (exp_.empty()) return mul_poly(a, b);
  std::uint32_t pa = pack(a), pb = pack(b);
  if (pa == 0 || pb == 0) return zero();
  std::uint64_t k = (std::uint64_t(log_[pa]) + log_[pb]) % (pp_.q - 1);
  return unpack(exp_[k]);
}

FqElem FieldContext::pow(const FqElem& a, std::uint64_t e) const {
  FqElem acc = one(), base = a;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

FqElem FieldContext::inv(const FqElem& a) const {
  if (pack(a) == 0) fail(ErrorKind::Domain, "inverse of zero");
  return pow(a, pp_.q - 2);
}

std::uint32_t FieldContext::trace_by_frobenius(const FqElem& x) const {
  FqElem acc = zero(), t = x;
  for (unsigned i = 0; i < pp_.r; ++i) {
    acc = add(acc, t);
    t = frobenius(t);
  }
  // The trace lies in F_p: only the constant coefficient survives.
  return acc.coeffs[0];
}

std::uint32_t FieldContext::trace(const FqElem& x) const { return trace_[pack(x)]; }

std::uint64_t FieldContext::dlog(const FqElem& x) const {
  std::uint32_t packed = pack(x);
  if (packed == 0) fail(ErrorKind::Domain, "discrete log of zero");
  return log_[packed];
}

FqElem FieldContext::gen_pow(std::uint64_t k) const { return unpack(exp_[k % (pp_.q - 1)]); }

FieldContext make_field(std::uint64_t p, unsigned r) {
  if (!nt::is_prime(p)) fail(ErrorKind::InvalidInput, std::to_string(p) + " is not prime");
  if (p > kMaxFieldSize) fail(ErrorKind::Capacity, "field size above 10^6");
  return FieldContext(static_cast<std::uint32_t>(p), r);
}

std::shared_ptr<const FieldContext> field_context(std::uint64_t p, unsigned r) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, unsigned>, std::shared_ptr<const FieldContext>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, r});
    if (it != cache.end()) return it->second;
  }
  auto ctx = std::make_shared<const FieldContext>(make_field(p, r));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(p, r), ctx).first->second;
}

std::uint32_t trace(const FieldContext& ctx, const FqElem& x) { return ctx.trace(x); }
std::uint64_t dlog(const FieldContext& ctx, const FqElem& x) { return ctx.dlog(x); }

}  // namespace galmod
