// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#include "galmod/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>

#include "galmod/error.hpp"
#include "galmod/numtheory.hpp"

namespace galmod {

namespace {

std::vector<std::int64_t> poly_div_exact(std::vector<std::int64_t> a,
                                         const std::vector<std::int64_t>& b) {
  // b monic.
  const std::size_t db = b.size() - 1;
  std::vector<std::int64_t> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    std::int64_t c = a[i];
    q[i - db] = c;
    if (!c) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

std::vector<std::int64_t> compute_cyclotomic(std::uint32_t m) {
  std::vector<std::int64_t> f(m + 1, 0);
  f[0] = -1;
  f[m] = 1;
  for (auto d : nt::divisors(m))
    if (d < m) f = poly_div_exact(f, cyclotomic_polynomial(static_cast<std::uint32_t>(d)));
  return f;
}

bool add_overflows(std::int64_t a, std::int64_t b, std::int64_t& out) {
  return __builtin_add_overflow(a, b, &out);
}

// Reduce v (any length) modulo Phi_m into phi(m) coefficients.  Uses
// overflow-checked 64-bit arithmetic and reports failure instead of wrapping.
bool reduce_i64(std::vector<std::int64_t>& v, const std::vector<std::int64_t>& phi) {
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = v.size(); i-- > deg;) {
    std::int64_t c = v[i];
    if (!c) continue;
    v[i] = 0;
    for (std::size_t j = 0; j < deg; ++j) {
      if (!phi[j]) continue;
      std::int64_t prod;
      if (__builtin_mul_overflow(c, phi[j], &prod)) return false;
      if (add_overflows(v[i - deg + j], -prod, v[i - deg + j])) return false;
    }
  }
  v.resize(deg);
  return true;
}

void reduce_mpz(std::vector<mpz_class>& v, const std::vector<std::int64_t>& phi) {
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = v.size(); i-- > deg;) {
    if (v[i] == 0) continue;
    mpz_class c = v[i];
    v[i] = 0;
    for (std::size_t j = 0; j < deg; ++j)
      if (phi[j]) v[i - deg + j] -= c * static_cast<long>(phi[j]);
  }
  v.resize(deg);
}

std::vector<mpz_class> reduce_any(std::vector<std::int64_t> v, std::uint32_t m) {
  const auto& phi = cyclotomic_polynomial(m);
  std::vector<std::int64_t> fast = v;
  if (fast.size() < phi.size() - 1) fast.resize(phi.size() - 1, 0);
  if (reduce_i64(fast, phi)) {
    std::vector<mpz_class> out(fast.size());
    for (std::size_t i = 0; i < fast.size(); ++i) out[i] = static_cast<long>(fast[i]);
    return out;
  }
  std::vector<mpz_class> big(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) big[i] = static_cast<long>(v[i]);
  if (big.size() < phi.size() - 1) big.resize(phi.size() - 1, 0);
  reduce_mpz(big, phi);
  return big;
}

bool fits_small(const std::vector<mpz_class>& v, unsigned bits) {
  for (const auto& c : v)
    if (mpz_sizeinbase(c.get_mpz_t(), 2) > bits) return false;
  return true;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t m) {
  if (m == 0) fail(ErrorKind::Domain, "cyclotomic order must be positive");
  static std::recursive_mutex mu;
  static std::map<std::uint32_t, std::vector<std::int64_t>> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  auto f = compute_cyclotomic(m);
  return cache.emplace(m, std::move(f)).first->second;
}

CyclotomicInt::CyclotomicInt(std::uint32_t m) : m_(m) {
  if (m == 0) fail(ErrorKind::Domain, "cyclotomic order must be positive");
  c_.assign(cyclotomic_polynomial(m).size() - 1, 0);
}

CyclotomicInt CyclotomicInt::constant(std::uint32_t m, long value) {
  CyclotomicInt z(m);
  z.c_[0] = value;
  return z;
}

CyclotomicInt CyclotomicInt::zeta(std::uint32_t m, std::int64_t k) {
  std::vector<std::int64_t> counts(m, 0);
  counts[nt::mod(k, m)] = 1;
  return from_exponent_counts(m, counts);
}

CyclotomicInt CyclotomicInt::from_exponent_counts(std::uint32_t m,
                                                  const std::vector<std::int64_t>& counts) {
  CyclotomicInt z(m);
  z.c_ = reduce_any(counts, m);
  return z;
}

bool CyclotomicInt::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
  if (m_ != o.m_) {
    std::uint32_t M = std::lcm(m_, o.m_);
    return embed(M) + o.embed(M);
  }
  CyclotomicInt z(m_);
  for (std::size_t i = 0; i < c_.size(); ++i) z.c_[i] = c_[i] + o.c_[i];
  return z;
}

CyclotomicInt CyclotomicInt::operator-() const {
  CyclotomicInt z(m_);
  for (std::size_t i = 0; i < c_.size(); ++i) z.c_[i] = -c_[i];
  return z;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const { return *this + (-o); }

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
  if (m_ != o.m_) {
    std::uint32_t M = std::lcm(m_, o.m_);
    return embed(M) * o.embed(M);
  }
  const std::size_t n = c_.size();
  CyclotomicInt z(m_);
  // 64-bit fast path when products and sums provably fit.
  unsigned slack = 1;
  while ((std::size_t{1} << slack) < n + 1) ++slack;
  if (fits_small(c_, 28 - slack / 2) && fits_small(o.c_, 28 - slack / 2)) {
    std::vector<std::int64_t> acc(2 * n - 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
      long a = c_[i].get_si();
      if (!a) continue;
      for (std::size_t j = 0; j < n; ++j) acc[i + j] += a * o.c_[j].get_si();
    }
    z.c_ = reduce_any(std::move(acc), m_);
    return z;
  }
  std::vector<mpz_class> acc(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) acc[i + j] += c_[i] * o.c_[j];
  }
  reduce_mpz(acc, cyclotomic_polynomial(m_));
  z.c_ = std::move(acc);
  return z;
}

CyclotomicInt CyclotomicInt::twist(std::int64_t t) const {
  const std::uint64_t tt = nt::mod(t, m_);
  if (std::gcd(tt, std::uint64_t{m_}) != 1)
    fail(ErrorKind::Domain, "twist exponent not coprime to the cyclotomic order");
  std::vector<mpz_class> v(m_, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) v[(i * tt) % m_] += c_[i];
  reduce_mpz(v, cyclotomic_polynomial(m_));
  CyclotomicInt z(m_);
  z.c_ = std::move(v);
  return z;
}

CyclotomicInt CyclotomicInt::embed(std::uint32_t M) const {
  if (M % m_) fail(ErrorKind::Domain, "embedding order must be a multiple");
  const std::uint32_t s = M / m_;
  std::vector<mpz_class> v(M, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * s] = c_[i];
  reduce_mpz(v, cyclotomic_polynomial(M));
  CyclotomicInt z(M);
  z.c_ = std::move(v);
  return z;
}

std::string CyclotomicInt::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    std::string coef = c_[i].get_str();
    if (!out.empty() && coef[0] != '-') out += '+';
    if (i == 0) {
      out += coef;
      continue;
    }
    if (coef == "-1") out += '-';
    else if (coef != "1") out += coef + "*";
    out += "z";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

CyclotomicInt cyc_add(const CyclotomicInt& a, const CyclotomicInt& b) { return a + b; }
CyclotomicInt cyc_mul(const CyclotomicInt& a, const CyclotomicInt& b) { return a * b; }
CyclotomicInt cyc_twist(const CyclotomicInt& a, std::int64_t t) { return a.twist(t); }

MultChar::MultChar(std::shared_ptr<const FieldContext> c, std::int64_t idx)
    : ctx(std::move(c)), index(nt::mod(idx, ctx->q() - 1)) {}

std::uint32_t gauss_order(const FieldContext& ctx) {
  return static_cast<std::uint32_t>(std::lcm<std::uint64_t>(ctx.p(), ctx.q() - 1));
}

namespace {

struct GaussLayout {
  std::uint64_t m, n, step_mult, step_add, c;
};

GaussLayout layout(const FieldContext& ctx, std::uint64_t c) {
  GaussLayout g;
  g.m = gauss_order(ctx);
  g.n = ctx.q() - 1;
  g.step_mult = g.m / g.n;
  g.step_add = g.m / ctx.p();
  g.c = c % g.n;
  return g;
}

inline std::uint64_t summand_exponent(const GaussLayout& g, std::uint64_t k,
                                      std::uint32_t tr) {
  // chi^{-1}(g^k) = zeta_{q-1}^{-ck}, psi = zeta_p^{Tr}.
  std::uint64_t e = (g.n - (g.c * k) % g.n) % g.n;
  return (e * g.step_mult + std::uint64_t(tr) * g.step_add) % g.m;
}

}  // namespace

std::vector<std::int64_t> gauss_exponent_counts_serial(const FieldContext& ctx,
                                                       std::uint64_t c) {
  const GaussLayout g = layout(ctx, c);
  const auto& exp = ctx.exp_table();
  const auto& tr = ctx.trace_table();
  std::vector<std::int64_t> counts(g.m, 0);
  for (std::uint64_t k = 0; k < g.n; ++k) ++counts[summand_exponent(g, k, tr[exp[k]])];
  return counts;
}

std::vector<std::int64_t> gauss_exponent_counts_parallel(const FieldContext& ctx,
                                                         std::uint64_t c) {
  const GaussLayout g = layout(ctx, c);
  const auto& exp = ctx.exp_table();
  const auto& tr = ctx.trace_table();
  std::vector<std::int64_t> counts(g.m, 0);
  const long long n = static_cast<long long>(g.n);
#pragma omp parallel
  {
    std::vector<std::int64_t> local(g.m, 0);
#pragma omp for schedule(static) nowait
    for (long long k = 0; k < n; ++k) {
      auto kk = static_cast<std::uint64_t>(k);
      ++local[summand_exponent(g, kk, tr[exp[kk]])];
    }
#pragma omp critical(galmod_gauss_counts)
    for (std::uint64_t i = 0; i < g.m; ++i) counts[i] += local[i];
  }
  return counts;
}

CyclotomicInt gauss_sum(const FieldContext& ctx, std::uint64_t c, Exec exec) {
  auto counts = exec == Exec::Serial ? gauss_exponent_counts_serial(ctx, c)
                                     : gauss_exponent_counts_parallel(ctx, c);
  return CyclotomicInt::from_exponent_counts(gauss_order(ctx), counts);
}

CyclotomicInt gauss_sum(const FieldContext& ctx, const MultChar& chi, Exec exec) {
  return gauss_sum(ctx, chi.index, exec);
}

CyclotomicInt twist_mult_part(const CyclotomicInt& z, const FieldContext& ctx,
                              std::int64_t t) {
  const std::uint64_t n = ctx.q() - 1, p = ctx.p();
  const std::uint32_t m = gauss_order(ctx);
  if (z.order() != m) fail(ErrorKind::Domain, "element is not in Z[zeta_{lcm(p,q-1)}]");
  // p and q-1 are coprime, so the two parts twist independently.
  std::uint64_t s = nt::crt(nt::mod(t, n), n, 1 % p, p);
  return z.twist(static_cast<std::int64_t>(s % m));
}

CyclotomicInt gauss_product_target(const FieldContext& ctx, std::uint64_t c) {
  const std::uint64_t n = ctx.q() - 1;
  // dlog(-1) = (q-1)/2 for odd q and 0 in characteristic 2.
  std::uint64_t half = (ctx.p() == 2) ? 0 : n / 2;
  long sign = ((c % n) * half % n == 0) ? 1 : -1;
  return CyclotomicInt::constant(gauss_order(ctx), sign * static_cast<long>(ctx.q()));
}

std::vector<std::int64_t> crt_basis_coordinates(std::uint32_t m,
                                                const std::vector<std::int64_t>& counts) {
  if (counts.size() != m) fail(ErrorKind::Domain, "count vector length differs from the order");
  std::uint64_t l1 = 0;
  for (auto v : counts) l1 += static_cast<std::uint64_t>(v < 0 ? -v : v);
  // The axis reductions multiply the l1 norm by at most prod (l - 1) < m.
  if (l1 > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) / m)
    fail(ErrorKind::Capacity, "counts too large for 64-bit CRT reduction");

  struct Axis {
    std::uint64_t l, n, stride;
  };
  std::vector<Axis> axes;
  std::uint64_t stride = 1;
  for (auto l : nt::prime_factors(m)) {
    const std::uint64_t n = nt::p_part(m, l);
    axes.push_back({l, n, stride});
    stride *= n;
  }
  std::vector<std::int64_t> a(m, 0);
  for (std::uint64_t k = 0; k < m; ++k) {
    if (!counts[k]) continue;
    std::uint64_t idx = 0;
    for (const auto& ax : axes) idx += (k % ax.n) * ax.stride;
    a[idx] += counts[k];
  }
  // Along an axis of order n = l^e with h = n / l:
  // zeta^{(l-1)h + s} = -sum_{j < l-1} zeta^{jh + s}.
  // Positions split as outer * (stride * n) + t * stride + inner.
  for (const auto& ax : axes) {
    const std::uint64_t h = ax.n / ax.l, phi = ax.n - h, block = ax.stride * ax.n;
    for (std::uint64_t outer = 0; outer < m; outer += block)
      for (std::uint64_t t = phi; t < ax.n; ++t) {
        std::int64_t* top = &a[outer + t * ax.stride];
        const std::uint64_t s = t - phi;
        for (std::uint64_t j = 0; j + 1 < ax.l; ++j) {
          std::int64_t* dst = &a[outer + (j * h + s) * ax.stride];
          for (std::uint64_t inner = 0; inner < ax.stride; ++inner) dst[inner] -= top[inner];
        }
        std::fill(top, top + ax.stride, 0);
      }
  }
  // Keep positions with every coordinate below phi(n_i), in mixed-radix order.
  std::vector<std::int64_t> out;
  out.reserve(nt::euler_phi(m));
  std::vector<std::uint64_t> coord(axes.size(), 0);
  std::uint64_t idx = 0;
  while (true) {
    out.push_back(a[idx]);
    std::size_t i = 0;
    for (; i < axes.size(); ++i) {
      const auto& ax = axes[i];
      if (++coord[i] < ax.n - ax.n / ax.l) {
        idx += ax.stride;
        break;
      }
      idx -= (coord[i] - 1) * ax.stride;
      coord[i] = 0;
    }
    if (i == axes.size()) break;
  }
  return out;
}

bool gauss_product_identity(const FieldContext& ctx, std::uint64_t c, Exec exec) {
  const std::uint64_t n = ctx.q() - 1, p = ctx.p();
  const std::uint32_t m = gauss_order(ctx);
  const auto counts = exec == Exec::Serial ? gauss_exponent_counts_serial(ctx, c)
                                           : gauss_exponent_counts_parallel(ctx, c);
  std::vector<std::pair<std::uint64_t, std::int64_t>> lhs, rhs;
  const std::uint64_t s = nt::crt(n - 1, n, 1 % p, p);  // -1 on the zeta_{q-1} part
  for (std::uint64_t k = 0; k < m; ++k) {
    if (!counts[k]) continue;
    lhs.emplace_back(k, counts[k]);
    rhs.emplace_back(k * s % m, counts[k]);
  }
  std::vector<std::int64_t> prod(m, 0);
  for (const auto& [a, x] : lhs)
    for (const auto& [b, y] : rhs) {
      const std::uint64_t k = a + b;
      prod[k >= m ? k - m : k] += x * y;
    }
  const std::uint64_t half = (p == 2) ? 0 : n / 2;
  const std::int64_t sign = ((c % n) * half % n == 0) ? 1 : -1;
  prod[0] -= sign * static_cast<std::int64_t>(ctx.q());
  for (auto v : crt_basis_coordinates(m, prod))
    if (v != 0) return false;
  return true;
}

double complex_abs2(const CyclotomicInt& z) {
  std::complex<long double> acc = 0;
  const long double two_pi = 2.0L * 3.14159265358979323846264338327950288L;
  for (std::size_t i = 0; i < z.coeffs().size(); ++i) {
    if (z.coeffs()[i] == 0) continue;
    long double ang = two_pi * static_cast<long double>(i) / z.order();
    acc += static_cast<long double>(z.coeffs()[i].get_d()) *
           std::complex<long double>(std::cos(ang), std::sin(ang));
  }
  return static_cast<double>(std::norm(acc));
}

}  // namespace galmod
