// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#include "galmod/polyfp.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "galmod/numtheory.hpp"

namespace galmod::fp {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly add(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t s = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    out[i] = static_cast<std::uint32_t>(s % p);
  }
  trim(out);
  return out;
}

Poly sub(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t s = (i < a.size() ? a[i] : 0) + p - (i < b.size() ? b[i] : 0);
    out[i] = static_cast<std::uint32_t>(s % p);
  }
  trim(out);
  return out;
}

Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      acc[i + j] = (acc[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  }
  Poly out(acc.begin(), acc.end());
  trim(out);
  return out;
}

Poly scale(const Poly& a, std::uint32_t c, std::uint32_t p) {
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = static_cast<std::uint32_t>(std::uint64_t(a[i]) * c % p);
  trim(out);
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint32_t p) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  Poly r = a;
  trim(r);
  int db = degree(b);
  if (degree(r) < db) return {{}, r};
  Poly q(static_cast<std::size_t>(degree(r) - db + 1), 0);
  std::uint32_t lead_inv = static_cast<std::uint32_t>(nt::inv_mod(b.back(), p));
  for (int i = degree(r); i >= db; --i) {
    std::uint32_t c = r[static_cast<std::size_t>(i)];
    if (!c) continue;
    std::uint32_t t = static_cast<std::uint32_t>(std::uint64_t(c) * lead_inv % p);
    q[static_cast<std::size_t>(i - db)] = t;
    for (int j = 0; j <= db; ++j) {
      auto& slot = r[static_cast<std::size_t>(i - db + j)];
      slot = static_cast<std::uint32_t>(
          (slot + std::uint64_t(p - t) * b[static_cast<std::size_t>(j)]) % p);
    }
  }
  trim(q);
  trim(r);
  return {q, r};
}

Poly rem(const Poly& a, const Poly& b, std::uint32_t p) { return divmod(a, b, p).second; }

Poly make_monic(const Poly& a, std::uint32_t p) {
  if (a.empty()) return a;
  return scale(a, static_cast<std::uint32_t>(nt::inv_mod(a.back(), p)), p);
}

Poly gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly acc{1};
  acc = rem(acc, m, p);
  base = rem(base, m, p);
  while (e) {
    if (e & 1) acc = rem(mul(acc, base, p), m, p);
    base = rem(mul(base, base, p), m, p);
    e >>= 1;
  }
  return acc;
}

bool is_irreducible(const Poly& f_in, std::uint32_t p) {
  Poly f = make_monic(f_in, p);
  int n = degree(f);
  if (n < 1) return false;
  if (n == 1) return true;
  const Poly x{0, 1};
  Poly h = rem(x, f, p);
  for (int i = 1; i <= n / 2; ++i) {
    h = powmod(h, p, f, p);
    if (degree(gcd(sub(h, x, p), f, p)) > 0) return false;
  }
  return true;
}

namespace {

// Monic polynomial of degree d whose low coefficients encode k in base p.
Poly monic_from_code(std::uint64_t k, int d, std::uint32_t p) {
  Poly f(static_cast<std::size_t>(d) + 1, 0);
  for (int i = 0; i < d; ++i) {
    f[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(k % p);
    k /= p;
  }
  f.back() = 1;
  return f;
}

}  // namespace

std::vector<std::pair<Poly, unsigned>> factor(const Poly& f_in, std::uint32_t p) {
  Poly f = f_in;
  trim(f);
  if (f.empty()) throw std::domain_error("cannot factor the zero polynomial");
  f = make_monic(f, p);
  std::vector<std::pair<Poly, unsigned>> out;
  for (int d = 1; 2 * d <= degree(f); ++d) {
    auto count = nt::checked_pow(p, static_cast<unsigned>(d), 1ull << 32);
    if (!count) throw std::length_error("factor: degree too large for trial division");
    for (std::uint64_t k = 0; k < *count && 2 * d <= degree(f); ++k) {
      Poly g = monic_from_code(k, d, p);
      if (!is_irreducible(g, p)) continue;
      unsigned mult = 0;
      for (;;) {
        auto [q, r] = divmod(f, g, p);
        if (!r.empty()) break;
        f = std::move(q);
        ++mult;
      }
      if (mult) out.emplace_back(g, mult);
    }
  }
  if (degree(f) >= 1) {
    bool merged = false;
    for (auto& [g, m] : out)
      if (g == f) {
        ++m;
        merged = true;
      }
    if (!merged) out.emplace_back(f, 1u);
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return encode(a.first, p, a.first.size()) < encode(b.first, p, b.first.size());
  });
  return out;
}

std::uint64_t encode(const Poly& f, std::uint32_t p, std::size_t len) {
  std::uint64_t acc = 0;
  for (std::size_t i = len; i-- > 0;) acc = acc * p + (i < f.size() ? f[i] : 0);
  return acc;
}

std::string render(const Poly& f) {
  if (f.empty()) return "0";
  std::string out;
  for (int i = degree(f); i >= 0; --i) {
    std::uint32_t c = f[static_cast<std::size_t>(i)];
    if (!c) continue;
    if (!out.empty()) out += '+';
    if (c != 1 || i == 0) out += std::to_string(c);
    if (i >= 1) out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

}  // namespace galmod::fp
