// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#include "galmod/cover.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "galmod/error.hpp"
#include "galmod/numtheory.hpp"

namespace galmod {

const char* to_string(CoverOrigin origin) {
  switch (origin) {
    case CoverOrigin::Synthetic: return "synthetic";
    case CoverOrigin::Kummer: return "kummer";
    case CoverOrigin::ArtinSchreier: return "artin-schreier";
    case CoverOrigin::Subcover: return "subcover";
  }
  return "?";
}

std::uint64_t CoverDatum::base_field_size() const {
  auto q = nt::checked_pow(p, base_exponent);
  if (!q) fail(ErrorKind::Capacity, "base field too large");
  return *q;
}

namespace {

[[noreturn]] void invalid(const PlaceDatum& pl, const std::string& what) {
  fail(ErrorKind::Validation, "place " + pl.label + ": " + what);
}

bool quotient_is_cyclic(const Subgroup& D, const Subgroup& I) {
  if (D.order() == I.order()) return true;
  for (auto x : D.elements())
    if (Subgroup::generated(D.ambient(), {x}).join(I).order() == D.order()) return true;
  return false;
}

}  // namespace

std::uint32_t tame_index(const CoverDatum& cover, const PlaceDatum& place, std::size_t chi) {
  const auto& g = cover.group;
  std::size_t target = g.p_prime_part(chi, cover.p);
  std::size_t w = 0;
  for (std::uint32_t d = 0; d < place.e_t; ++d) {
    if (place.inertia.characters_agree_on(target, w)) return d;
    w = g.char_mul(w, place.cotangent);
  }
  fail(ErrorKind::Validation, "place " + place.label + ": cotangent character does not generate");
}

std::uint32_t conductor(const CoverDatum& cover, const PlaceDatum& place, std::size_t chi) {
  if (place.inertia.character_trivial_on(chi)) return 0;
  if (place.wild.character_trivial_on(chi)) return 1;
  auto it = place.conductors.find(chi);
  if (it != place.conductors.end()) return it->second;
  if (cover.weakly_ramified) return 2;
  fail(ErrorKind::IncompleteDatum, "place " + place.label + ": no conductor for character " +
                                       cover.group.label(chi));
}

bool has_complete_conductors(const CoverDatum& cover) {
  if (cover.weakly_ramified) return true;
  for (const auto& pl : cover.places)
    for (std::size_t chi = 0; chi < cover.group.order(); ++chi)
      if (!pl.wild.character_trivial_on(chi) && !pl.conductors.count(chi)) return false;
  return true;
}

std::int64_t cover_genus(const CoverDatum& cover) {
  const std::int64_t n = static_cast<std::int64_t>(cover.group.order());
  std::int64_t R = 0;
  for (const auto& pl : cover.places) {
    std::int64_t s = 0;
    for (std::size_t chi = 0; chi < cover.group.order(); ++chi) s += conductor(cover, pl, chi);
    R += static_cast<std::int64_t>(pl.degree) * s;
  }
  const std::int64_t r = cover.r;
  // r (2 g_X - 2) = n r (2 g_Y - 2) + R
  std::int64_t rhs = n * r * (2 * cover.g_base - 2) + R;
  if (rhs % (2 * r) != 0)
    fail(ErrorKind::Validation, "Riemann-Hurwitz: 2g-2 is not an even integer");
  return rhs / (2 * r) + 1;
}

void validate_cover(const CoverDatum& c) {
  if (!nt::is_prime(c.p)) fail(ErrorKind::Validation, "p is not prime");
  if (c.r < 1) fail(ErrorKind::Validation, "r must be positive");
  if (c.base_exponent < 1) fail(ErrorKind::Validation, "base exponent must be positive");
  if (c.g_base < 0) fail(ErrorKind::Validation, "base genus must be nonnegative");
  const auto& g = c.group;
  const std::uint64_t Q = c.base_field_size();
  for (const auto& pl : c.places) {
    if (pl.degree < 1) invalid(pl, "degree must be positive");
    if (pl.degree % c.r != 0) invalid(pl, "r must divide the place degree");
    if (pl.inertia.ambient() != g || pl.decomposition.ambient() != g || pl.wild.ambient() != g)
      invalid(pl, "subgroups must live in the cover group");
    if (pl.e_t < 1 || pl.e_w < 1) invalid(pl, "ramification indices must be positive");
    if (pl.inertia.order() != std::size_t{pl.e_t} * pl.e_w) invalid(pl, "|inertia| != e_t * e_w");
    if (pl.inertia.order() == 1) invalid(pl, "unramified places are not stored");
    if (!nt::is_power_of(pl.e_w, c.p)) invalid(pl, "e_w is not a power of p");
    if (std::gcd<std::uint64_t>(pl.e_t, c.p) != 1) invalid(pl, "gcd(e_t, p) != 1");
    auto Qd = nt::checked_pow(Q, pl.degree);
    if (Qd) {
      if ((*Qd - 1) % pl.e_t != 0) invalid(pl, "e_t does not divide |k(q)^x|");
    } else if (nt::pow_mod(Q, pl.degree, pl.e_t) != 1 % pl.e_t) {
      invalid(pl, "e_t does not divide |k(q)^x|");
    }
    if (pl.wild.order() != pl.e_w) invalid(pl, "|wild subgroup| != e_w");
    if (!pl.wild.is_subset_of(pl.inertia)) invalid(pl, "wild subgroup not inside inertia");
    if (!pl.inertia.is_subset_of(pl.decomposition)) invalid(pl, "inertia not inside decomposition");
    if (!quotient_is_cyclic(pl.decomposition, pl.inertia))
      invalid(pl, "decomposition/inertia is not cyclic");
    if (pl.cotangent >= g.order()) invalid(pl, "cotangent character outside the group");
    if (!g.is_p_prime(pl.cotangent, c.p)) invalid(pl, "cotangent character must have prime-to-p order");
    if (!pl.wild.character_trivial_on(pl.cotangent) ||
        pl.inertia.restricted_order(pl.cotangent) != pl.e_t)
      invalid(pl, "cotangent character must have kernel exactly the wild subgroup on inertia");
    for (const auto& [chi, cd] : pl.conductors) {
      if (chi >= g.order() || pl.wild.character_trivial_on(chi))
        invalid(pl, "conductor given for a character that is not wildly ramified");
      if (cd < 2) invalid(pl, "wild conductors are at least 2");
      if (c.weakly_ramified && cd != 2) invalid(pl, "weakly ramified conductors equal 2");
    }
    if (c.weakly_ramified) {
      if (pl.e_t != 1 && pl.e_w != 1)
        fail(ErrorKind::Validation,
             "place " + pl.label + ": weakly ramified data needs e_t = 1 or e_w = 1");
      for (auto x : pl.wild.elements())
        if (x != 0 && g.element_order(x) != c.p)
          invalid(pl, "wild subgroup of a weakly ramified place must be elementary abelian");
    }
  }
  if (has_complete_conductors(c)) (void)cover_genus(c);
}

bool P1Place::operator<(const P1Place& o) const {
  if (infinite != o.infinite) return !infinite;
  if (poly.size() != o.poly.size()) return poly.size() < o.poly.size();
  return std::lexicographical_compare(poly.rbegin(), poly.rend(), o.poly.rbegin(), o.poly.rend());
}

void RationalFunctionDivisor::normalize() {
  std::map<P1Place, std::int64_t> acc;
  for (auto& [pl, m] : terms) {
    if (!pl.infinite) {
      fp::trim(pl.poly);
      if (fp::degree(pl.poly) < 1 || pl.poly.back() != 1)
        fail(ErrorKind::InvalidInput, "divisor places must be monic polynomials of degree >= 1");
      if (!fp::is_irreducible(pl.poly, p))
        fail(ErrorKind::InvalidInput, "divisor place " + fp::render(pl.poly) + " is not irreducible");
    }
    acc[pl] += m;
  }
  terms.clear();
  for (auto& [pl, m] : acc)
    if (m != 0) terms.emplace_back(pl, m);
}

void RationalFunctionDivisor::complete_at_infinity() {
  normalize();
  std::int64_t total = 0;
  bool has_inf = false;
  for (const auto& [pl, m] : terms) {
    total += static_cast<std::int64_t>(pl.degree()) * m;
    has_inf = has_inf || pl.infinite;
  }
  if (has_inf) {
    if (total != 0) fail(ErrorKind::InvalidDivisor, "divisor is not principal: degree " + std::to_string(total));
    return;
  }
  if (total != 0) terms.emplace_back(P1Place{true, {}}, -total);
}

namespace {

std::size_t char_with_exponent(const AbelianGroup& g, std::uint64_t a) {
  if (g.rank() == 0) return 0;
  return g.index({static_cast<std::uint32_t>(a % g.order())});
}

// Residue of f / P^m at the finite place P, as a polynomial mod P.
fp::Poly unit_residue(const RationalFunctionDivisor& f, const fp::Poly& P, std::uint32_t p) {
  const std::uint64_t Q = *nt::checked_pow(p, static_cast<unsigned>(fp::degree(P)));
  fp::Poly acc{1};
  for (const auto& [pl, m] : f.terms) {
    if (pl.infinite || pl.poly == P) continue;
    fp::Poly v = fp::rem(pl.poly, P, p);
    std::uint64_t e = nt::mod(m, Q - 1);
    acc = fp::rem(fp::mul(acc, fp::powmod(v, e, P, p), p), P, p);
  }
  return acc;
}

}  // namespace

CoverDatum kummer_cover(std::uint32_t p, std::uint32_t n, RationalFunctionDivisor f) {
  if (!nt::is_prime(p)) fail(ErrorKind::InvalidInput, "p is not prime");
  if (n < 2) fail(ErrorKind::InvalidInput, "Kummer degree must be at least 2");
  if (std::gcd(n, p) != 1) fail(ErrorKind::TamenessViolation, "gcd(n, p) != 1");
  if ((p - 1) % n != 0)
    fail(ErrorKind::ConstantExtension, "n does not divide p-1: the constants would grow");
  f.p = p;
  f.complete_at_infinity();
  std::int64_t gm = n;
  for (const auto& [pl, m] : f.terms) gm = std::gcd(gm, m);
  if (gm != 1) fail(ErrorKind::ReducibleCover, "gcd(n, multiplicities) != 1: cover is reducible");

  CoverDatum c;
  c.group = AbelianGroup::cyclic(n);
  c.p = p;
  c.r = 1;
  c.g_base = 0;
  c.weakly_ramified = true;
  c.origin = CoverOrigin::Kummer;
  const auto& G = c.group;
  for (const auto& [pl, m] : f.terms) {
    const std::uint32_t g = static_cast<std::uint32_t>(std::gcd<std::int64_t>(n, m));
    const std::uint32_t e = n / g;
    if (e == 1) continue;
    const std::int64_t mp = m / static_cast<std::int64_t>(g);
    PlaceDatum d;
    d.label = pl.label();
    d.degree = pl.degree();
    d.e_t = e;
    d.e_w = 1;
    d.inertia = Subgroup::cyclic_of_order(G, e);
    d.wild = Subgroup::trivial(G);
    // sigma: y -> zeta y scales the local parameter y^a t^b (a m + b n = 1)
    // by zeta^a, so the cotangent character is chi_a with a = (m/g)^{-1} mod e.
    d.cotangent = char_with_exponent(G, nt::inv_mod(nt::mod(mp, e), e));
    std::uint32_t fres = 1;
    if (!pl.infinite && g > 1) {
      const std::uint64_t Q = *nt::checked_pow(p, d.degree);
      fp::Poly v = fp::powmod(unit_residue(f, pl.poly, p), (Q - 1) / g, pl.poly, p);
      while (fp::powmod(v, fres, pl.poly, p) != fp::Poly{1}) ++fres;
    }
    d.decomposition = Subgroup::cyclic_of_order(G, e * fres);
    c.places.push_back(std::move(d));
  }
  validate_cover(c);
  return c;
}

CoverDatum artin_schreier_cover(std::uint32_t p, RationalFunctionDivisor f) {
  if (!nt::is_prime(p)) fail(ErrorKind::InvalidInput, "p is not prime");
  f.p = p;
  f.normalize();
  CoverDatum c;
  c.group = AbelianGroup::cyclic(p);
  c.p = p;
  c.r = 1;
  c.g_base = 0;
  c.weakly_ramified = true;
  c.origin = CoverOrigin::ArtinSchreier;
  const auto& G = c.group;
  for (const auto& [pl, m] : f.terms) {
    if (m >= 0) continue;
    if (m < -1)
      fail(ErrorKind::NotWeaklyRamified,
           "pole of order " + std::to_string(-m) + " at " + pl.label() + ": not weakly ramified");
    PlaceDatum d;
    d.label = pl.label();
    d.degree = pl.degree();
    d.e_t = 1;
    d.e_w = p;
    d.inertia = Subgroup::whole(G);
    d.decomposition = Subgroup::whole(G);
    d.wild = Subgroup::whole(G);
    d.cotangent = 0;
    c.places.push_back(std::move(d));
  }
  if (c.places.empty())
    fail(ErrorKind::ReducibleCover, "f has no poles: y^p - y = f does not give an irreducible cover");
  validate_cover(c);
  return c;
}

CoverDatum synthetic_cover(const AbelianGroup& group, std::uint32_t p, std::uint32_t r,
                           std::int64_t g_base, std::vector<PlaceDatum> places,
                           bool weakly_ramified, std::uint32_t base_exponent) {
  CoverDatum c;
  c.group = group;
  c.p = p;
  c.r = r;
  c.base_exponent = base_exponent;
  c.g_base = g_base;
  c.places = std::move(places);
  c.weakly_ramified = weakly_ramified;
  c.origin = CoverOrigin::Synthetic;
  validate_cover(c);
  return c;
}

std::vector<AbelianGroup> abelian_groups_up_to(std::size_t n) {
  std::vector<AbelianGroup> out;
  std::vector<std::uint32_t> chain;
  auto rec = [&](auto&& self, std::uint32_t last, std::size_t prod) -> void {
    out.emplace_back(chain);
    for (std::uint32_t next = last; prod * next <= n; next += last) {
      if (next < 2) continue;
      chain.push_back(next);
      self(self, next, prod * next);
      chain.pop_back();
    }
  };
  rec(rec, 1, 1);
  std::stable_sort(out.begin(), out.end(), [](const AbelianGroup& a, const AbelianGroup& b) {
    return a.order() < b.order();
  });
  return out;
}

CoverDatum random_weakly_ramified_cover(std::mt19937_64& rng, const RandomCoverOptions& opt) {
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  const std::uint32_t p = opt.primes[pick(opt.primes.size())];
  auto groups = abelian_groups_up_to(opt.max_order);
  std::vector<AbelianGroup> with_p;
  for (const auto& g : groups)
    if (g.order() % p == 0) with_p.push_back(g);
  const AbelianGroup G = (pick(2) == 0 && !with_p.empty()) ? with_p[pick(with_p.size())]
                                                           : groups[pick(groups.size())];
  CoverDatum c;
  c.group = G;
  c.p = p;
  c.r = static_cast<std::uint32_t>(1 + pick(opt.max_r));
  c.base_exponent = static_cast<std::uint32_t>(1 + pick(opt.max_base_exponent));
  c.g_base = static_cast<std::int64_t>(pick(3));
  c.weakly_ramified = true;
  c.origin = CoverOrigin::Synthetic;
  const std::uint64_t Q = c.base_field_size();

  auto random_decomposition = [&](const Subgroup& I) {
    if (pick(2) == 0) return I;
    return I.join(Subgroup::generated(G, {pick(G.order())}));
  };

  std::vector<std::size_t> tame_gens, wild_gens;
  for (std::size_t x = 1; x < G.order(); ++x) {
    if (G.element_order(x) % p != 0) tame_gens.push_back(x);
    if (G.element_order(x) == p) wild_gens.push_back(x);
  }
  const std::size_t pairs = tame_gens.empty() ? 0 : pick(3);
  for (std::size_t k = 0; k < pairs; ++k) {
    Subgroup I = Subgroup::generated(G, {tame_gens[pick(tame_gens.size())]});
    const std::uint32_t e = static_cast<std::uint32_t>(I.order());
    std::uint32_t deg = c.r * static_cast<std::uint32_t>(nt::mult_order(nt::pow_mod(Q, c.r, e), e));
    if (pick(3) == 0) deg *= 2;
    auto size = nt::checked_pow(Q, deg, opt.max_residue_field);
    if (!size) continue;
    std::vector<std::size_t> faithful;
    for (std::size_t chi = 0; chi < G.order(); ++chi)
      if (I.restricted_order(chi) == e) faithful.push_back(G.p_prime_part(chi, p));
    const std::size_t w = faithful[pick(faithful.size())];
    PlaceDatum a;
    a.degree = deg;
    a.e_t = e;
    a.e_w = 1;
    a.inertia = I;
    a.decomposition = random_decomposition(I);
    a.wild = Subgroup::trivial(G);
    a.cotangent = w;
    PlaceDatum b = a;
    b.cotangent = G.char_inv(w);
    a.label = "t" + std::to_string(2 * k);
    b.label = "t" + std::to_string(2 * k + 1);
    c.places.push_back(std::move(a));
    c.places.push_back(std::move(b));
  }
  const std::size_t wild = wild_gens.empty() ? 0 : pick(3);
  for (std::size_t k = 0; k < wild; ++k) {
    std::vector<std::size_t> gens{wild_gens[pick(wild_gens.size())]};
    if (pick(2) == 0) gens.push_back(wild_gens[pick(wild_gens.size())]);
    Subgroup I = Subgroup::generated(G, gens);
    PlaceDatum d;
    d.label = "w" + std::to_string(k);
    d.degree = c.r * static_cast<std::uint32_t>(1 + pick(2));
    d.e_t = 1;
    d.e_w = static_cast<std::uint32_t>(I.order());
    d.inertia = I;
    d.decomposition = random_decomposition(I);
    d.wild = I;
    d.cotangent = 0;
    c.places.push_back(std::move(d));
  }
  while (cover_genus(c) < 0) ++c.g_base;
  validate_cover(c);
  return c;
}

CoverDatum subcover_data(const CoverDatum& cover, const Subgroup& H) {
  if (cover.origin == CoverOrigin::Synthetic)
    fail(ErrorKind::Unsupported, "subcover data needs a constructed cover");
  if (H.ambient() != cover.group) fail(ErrorKind::GroupMismatch, "H is not a subgroup of G");
  const auto& G = cover.group;
  const auto& s = H.structure();
  CoverDatum out;
  out.group = s.group;
  out.p = cover.p;
  out.r = cover.r;
  out.base_exponent = cover.base_exponent;
  out.weakly_ramified = cover.weakly_ramified;
  out.origin = CoverOrigin::Subcover;
  out.name = cover.name + "/H" + std::to_string(H.order());

  const std::int64_t index_H = static_cast<std::int64_t>(G.order() / H.order());
  std::int64_t R = 0;
  for (const auto& pl : cover.places) {
    Subgroup IH = pl.inertia.join(H), WH = pl.wild.join(H), DH = pl.decomposition.join(H);
    const std::int64_t e = static_cast<std::int64_t>(IH.order() / H.order());
    const std::int64_t ew = static_cast<std::int64_t>(WH.order() / H.order());
    const std::int64_t points = static_cast<std::int64_t>(G.order() / IH.order());
    R += static_cast<std::int64_t>(pl.degree) * points * ((e - 1) + (ew - 1));

    Subgroup I = pl.inertia.intersect(H);
    if (I.order() == 1) continue;
    Subgroup W = pl.wild.intersect(H), D = pl.decomposition.intersect(H);
    PlaceDatum z;
    z.degree = pl.degree * static_cast<std::uint32_t>(DH.order() / IH.order());
    z.e_w = static_cast<std::uint32_t>(W.order());
    z.e_t = static_cast<std::uint32_t>(I.order() / W.order());
    z.inertia = H.localize(I);
    z.decomposition = H.localize(D);
    z.wild = H.localize(W);
    z.cotangent = s.group.p_prime_part(s.restrict_character(G, pl.cotangent), cover.p);
    const std::size_t count = G.order() / DH.order();
    for (std::size_t k = 0; k < count; ++k) {
      PlaceDatum copy = z;
      copy.label = pl.label + (count > 1 ? "#" + std::to_string(k) : "");
      out.places.push_back(std::move(copy));
    }
  }
  const std::int64_t r = cover.r;
  std::int64_t rhs = index_H * r * (2 * cover.g_base - 2) + R;
  if (rhs % (2 * r) != 0) fail(ErrorKind::Validation, "quotient genus is not integral");
  out.g_base = rhs / (2 * r) + 1;
  validate_cover(out);
  return out;
}

}  // namespace galmod
