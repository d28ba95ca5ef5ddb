// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#include "galmod/euler_char.hpp"

#include "galmod/error.hpp"
#include "galmod/numtheory.hpp"

namespace galmod {

DivisorSpec DivisorSpec::wild_canonical(const CoverDatum& cover) {
  DivisorSpec D;
  D.at_place.resize(cover.places.size(), 0);
  for (std::size_t i = 0; i < cover.places.size(); ++i)
    if (cover.places[i].is_wild()) D.at_place[i] = -1;
  return D;
}

LMParts lm_decompose(std::uint32_t e_t, std::uint32_t e_w, std::int64_t n) {
  if (e_t < 1 || e_w < 1) fail(ErrorKind::InvalidInput, "ramification indices must be positive");
  const std::int64_t w = e_w, t = e_t;
  if (nt::mod(n + 1, e_w) != 0)
    fail(ErrorKind::InvalidDivisor,
         "n = " + std::to_string(n) + " is not -1 mod e_w = " + std::to_string(e_w));
  const std::int64_t k = (n + 1) / w - 1;
  LMParts out;
  out.l = static_cast<std::int64_t>(nt::mod(k, e_t));
  out.m = (k - out.l) / t;
  return out;
}

LMParts lm_decompose(const PlaceDatum& place, std::int64_t n) {
  return lm_decompose(place.e_t, place.e_w, n);
}

Rational g_term(std::int64_t l, std::int64_t e, std::int64_t d, std::uint64_t q_base,
                std::uint64_t i) {
  if (e < 1 || l < 0 || l >= e) fail(ErrorKind::Domain, "g_term needs 0 <= l < e");
  if (d < 0 || d >= e) fail(ErrorKind::Domain, "g_term needs 0 <= d < e");
  const auto ue = static_cast<std::uint64_t>(e);
  const std::uint64_t x = static_cast<std::uint64_t>(d) * nt::pow_mod(q_base, i, ue) % ue;
  Rational frac = make_rational(static_cast<std::int64_t>(x), e);
  if (frac >= 1 - make_rational(l, e)) frac -= 1;
  return frac;
}

void validate_divisor(const CoverDatum& cover, const DivisorSpec& D) {
  if (!D.at_place.empty() && D.at_place.size() != cover.places.size())
    fail(ErrorKind::InvalidDivisor, "divisor must list one value per ramified place");
  for (std::size_t i = 0; i < cover.places.size(); ++i)
    (void)lm_decompose(cover.places[i], D.value(i));
  for (const auto& [deg, n] : D.unramified) {
    (void)n;
    if (deg < 1 || deg % cover.r != 0)
      fail(ErrorKind::InvalidDivisor, "unramified divisor places need a degree divisible by r");
  }
}

namespace {

void require_weak(const CoverDatum& cover) {
  if (!cover.weakly_ramified)
    fail(ErrorKind::Unsupported, "the structure formula needs a weakly ramified cover");
}

// r (1 - g) + sum deg(q) m_q over ramified and listed unramified places.
Rational constant_term(const CoverDatum& cover, const DivisorSpec& D) {
  std::int64_t acc = static_cast<std::int64_t>(cover.r) * (1 - cover.g_base);
  for (std::size_t i = 0; i < cover.places.size(); ++i)
    acc += static_cast<std::int64_t>(cover.places[i].degree) *
           lm_decompose(cover.places[i], D.value(i)).m;
  for (const auto& [deg, n] : D.unramified) acc += static_cast<std::int64_t>(deg) * n;
  return Rational(static_cast<long>(acc));
}

}  // namespace

std::int64_t divisor_degree(const CoverDatum& cover, const DivisorSpec& D) {
  const std::int64_t n = static_cast<std::int64_t>(cover.group.order());
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < cover.places.size(); ++i) {
    const auto& pl = cover.places[i];
    const std::int64_t e = static_cast<std::int64_t>(pl.e_t) * pl.e_w;
    acc += D.value(i) * static_cast<std::int64_t>(pl.degree) * (n / e);
  }
  for (const auto& [deg, v] : D.unramified) acc += v * static_cast<std::int64_t>(deg) * n;
  return acc;
}

K0Element psi_structure(const CoverDatum& cover, const DivisorSpec& D) {
  require_weak(cover);
  validate_divisor(cover, D);
  const auto& G = cover.group;
  const std::uint32_t p = cover.p;
  const std::uint64_t Q = cover.base_field_size();
  K0Element psi(G, Level::ModularProjectives, p);
  for (std::size_t i = 0; i < cover.places.size(); ++i) {
    const auto& pl = cover.places[i];
    if (pl.e_t == 1) continue;
    const auto& s = pl.inertia.structure();
    const std::size_t omega = s.restrict_character(G, pl.cotangent);
    const std::int64_t l = lm_decompose(pl, D.value(i)).l;
    auto projective = [&](std::int64_t k) {
      return induce(K0Element::basis(s.group, Level::ModularProjectives,
                                     s.group.char_pow(omega, k), p),
                    pl.inertia);
    };
    for (std::uint32_t j = 0; j < pl.degree; ++j) {
      const auto qj = static_cast<std::int64_t>(nt::pow_mod(Q, j, pl.e_t));
      // Points of X above q: n/e per residue embedding, each weighted 1/n.
      for (std::int64_t d = 1; d < pl.e_t; ++d)
        psi += projective(d * qj) * make_rational(-d, pl.e_t);
      for (std::int64_t d = 1; d <= l; ++d) psi += projective(-d * qj);
    }
  }
  psi += K0Element::regular(G, Level::ModularProjectives, p) * constant_term(cover, D);
  if (!psi.is_integral())
    fail(ErrorKind::Integrality, "psi(G, X, D) has a non-integral coefficient: " + psi.to_string());
  return psi;
}

Rational multiplicity_closed(const CoverDatum& cover, const DivisorSpec& D, std::size_t chi) {
  require_weak(cover);
  validate_divisor(cover, D);
  const std::uint64_t Q = cover.base_field_size();
  Rational acc = constant_term(cover, D);
  for (std::size_t i = 0; i < cover.places.size(); ++i) {
    const auto& pl = cover.places[i];
    if (!pl.is_tame()) continue;
    const std::int64_t d = tame_index(cover, pl, chi);
    const std::int64_t l = lm_decompose(pl, D.value(i)).l;
    for (std::uint32_t j = 0; j < pl.degree; ++j)
      acc -= g_term(l, pl.e_t, d, Q, j);
  }
  return acc;
}

Rational multiplicity_direct(const CoverDatum& cover, const DivisorSpec& D, std::size_t chi) {
  require_weak(cover);
  validate_divisor(cover, D);
  const auto& G = cover.group;
  const std::uint64_t Q = cover.base_field_size();
  const std::size_t target = G.p_prime_part(chi, cover.p);
  Rational acc = constant_term(cover, D);
  for (std::size_t i = 0; i < cover.places.size(); ++i) {
    const auto& pl = cover.places[i];
    if (pl.e_t == 1) continue;
    const std::int64_t e = pl.e_t;
    const std::int64_t f = static_cast<std::int64_t>(pl.decomposition.order() / pl.inertia.order());
    const std::int64_t l = lm_decompose(pl, D.value(i)).l;
    // Every embedding of k(q~) is a Frobenius power F^j, j < deg f; the
    // cotangent character composed with it is omega^{Q^j} on inertia.
    std::int64_t index_sum = 0, hits = 0;
    const std::uint64_t embeddings = std::uint64_t{pl.degree} * f;
    for (std::uint64_t j = 0; j < embeddings; ++j) {
      const std::size_t base = G.char_pow(pl.cotangent,
                                          static_cast<std::int64_t>(nt::pow_mod(Q, j, e)));
      std::int64_t found = -1;
      std::size_t w = 0;
      for (std::int64_t d = 0; d < e; ++d) {
        if (pl.inertia.characters_agree_on(w, target)) {
          found = d;
          break;
        }
        w = G.char_mul(w, base);
      }
      if (found < 0) fail(ErrorKind::Validation, "cotangent character does not generate");
      index_sum += found;
      if (found >= e - l) ++hits;
    }
    acc -= make_rational(index_sum, e * f);
    acc += make_rational(hits, f);
  }
  return acc;
}

K0Element euler_char_structure_sheaf(const CoverDatum& cover) {
  K0Element out = cartan_map(psi_structure(cover, DivisorSpec::wild_canonical(cover)));
  for (const auto& pl : cover.places) {
    if (!pl.is_wild()) continue;
    const auto& s = pl.inertia.structure();
    K0Element ind = induce(K0Element::basis(s.group, Level::CharZero, 0), pl.inertia);
    out += decomposition_map(ind, cover.p) * Rational(static_cast<long>(pl.degree));
  }
  return out;
}

}  // namespace galmod
