// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "galmod/polyfp.hpp"
#include "galmod/rep_k0.hpp"

namespace galmod {

// Ramification data at one closed point q of the base (a fixed point above
// it in the cover).
struct PlaceDatum {
  std::string label;
  std::uint32_t degree = 1;  // [k(q) : base field]
  std::uint32_t e_t = 1;
  std::uint32_t e_w = 1;
  Subgroup inertia;
  Subgroup decomposition;
  Subgroup wild;
  // Prime-to-p character of G whose restriction to the inertia group is the
  // cotangent character: order e_t on inertia, kernel exactly `wild`.
  std::size_t cotangent = 0;
  // Conductors of characters nontrivial on `wild`.  Only needed when the
  // cover is not weakly ramified (weak ramification forces the value 2).
  std::map<std::size_t, std::uint32_t> conductors;

  bool is_tame() const { return e_t > 1 && e_w == 1; }
  bool is_wild() const { return e_w > 1; }
};

enum class CoverOrigin { Synthetic, Kummer, ArtinSchreier, Subcover };
const char* to_string(CoverOrigin origin);

struct CoverDatum {
  AbelianGroup group;
  std::uint32_t p = 2;
  std::uint32_t r = 1;              // degree of the constant field over the base field
  std::uint32_t base_exponent = 1;  // base field F_{p^s}; s = 1 is the F_p base
  std::int64_t g_base = 0;
  std::vector<PlaceDatum> places;  // ramified places only
  bool weakly_ramified = true;
  CoverOrigin origin = CoverOrigin::Synthetic;
  std::string name;

  std::uint64_t base_field_size() const;
};

// Throws Validation (or a more specific kind) naming the failed invariant.
void validate_cover(const CoverDatum& cover);

// d in [0, e_t) with Res_I chi_{p'} = Res_I omega^d.
std::uint32_t tame_index(const CoverDatum& cover, const PlaceDatum& place, std::size_t chi);
// 0 unramified, 1 tame, >= 2 wild.
std::uint32_t conductor(const CoverDatum& cover, const PlaceDatum& place, std::size_t chi);
bool has_complete_conductors(const CoverDatum& cover);

// Genus of the cover from the conductor-discriminant formula.
std::int64_t cover_genus(const CoverDatum& cover);

// A closed point of P^1 over F_p.
struct P1Place {
  bool infinite = false;
  fp::Poly poly;  // monic irreducible when finite
  std::uint32_t degree() const { return infinite ? 1u : static_cast<std::uint32_t>(fp::degree(poly)); }
  std::string label() const { return infinite ? "inf" : fp::render(poly); }
  bool operator<(const P1Place& o) const;
  bool operator==(const P1Place& o) const { return infinite == o.infinite && poly == o.poly; }
};

struct RationalFunctionDivisor {
  std::uint32_t p = 2;
  std::vector<std::pair<P1Place, std::int64_t>> terms;

  // Merges repeated places, drops zero multiplicities, sorts, and checks
  // that finite places are monic irreducible.
  void normalize();
  // Adds the infinite place so the degree-weighted sum is zero; errors if an
  // explicit infinite multiplicity disagrees.
  void complete_at_infinity();
};

CoverDatum kummer_cover(std::uint32_t p, std::uint32_t n, RationalFunctionDivisor f);
// Poles of f carry negative multiplicity -order; positive entries are ignored.
CoverDatum artin_schreier_cover(std::uint32_t p, RationalFunctionDivisor f);
CoverDatum synthetic_cover(const AbelianGroup& group, std::uint32_t p, std::uint32_t r,
                           std::int64_t g_base, std::vector<PlaceDatum> places,
                           bool weakly_ramified = true, std::uint32_t base_exponent = 1);

struct RandomCoverOptions {
  std::vector<std::uint32_t> primes{2, 3, 5, 7};
  std::size_t max_order = 24;
  std::uint32_t max_r = 1;
  std::uint32_t max_base_exponent = 1;
  std::uint64_t max_residue_field = 50000;
};

// A valid weakly ramified synthetic datum.  Tame places come in pairs with
// inverse cotangent characters.
CoverDatum random_weakly_ramified_cover(std::mt19937_64& rng, const RandomCoverOptions& opt = {});

// The cover X -> X/H.  Only for constructed (Kummer, Artin-Schreier, or
// their subcovers) data.
CoverDatum subcover_data(const CoverDatum& cover, const Subgroup& H);

// All abelian groups of order <= n as invariant factor lists.
std::vector<AbelianGroup> abelian_groups_up_to(std::size_t n);

}  // namespace galmod
