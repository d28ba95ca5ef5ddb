// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "galmod/cover.hpp"
#include "galmod/rational.hpp"
#include "galmod/rep_k0.hpp"

namespace galmod {

// A G-invariant divisor on X, given by its value n_q at every point above
// each base place.  `at_place[i]` belongs to cover.places[i]; an empty vector
// means 0 at every ramified place.  Unramified places carrying a nonzero
// value are listed in `unramified` as (degree, n).
struct DivisorSpec {
  std::vector<std::int64_t> at_place;
  std::vector<std::pair<std::uint32_t, std::int64_t>> unramified;

  std::int64_t value(std::size_t place) const {
    return place < at_place.size() ? at_place[place] : 0;
  }
  // -1 at every wild place, 0 elsewhere.
  static DivisorSpec wild_canonical(const CoverDatum& cover);
};

struct LMParts {
  std::int64_t l = 0;
  std::int64_t m = 0;
  bool operator==(const LMParts&) const = default;
};

// n = (e_w - 1) + (l + m e_t) e_w with 0 <= l < e_t.
LMParts lm_decompose(const PlaceDatum& place, std::int64_t n);
LMParts lm_decompose(std::uint32_t e_t, std::uint32_t e_w, std::int64_t n);

// The representative of d q^i / e mod Z in [-l/e, 1 - l/e).
Rational g_term(std::int64_t l, std::int64_t e, std::int64_t d, std::uint64_t q_base,
                std::uint64_t i);

// Checks the congruences n_q = -1 mod e_w and the shape of D.
void validate_divisor(const CoverDatum& cover, const DivisorSpec& D);

// psi(G, X, D) at ModularProjectives; throws Integrality if a coefficient
// is not an integer.
K0Element psi_structure(const CoverDatum& cover, const DivisorSpec& D);

Rational multiplicity_closed(const CoverDatum& cover, const DivisorSpec& D, std::size_t chi);
Rational multiplicity_direct(const CoverDatum& cover, const DivisorSpec& D, std::size_t chi);

// chi(G, X, O_X) at ModularModules.
K0Element euler_char_structure_sheaf(const CoverDatum& cover);

// Degree of the pulled-back divisor on the geometric curve (all r components).
std::int64_t divisor_degree(const CoverDatum& cover, const DivisorSpec& D);

}  // namespace galmod
