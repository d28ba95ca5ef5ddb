// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "galmod/cover.hpp"

namespace galmod {

// JSON cover description.  Two forms are accepted:
//   {"kummer": {"p": 5, "n": 2, "f": [[[0, 1], 1], [[4, 1], 1]]}}
//   {"artin_schreier": {"p": 3, "f": [[[0, 1], -1], ["inf", -1]]}}
// with f a list of (place, multiplicity), a place being the coefficient
// array of a monic irreducible polynomial (constant term first) or "inf";
// or an explicit datum
//   {"group": [2, 6], "p": 3, "r": 1, "base_exponent": 1, "g_base": 0,
//    "weakly_ramified": true, "name": "...", "origin": "synthetic",
//    "places": [{"label": "q0", "degree": 1, "e_t": 2, "e_w": 1,
//                "inertia": [[0, 3]], "decomposition": [[0, 3]], "wild": [],
//                "cotangent": [0, 3], "conductors": [{"character": [1, 0], "conductor": 3}]}]}
// where subgroups are lists of generator tuples and characters are exponent
// tuples.  Unknown fields are rejected.  Errors are Parse errors naming the
// offending JSON path.
nlohmann::json cover_to_json(const CoverDatum& cover);
CoverDatum cover_from_json(const nlohmann::json& j);
CoverDatum parse_cover_json(const std::string& text);

// Rational functions over F_p written like "x^2(x+4)/(x+1)^3" or
// "1/x + 1/(x-1) + x".  Parse errors report the character offset.
struct RationalFunction {
  fp::Poly num;
  fp::Poly den;  // monic, coprime to num
};
RationalFunction parse_rational_function(std::uint32_t p, const std::string& text);

// Divisor of f; the leading coefficient of f must be 1.
RationalFunctionDivisor kummer_divisor(std::uint32_t p, const RationalFunction& f);
// Pole divisor of f (negative multiplicities), including infinity.
RationalFunctionDivisor pole_divisor(std::uint32_t p, const RationalFunction& f);

// Builtin covers:
//   kummer:p=5,n=2,f=x(x-1)
//   as:p=3,f=1/x+1/(x-1)
//   trivial:p=3[,r=1][,g=0]
//   synthetic:seed=7[,order=24][,p=3]
CoverDatum builtin_cover(const std::string& spec);

struct CorpusEntry {
  std::string name;  // builtin spec reproducing the cover
  CoverDatum cover;
};

// Kummer covers for p <= 13 and n | p-1, 2 <= n <= 6, ten divisors each.
std::vector<CorpusEntry> kummer_corpus();
// Artin-Schreier covers for p in {2, 3, 5}, ten pole configurations each.
std::vector<CorpusEntry> artin_schreier_corpus();
// Kummer covers with n = 4 and n = 6 used for restriction checks.
std::vector<CorpusEntry> kummer_chain_corpus();

}  // namespace galmod
