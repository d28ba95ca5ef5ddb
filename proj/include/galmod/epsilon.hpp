// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galmod/cover.hpp"
#include "galmod/parallel.hpp"
#include "galmod/rational.hpp"
#include "galmod/rep_k0.hpp"

namespace galmod {

// Which leg evaluates v_p of a residue-field Gauss sum.  Both computes the
// two and throws OracleMismatch on disagreement.
enum class GaussOracle { Stickelberger, Padic, Both };
const char* to_string(GaussOracle oracle);

// Standard: the coefficient of chi in E is -v_p(eps(chi)).  Inverted uses
// chi^{-1} instead; kept for auditing the sign convention.
enum class Convention { Standard, Inverted };
const char* to_string(Convention convention);

enum class EpsKind { Unramified, Tame, Wild };
const char* to_string(EpsKind kind);

struct LocalEpsilonVal {
  std::size_t place = 0;  // index into CoverDatum::places
  EpsKind kind = EpsKind::Unramified;
  Rational valuation = 0;
  std::optional<std::uint64_t> gauss_index;  // residue character index when tame
  std::optional<std::uint32_t> tame_index;
};

struct EpsilonLedger {
  std::size_t character = 0;
  Rational base_term = 0;  // r (g_base - 1)
  std::vector<LocalEpsilonVal> locals;  // ramified-for-chi places only
  Rational global_valuation = 0;
};

struct EpsilonOptions {
  GaussOracle oracle = GaussOracle::Padic;
  Convention convention = Convention::Standard;
  std::optional<unsigned> precision;  // lambda-adic precision for the p-adic leg
  Exec exec = Exec::Parallel;
};

// v_p(tau(chi_c)) over F_{p^deg}, memoized per (p, deg, c, oracle, precision).
Rational gauss_valuation(std::uint32_t p, std::uint32_t deg, std::uint64_t c,
                         GaussOracle oracle, std::optional<unsigned> precision = std::nullopt);

LocalEpsilonVal local_epsilon(const CoverDatum& cover, std::size_t place, std::size_t chi,
                              const EpsilonOptions& opt = {});
EpsilonLedger epsilon_ledger(const CoverDatum& cover, std::size_t chi,
                             const EpsilonOptions& opt = {});
Rational global_epsilon_valuation(const CoverDatum& cover, std::size_t chi,
                                  const EpsilonOptions& opt = {});

// E(G, X) at CharZero; honours opt.convention.
K0Element E_element(const CoverDatum& cover, const EpsilonOptions& opt = {});

}  // namespace galmod
