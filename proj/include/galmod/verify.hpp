// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galmod/cover.hpp"
#include "galmod/epsilon.hpp"
#include "galmod/rational.hpp"

namespace galmod {

struct ReportTerm {
  std::string name;
  Rational value;
};

// pass <=> lhs == rhs (exact) and every side condition of the row holds.
struct ReportRow {
  std::string label;
  Rational lhs = 0;
  Rational rhs = 0;
  std::vector<ReportTerm> terms;
  bool pass = false;
};

struct ReportSection {
  std::string name;
  std::string lhs_name;
  std::string rhs_name;
  bool evaluated = true;
  std::string note;
  std::vector<ReportRow> rows;

  bool ok() const;
};

struct VerificationReport {
  std::string cover;
  std::string oracle;
  std::string convention;
  std::vector<ReportSection> sections;
  std::optional<bool> strong_ok;
  std::optional<bool> weak_ok;
  std::optional<bool> integral_ok;
  std::optional<bool> invariance_ok;
  std::optional<bool> restriction_ok;

  bool ok() const;
  // Appends sections and combines flags with logical and.
  void merge(const VerificationReport& other);
};

std::string cover_summary(const CoverDatum& cover);

// -v_p(eps(chi)) against <e(psi(G,X)), chi> + sum over wild q of deg(q) [chi trivial on I_q].
VerificationReport check_strong(const CoverDatum& cover, const EpsilonOptions& opt = {});
// d(E(G,X)) against chi(G, X, O_X).
VerificationReport check_weak(const CoverDatum& cover, const EpsilonOptions& opt = {});
// Res_H E(G,X) against E(H,X), plus the restricted right-hand side and the
// Mackey identity for every wild induced term.
VerificationReport check_restriction(const CoverDatum& cover, const Subgroup& H,
                                     const EpsilonOptions& opt = {});
// Frobenius twists of the cotangent data, re-chosen extensions of the
// cotangent character off inertia, and reversed place order.
VerificationReport check_invariance(const CoverDatum& cover, const EpsilonOptions& opt = {});

// strong (when weakly ramified), weak, invariance, and restriction to every
// subgroup for constructed covers.
VerificationReport verify_all(const CoverDatum& cover, const EpsilonOptions& opt = {});

// Cover variants used by check_invariance; exposed for tests.
CoverDatum twist_cotangents(const CoverDatum& cover, const std::vector<std::uint64_t>& powers);
CoverDatum rechoose_cotangent_extensions(const CoverDatum& cover);

}  // namespace galmod
