// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#include "galmod/verify.hpp"

#include <algorithm>
#include <sstream>

#include "galmod/error.hpp"
#include "galmod/euler_char.hpp"
#include "galmod/numtheory.hpp"
#include "galmod/parallel.hpp"

namespace galmod {

bool ReportSection::ok() const {
  return !evaluated || std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
}

bool VerificationReport::ok() const {
  for (const auto& s : sections)
    if (!s.ok()) return false;
  for (const auto& f : {strong_ok, weak_ok, integral_ok, invariance_ok, restriction_ok})
    if (f && !*f) return false;
  return true;
}

namespace {

void and_flag(std::optional<bool>& into, const std::optional<bool>& other) {
  if (!other) return;
  into = into.value_or(true) && *other;
}

std::string rows_label(const AbelianGroup& g, std::size_t chi) { return g.label(chi); }

bool all_pass(const ReportSection& s) { return s.ok(); }

VerificationReport new_report(const CoverDatum& cover, const EpsilonOptions& opt) {
  VerificationReport rep;
  rep.cover = cover_summary(cover);
  rep.oracle = to_string(opt.oracle);
  rep.convention = to_string(opt.convention);
  return rep;
}

// Sum over wild places of deg(q) [Ind_{I_q}^G 1] at CharZero.
K0Element wild_induced(const CoverDatum& cover) {
  K0Element out(cover.group, Level::CharZero);
  for (const auto& pl : cover.places) {
    if (!pl.is_wild()) continue;
    const auto& s = pl.inertia.structure();
    out += induce(K0Element::basis(s.group, Level::CharZero, 0), pl.inertia) *
           Rational(static_cast<long>(pl.degree));
  }
  return out;
}

ReportSection compare(const std::string& name, const std::string& lhs_name,
                      const std::string& rhs_name, const K0Element& lhs, const K0Element& rhs) {
  ReportSection sec;
  sec.name = name;
  sec.lhs_name = lhs_name;
  sec.rhs_name = rhs_name;
  const auto& g = lhs.group();
  for (auto label : lhs.labels()) {
    ReportRow row;
    row.label = g.label(label);
    row.lhs = lhs.coefficient(label);
    row.rhs = rhs.coefficient(label);
    row.pass = row.lhs == row.rhs;
    sec.rows.push_back(std::move(row));
  }
  return sec;
}

void require_prime_base(const CoverDatum& cover) {
  if (cover.base_exponent != 1)
    fail(ErrorKind::Unsupported, "the epsilon formulas are checked over an F_p base only");
}

}  // namespace

void VerificationReport::merge(const VerificationReport& other) {
  if (cover.empty()) cover = other.cover;
  if (oracle.empty()) oracle = other.oracle;
  if (convention.empty()) convention = other.convention;
  sections.insert(sections.end(), other.sections.begin(), other.sections.end());
  and_flag(strong_ok, other.strong_ok);
  and_flag(weak_ok, other.weak_ok);
  and_flag(integral_ok, other.integral_ok);
  and_flag(invariance_ok, other.invariance_ok);
  and_flag(restriction_ok, other.restriction_ok);
}

std::string cover_summary(const CoverDatum& cover) {
  std::ostringstream os;
  os << (cover.name.empty() ? to_string(cover.origin) : cover.name) << " G=";
  if (cover.group.rank() == 0) os << "1";
  for (std::size_t i = 0; i < cover.group.rank(); ++i)
    os << (i ? "xZ/" : "Z/") << cover.group.invariants()[i];
  os << " |G|=" << cover.group.order() << " p=" << cover.p << " r=" << cover.r;
  if (cover.base_exponent != 1) os << " s=" << cover.base_exponent;
  os << " g_Y=" << cover.g_base << " places=" << cover.places.size()
     << (cover.weakly_ramified ? " weak" : " general");
  return os.str();
}

VerificationReport check_strong(const CoverDatum& cover, const EpsilonOptions& opt) {
  if (!cover.weakly_ramified)
    fail(ErrorKind::Unsupported, "the strong formula is only stated for weakly ramified covers");
  require_prime_base(cover);
  const auto& G = cover.group;
  auto rep = new_report(cover, opt);
  const DivisorSpec Dw = DivisorSpec::wild_canonical(cover);
  const K0Element lifted = e_map(psi_structure(cover, Dw));
  auto rows = parallel_map<ReportRow>(G.order(), opt.exec, [&](std::size_t chi) {
    const std::size_t eval = opt.convention == Convention::Inverted ? G.char_inv(chi) : chi;
    const auto led = epsilon_ledger(cover, eval, opt);
    Rational tame = 0, wild = 0;
    for (const auto& loc : led.locals) (loc.kind == EpsKind::Tame ? tame : wild) += loc.valuation;
    const Rational closed = multiplicity_closed(cover, Dw, chi);
    const Rational via_pairing = lifted.coefficient(chi);
    Rational ind = 0;
    for (const auto& pl : cover.places)
      if (pl.is_wild() && pl.inertia.character_trivial_on(chi)) ind += static_cast<long>(pl.degree);
    ReportRow row;
    row.label = rows_label(G, chi);
    row.lhs = -led.global_valuation;
    row.rhs = closed + ind;
    row.terms = {{"eps.base", led.base_term}, {"eps.tame", tame},       {"eps.wild", wild},
                 {"euler.closed", closed},    {"euler.pairing", via_pairing}, {"wild.ind", ind}};
    row.pass = row.lhs == row.rhs && closed == via_pairing;
    return row;
  });
  ReportSection sec;
  sec.name = "strong";
  sec.lhs_name = "-v_p(eps(chi))";
  sec.rhs_name = "<e(psi),chi> + wild";
  sec.rows = std::move(rows);
  bool integral = true;
  for (const auto& r : sec.rows) integral = integral && is_integer(r.lhs);
  rep.strong_ok = all_pass(sec);
  rep.integral_ok = integral;
  rep.sections.push_back(std::move(sec));
  return rep;
}

VerificationReport check_weak(const CoverDatum& cover, const EpsilonOptions& opt) {
  if (!has_complete_conductors(cover))
    fail(ErrorKind::IncompleteDatum, "conductors of wildly ramified characters are missing");
  if (!cover.weakly_ramified)
    fail(ErrorKind::Unsupported,
         "the structure sheaf side is only implemented for weakly ramified covers");
  require_prime_base(cover);
  auto rep = new_report(cover, opt);
  const K0Element E = E_element(cover, opt);
  const K0Element dE = decomposition_map(E, cover.p);
  const K0Element chiO = euler_char_structure_sheaf(cover);
  auto sec = compare("weak", "d(E)", "chi(G,X,O)", dE, chiO);
  rep.weak_ok = all_pass(sec);
  rep.integral_ok = E.is_integral() && dE.is_integral();
  rep.sections.push_back(std::move(sec));
  return rep;
}

VerificationReport check_restriction(const CoverDatum& cover, const Subgroup& H,
                                     const EpsilonOptions& opt) {
  require_prime_base(cover);
  const CoverDatum sub = subcover_data(cover, H);
  auto rep = new_report(cover, opt);
  const std::string tag = "restriction[|H|=" + std::to_string(H.order()) + "]";

  auto sec_e = compare(tag + ".E", "Res E(G,X)", "E(H,X)", restrict(E_element(cover, opt), H),
                       E_element(sub, opt));
  bool ok = all_pass(sec_e);
  rep.sections.push_back(std::move(sec_e));

  if (cover.weakly_ramified) {
    const K0Element rhs_g = e_map(psi_structure(cover, DivisorSpec::wild_canonical(cover))) +
                            wild_induced(cover);
    const K0Element rhs_h =
        e_map(psi_structure(sub, DivisorSpec::wild_canonical(sub))) + wild_induced(sub);
    auto sec_r = compare(tag + ".rhs", "Res RHS(G)", "RHS(H)", restrict(rhs_g, H), rhs_h);
    ok = ok && all_pass(sec_r);
    rep.sections.push_back(std::move(sec_r));
  }

  // Res_H Ind_I^G 1 = [G : IH] Ind_{I cap H}^H 1 for abelian G.
  ReportSection mackey;
  mackey.name = tag + ".mackey";
  mackey.lhs_name = "Res_H Ind_I 1";
  mackey.rhs_name = "[G:IH] Ind_{I cap H} 1";
  const auto& s = H.structure();
  for (std::size_t i = 0; i < cover.places.size(); ++i) {
    const auto& pl = cover.places[i];
    const auto& si = pl.inertia.structure();
    K0Element lhs = restrict(induce(K0Element::basis(si.group, Level::CharZero, 0), pl.inertia), H);
    const Subgroup local = H.localize(pl.inertia.intersect(H));
    const auto& sl = local.structure();
    const long index = static_cast<long>(cover.group.order() / pl.inertia.join(H).order());
    K0Element rhs = induce(K0Element::basis(sl.group, Level::CharZero, 0), local) * Rational(index);
    for (std::size_t chi = 0; chi < s.group.order(); ++chi) {
      ReportRow row;
      row.label = pl.label + ":" + s.group.label(chi);
      row.lhs = lhs.coefficient(chi);
      row.rhs = rhs.coefficient(chi);
      row.pass = row.lhs == row.rhs;
      mackey.rows.push_back(std::move(row));
    }
  }
  ok = ok && all_pass(mackey);
  rep.sections.push_back(std::move(mackey));
  rep.restriction_ok = ok;
  return rep;
}

CoverDatum twist_cotangents(const CoverDatum& cover, const std::vector<std::uint64_t>& powers) {
  CoverDatum out = cover;
  const std::uint64_t Q = cover.base_field_size();
  const auto& G = cover.group;
  for (std::size_t i = 0; i < out.places.size() && i < powers.size(); ++i) {
    auto& pl = out.places[i];
    const std::uint64_t k = nt::pow_mod(Q, powers[i], G.exponent());
    pl.cotangent = G.char_pow(pl.cotangent, static_cast<std::int64_t>(k));
  }
  validate_cover(out);
  return out;
}

CoverDatum rechoose_cotangent_extensions(const CoverDatum& cover) {
  CoverDatum out = cover;
  const auto& G = cover.group;
  for (std::size_t i = 0; i < out.places.size(); ++i) {
    auto& pl = out.places[i];
    std::vector<std::size_t> off;
    for (auto chi : G.p_prime_characters(cover.p))
      if (chi != 0 && pl.inertia.character_trivial_on(chi)) off.push_back(chi);
    if (off.empty()) continue;
    pl.cotangent = G.char_mul(pl.cotangent, off[i % off.size()]);
  }
  validate_cover(out);
  return out;
}

namespace {

struct Snapshot {
  K0Element E;
  std::optional<K0Element> psi, chiO;
  std::vector<Rational> closed, direct;
};

Snapshot snapshot(const CoverDatum& cover, const EpsilonOptions& opt) {
  Snapshot s;
  s.E = E_element(cover, opt);
  if (cover.weakly_ramified) {
    const auto Dw = DivisorSpec::wild_canonical(cover);
    s.psi = psi_structure(cover, Dw);
    s.chiO = euler_char_structure_sheaf(cover);
    for (std::size_t chi = 0; chi < cover.group.order(); ++chi) {
      s.closed.push_back(multiplicity_closed(cover, Dw, chi));
      s.direct.push_back(multiplicity_direct(cover, Dw, chi));
    }
  }
  return s;
}

void compare_snapshots(const std::string& variant, const AbelianGroup& g, const Snapshot& a,
                       const Snapshot& b, ReportSection& sec) {
  auto add_k0 = [&](const std::string& what, const K0Element& x, const K0Element& y) {
    for (auto label : x.labels()) {
      ReportRow row;
      row.label = variant + ":" + what + ":" + g.label(label);
      row.lhs = x.coefficient(label);
      row.rhs = y.coefficient(label);
      row.pass = row.lhs == row.rhs;
      sec.rows.push_back(std::move(row));
    }
  };
  add_k0("E", a.E, b.E);
  if (a.psi && b.psi) add_k0("psi", *a.psi, *b.psi);
  if (a.chiO && b.chiO) add_k0("chiO", *a.chiO, *b.chiO);
  for (std::size_t chi = 0; chi < a.closed.size(); ++chi) {
    ReportRow row;
    row.label = variant + ":mult:" + g.label(chi);
    row.lhs = a.closed[chi];
    row.rhs = b.closed[chi];
    row.terms = {{"direct.base", a.direct[chi]}, {"direct.variant", b.direct[chi]}};
    row.pass = row.lhs == row.rhs && a.direct[chi] == b.direct[chi] && a.direct[chi] == a.closed[chi];
    sec.rows.push_back(std::move(row));
  }
}

}  // namespace

VerificationReport check_invariance(const CoverDatum& cover, const EpsilonOptions& opt) {
  auto rep = new_report(cover, opt);
  ReportSection sec;
  sec.name = "invariance";
  sec.lhs_name = "baseline";
  sec.rhs_name = "variant";
  const Snapshot base = snapshot(cover, opt);
  const auto& G = cover.group;

  std::uint32_t max_span = 1;
  for (const auto& pl : cover.places)
    max_span = std::max<std::uint32_t>(
        max_span, pl.degree * static_cast<std::uint32_t>(pl.decomposition.order() / pl.inertia.order()));
  // Uniform Frobenius twists d -> d Q^j (residue embedding changes).
  for (std::uint32_t j = 1; j < max_span; ++j) {
    std::vector<std::uint64_t> powers(cover.places.size(), j);
    compare_snapshots("frob^" + std::to_string(j), G, base, snapshot(twist_cotangents(cover, powers), opt), sec);
  }
  // Independent twists per place.
  if (cover.places.size() > 1) {
    std::vector<std::uint64_t> powers;
    for (std::size_t i = 0; i < cover.places.size(); ++i) powers.push_back(i + 1);
    compare_snapshots("frob-mixed", G, base, snapshot(twist_cotangents(cover, powers), opt), sec);
  }
  // A different point above q: its residue field is reached through a
  // Frobenius power of k(q~) over k(q), i.e. d -> d Q^{deg}.
  {
    std::vector<std::uint64_t> powers;
    for (const auto& pl : cover.places) powers.push_back(pl.degree);
    compare_snapshots("conjugate-point", G, base, snapshot(twist_cotangents(cover, powers), opt), sec);
  }
  compare_snapshots("cotangent-extension", G, base,
                    snapshot(rechoose_cotangent_extensions(cover), opt), sec);
  {
    CoverDatum rev = cover;
    std::reverse(rev.places.begin(), rev.places.end());
    compare_snapshots("place-order", G, base, snapshot(rev, opt), sec);
  }
  rep.invariance_ok = all_pass(sec);
  rep.sections.push_back(std::move(sec));
  return rep;
}

VerificationReport verify_all(const CoverDatum& cover, const EpsilonOptions& opt) {
  auto rep = new_report(cover, opt);
  if (cover.weakly_ramified) rep.merge(check_strong(cover, opt));
  rep.merge(check_weak(cover, opt));
  rep.merge(check_invariance(cover, opt));
  if (cover.origin == CoverOrigin::Synthetic) {
    ReportSection skip;
    skip.name = "restriction";
    skip.evaluated = false;
    skip.note = "not evaluated: subcover data needs a constructed cover";
    rep.sections.push_back(std::move(skip));
  } else {
    for (const auto& H : all_subgroups(cover.group)) rep.merge(check_restriction(cover, H, opt));
  }
  return rep;
}

}  // namespace galmod
