// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
//
// One PASS/FAIL line per acceptance criterion.  Exit status is nonzero if
// any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "galmod/cover_io.hpp"
#include "galmod/cyclotomic.hpp"
#include "galmod/epsilon.hpp"
#include "galmod/euler_char.hpp"
#include "galmod/numtheory.hpp"
#include "galmod/padic.hpp"
#include "galmod/parallel.hpp"
#include "galmod/stickelberger.hpp"
#include "galmod/verify.hpp"
#include "oracles.hpp"

using namespace galmod;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body,
            double limit_seconds = 0) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_seconds > 0 && secs > limit_seconds) {
    o.pass = false;
    o.detail += " (over the time limit)";
  }
  if (!o.pass) ++failures;
  std::printf("%s [%2d] %s: %s [%.2fs", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str(),
              secs);
  if (limit_seconds > 0) std::printf(" / limit %.0fs", limit_seconds);
  std::printf("]\n");
  std::fflush(stdout);
}

std::string fmt(std::size_t checked, std::size_t bad, const char* what) {
  std::ostringstream s;
  s << checked - bad << "/" << checked << " " << what;
  return s.str();
}

std::vector<CorpusEntry> full_corpus() {
  auto all = kummer_corpus();
  for (auto& e : artin_schreier_corpus()) all.push_back(std::move(e));
  return all;
}

std::vector<std::pair<std::uint32_t, unsigned>> prime_powers_upto(std::uint64_t limit) {
  std::vector<std::pair<std::uint32_t, unsigned>> out;
  for (std::uint32_t p = 2; p <= limit; ++p) {
    if (!nt::is_prime(p)) continue;
    std::uint64_t q = p;
    for (unsigned r = 1; q <= limit; ++r, q *= p) out.emplace_back(p, r);
  }
  return out;
}

}  // namespace

int main() {
  report(1, "Stickelberger: p-adic = digit sum = tame tuple, p in {2,3,5,7}, r <= 3", [] {
    std::size_t checked = 0, bad = 0;
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
      for (unsigned r = 1; r <= 3; ++r) {
        auto ctx = field_context(p, r);
        auto pp = ctx->prime_power();
        PadicGaussEngine eng(ctx, default_lambda_precision(*ctx));
        const auto full = TameLocalDatum::make(pp, pp.q - 1);
        for (std::uint64_t c = 0; c + 1 < pp.q; ++c) {
          const Rational a = eng.valuation(c);
          const Rational b = digit_sum_valuation(pp, c);
          const Rational s = stickelberger_valuation(full, static_cast<std::int64_t>(d_from_c(full, c)));
          ++checked;
          if (a != b || b != s) ++bad;
        }
      }
    return Outcome{bad == 0, fmt(checked, bad, "characters")};
  }, 60);

  report(2, "Gauss product identity tau * sigma_-1(tau) = chi(-1) q, q <= 343", [] {
    std::size_t checked = 0, bad = 0;
    double worst = 0;
    for (auto [p, r] : prime_powers_upto(343)) {
      auto ctx = field_context(p, r);
      std::vector<std::uint64_t> cs;
      for (std::uint64_t c = 1; c + 1 < ctx->q(); ++c) cs.push_back(c);
      // Small orders also go through the dense power-basis product.
      const bool dense = nt::euler_phi(gauss_order(*ctx)) <= 200;
      auto ok = parallel_map<char>(cs.size(), Exec::Parallel, [&](std::size_t i) -> char {
        if (!gauss_product_identity(*ctx, cs[i])) return 0;
        if (!dense) return 1;
        auto tau = gauss_sum(*ctx, cs[i]);
        return tau * twist_mult_part(tau, *ctx, -1) == gauss_product_target(*ctx, cs[i]);
      });
      for (std::size_t i = 0; i < cs.size(); ++i) {
        ++checked;
        if (!ok[i]) ++bad;
      }
      // Non-gating floating check on one character per field.
      if (ctx->q() > 2) {
        const auto counts = gauss_exponent_counts_parallel(*ctx, 1);
        std::complex<long double> z = 0;
        for (std::size_t k = 0; k < counts.size(); ++k)
          if (counts[k]) z += static_cast<long double>(counts[k]) * std::polar(1.0L, 2 * M_PIl * k / counts.size());
        const double a2 = static_cast<double>(std::norm(z));
        worst = std::max(worst, std::abs(a2 - double(ctx->q())) / double(ctx->q()));
      }
    }
    std::ostringstream s;
    s << fmt(checked, bad, "characters") << "; |tau|^2 = q to relative error " << worst
      << " (informational)";
    return Outcome{bad == 0, s.str()};
  });

  report(3, "tuple equality s(d) = c(c_from_d(d)) on 500 random instances", [] {
    std::mt19937_64 rng(500);
    const std::uint32_t primes[] = {2, 3, 5, 7, 11, 13};
    std::size_t checked = 0, bad = 0;
    while (checked < 500) {
      const std::uint32_t p = primes[rng() % 6];
      const unsigned r = 1 + rng() % 4;
      auto pp = PrimePower::make(p, r);
      if (pp.q > 50000) continue;
      auto divs = nt::divisors(pp.q - 1);
      const auto et = divs[rng() % divs.size()];
      const auto ew = nt::checked_pow(p, rng() % 3).value();
      auto datum = TameLocalDatum::make(pp, et, ew);
      const auto d = static_cast<std::int64_t>(rng() % et);
      ++checked;
      if (!(s_tuple(datum, d) == c_tuple(pp, c_from_d(datum, d)))) ++bad;
    }
    return Outcome{bad == 0, fmt(checked, bad, "instances")};
  });

  report(4, "d(e(P)) = c(P) for |G| <= 64, every p | |G|; Frobenius reciprocity", [] {
    std::size_t checked = 0, bad = 0, groups = 0;
    for (const auto& g : abelian_groups_up_to(64)) {
      ++groups;
      for (auto p64 : nt::prime_factors(g.order())) {
        const auto p = static_cast<std::uint32_t>(p64);
        for (auto l : K0Element(g, Level::ModularProjectives, p).labels()) {
          auto P = K0Element::basis(g, Level::ModularProjectives, l, p);
          ++checked;
          if (decomposition_map(e_map(P), p) != cartan_map(P)) ++bad;
        }
      }
    }
    std::mt19937_64 rng(200);
    auto pool = abelian_groups_up_to(64);
    std::size_t fr_bad = 0;
    for (int t = 0; t < 200; ++t) {
      const auto& g = pool[rng() % pool.size()];
      auto subs = all_subgroups(g);
      const auto& H = subs[rng() % subs.size()];
      auto x = K0Element::basis(g, Level::CharZero, rng() % g.order());
      auto y = K0Element::basis(H.structure().group, Level::CharZero, rng() % H.order());
      if (pairing(induce(y, H), x) != pairing(y, restrict(x, H))) ++fr_bad;
    }
    std::ostringstream s;
    s << fmt(checked, bad, "projectives") << " over " << groups << " groups; "
      << fmt(200, fr_bad, "reciprocity cases");
    return Outcome{bad == 0 && fr_bad == 0, s.str()};
  });

  report(5, "multiplicities: direct = closed = <e(psi), chi>", [] {
    std::size_t checked = 0, bad = 0, covers = 0;
    auto run = [&](const CoverDatum& c) {
      ++covers;
      const auto D = DivisorSpec::wild_canonical(c);
      const auto lifted = e_map(psi_structure(c, D));
      for (std::size_t chi = 0; chi < c.group.order(); ++chi) {
        const auto closed = multiplicity_closed(c, D, chi);
        ++checked;
        if (closed != multiplicity_direct(c, D, chi) || closed != lifted.coefficient(chi)) ++bad;
      }
    };
    for (const auto& e : full_corpus()) run(e.cover);
    for (const auto& e : kummer_chain_corpus())
      for (const auto& H : all_subgroups(e.cover.group)) run(subcover_data(e.cover, H));
    std::mt19937_64 rng(5);
    RandomCoverOptions opt;
    opt.max_r = 2;
    for (int t = 0; t < 200; ++t) run(random_weakly_ramified_cover(rng, opt));
    std::ostringstream s;
    s << fmt(checked, bad, "characters") << " on " << covers << " covers";
    return Outcome{bad == 0, s.str()};
  });

  report(6, "Riemann-Roch totals against the Hilbert-different oracle", [] {
    std::size_t checked = 0, bad = 0;
    auto run = [&](const CoverDatum& c, const DivisorSpec& D) {
      Rational total = 0;
      for (std::size_t chi = 0; chi < c.group.order(); ++chi) total += multiplicity_closed(c, D, chi);
      ++checked;
      if (total != oracle::riemann_roch_total(c, D)) ++bad;
    };
    for (const auto& e : full_corpus()) run(e.cover, DivisorSpec::wild_canonical(e.cover));
    std::mt19937_64 rng(6);
    for (int t = 0; t < 200; ++t) {
      auto c = random_weakly_ramified_cover(rng);
      DivisorSpec D;
      for (const auto& pl : c.places)
        D.at_place.push_back(static_cast<std::int64_t>(pl.e_w) * static_cast<std::int64_t>(rng() % 5) - 1);
      run(c, D);
    }
    return Outcome{bad == 0, fmt(checked, bad, "divisors")};
  });

  report(7, "strong formula with the p-adic LHS on the Kummer and Artin-Schreier corpora", [] {
    EpsilonOptions opt;
    opt.oracle = GaussOracle::Padic;
    std::size_t bad = 0, nonint = 0, k = 0, a = 0;
    for (const auto& e : kummer_corpus()) {
      ++k;
      auto rep = check_strong(e.cover, opt);
      if (!rep.strong_ok.value_or(false)) ++bad;
      if (!rep.integral_ok.value_or(false) || !E_element(e.cover, opt).is_integral()) ++nonint;
    }
    for (const auto& e : artin_schreier_corpus()) {
      ++a;
      auto rep = check_strong(e.cover, opt);
      if (!rep.strong_ok.value_or(false)) ++bad;
      if (!rep.integral_ok.value_or(false) || !E_element(e.cover, opt).is_integral()) ++nonint;
    }
    std::ostringstream s;
    s << fmt(k + a, bad, "covers") << " (" << k << " Kummer, " << a << " Artin-Schreier); E integral on "
      << (k + a - nonint) << "/" << (k + a);
    return Outcome{bad == 0 && nonint == 0 && k >= 10 && a >= 10, s.str()};
  }, 300);

  report(8, "weak formula d(E) = chi(G, X, O) on the same corpus", [] {
    std::size_t checked = 0, bad = 0;
    for (const auto& e : full_corpus()) {
      ++checked;
      if (!check_weak(e.cover).weak_ok.value_or(false)) ++bad;
    }
    return Outcome{bad == 0, fmt(checked, bad, "covers")};
  });

  report(9, "invariance under Frobenius twists and re-chosen cotangent extensions", [] {
    std::size_t checked = 0, bad = 0, rows = 0;
    for (const auto& e : full_corpus()) {
      ++checked;
      auto rep = check_invariance(e.cover);
      for (const auto& s : rep.sections) rows += s.rows.size();
      if (!rep.invariance_ok.value_or(false)) ++bad;
    }
    std::ostringstream s;
    s << fmt(checked, bad, "covers") << " (" << rows << " comparisons)";
    return Outcome{bad == 0, s.str()};
  });

  report(10, "restriction to every subgroup of the n=4 and n=6 Kummer chains", [] {
    std::size_t checked = 0, bad = 0, covers = 0;
    for (const auto& e : kummer_chain_corpus()) {
      ++covers;
      for (const auto& H : all_subgroups(e.cover.group)) {
        ++checked;
        if (!check_restriction(e.cover, H).restriction_ok.value_or(false)) ++bad;
      }
    }
    std::ostringstream s;
    s << fmt(checked, bad, "subgroups") << " across " << covers << " covers";
    return Outcome{bad == 0 && covers > 0, s.str()};
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
