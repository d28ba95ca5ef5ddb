// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#include "galmod/epsilon.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "galmod/error.hpp"
#include "galmod/finite_field.hpp"
#include "galmod/numtheory.hpp"
#include "galmod/padic.hpp"
#include "galmod/stickelberger.hpp"

namespace galmod {

const char* to_string(GaussOracle oracle) {
  switch (oracle) {
    case GaussOracle::Stickelberger: return "stickelberger";
    case GaussOracle::Padic: return "padic";
    case GaussOracle::Both: return "both";
  }
  return "?";
}

const char* to_string(Convention convention) {
  return convention == Convention::Standard ? "standard" : "inverted";
}

const char* to_string(EpsKind kind) {
  switch (kind) {
    case EpsKind::Unramified: return "unramified";
    case EpsKind::Tame: return "tame";
    case EpsKind::Wild: return "wild";
  }
  return "?";
}

namespace {

struct GaussCache {
  std::mutex mu;
  std::map<std::tuple<std::uint32_t, std::uint32_t, unsigned>,
           std::shared_ptr<const PadicGaussEngine>> engines;
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t, unsigned>, Rational> values;
};

GaussCache& cache() {
  static GaussCache c;
  return c;
}

Rational padic_leg(std::uint32_t p, std::uint32_t deg, std::uint64_t c,
                   std::optional<unsigned> precision) {
  auto ctx = field_context(p, deg);
  const unsigned N = precision.value_or(default_lambda_precision(*ctx));
  auto& gc = cache();
  const auto vkey = std::make_tuple(p, deg, c, N);
  std::shared_ptr<const PadicGaussEngine> engine;
  {
    std::lock_guard<std::mutex> lock(gc.mu);
    if (auto it = gc.values.find(vkey); it != gc.values.end()) return it->second;
    auto& slot = gc.engines[std::make_tuple(p, deg, N)];
    if (!slot) slot = std::make_shared<const PadicGaussEngine>(ctx, N);
    engine = slot;
  }
  Rational v = engine->valuation(c);
  std::lock_guard<std::mutex> lock(gc.mu);
  gc.values.emplace(vkey, v);
  return v;
}

}  // namespace

Rational gauss_valuation(std::uint32_t p, std::uint32_t deg, std::uint64_t c, GaussOracle oracle,
                         std::optional<unsigned> precision) {
  auto q = nt::checked_pow(p, deg);
  if (!q) fail(ErrorKind::Capacity, "residue field too large");
  c %= (*q - 1);
  switch (oracle) {
    case GaussOracle::Stickelberger:
      return digit_sum_valuation(PrimePower::make(p, deg), c);
    case GaussOracle::Padic:
      return padic_leg(p, deg, c, precision);
    case GaussOracle::Both: {
      Rational a = digit_sum_valuation(PrimePower::make(p, deg), c);
      Rational b = padic_leg(p, deg, c, precision);
      if (a != b)
        fail(ErrorKind::OracleMismatch, "Gauss valuation oracles disagree at p=" +
                                            std::to_string(p) + " deg=" + std::to_string(deg) +
                                            " c=" + std::to_string(c));
      return a;
    }
  }
  return 0;
}

namespace {

void require_prime_base(const CoverDatum& cover) {
  if (cover.base_exponent != 1)
    fail(ErrorKind::Unsupported, "epsilon valuations are implemented over an F_p base only");
}

}  // namespace

LocalEpsilonVal local_epsilon(const CoverDatum& cover, std::size_t place, std::size_t chi,
                              const EpsilonOptions& opt) {
  if (place >= cover.places.size()) fail(ErrorKind::InvalidInput, "place index out of range");
  if (chi >= cover.group.order()) fail(ErrorKind::InvalidInput, "character out of range");
  require_prime_base(cover);
  const auto& pl = cover.places[place];
  LocalEpsilonVal out;
  out.place = place;
  if (pl.inertia.character_trivial_on(chi)) return out;
  if (pl.wild.character_trivial_on(chi)) {
    out.kind = EpsKind::Tame;
    const std::uint32_t d = tame_index(cover, pl, chi);
    auto datum = TameLocalDatum::make(PrimePower::make(cover.p, pl.degree), pl.e_t, pl.e_w);
    const std::uint64_t c = c_from_d(datum, d);
    out.tame_index = d;
    out.gauss_index = c;
    out.valuation = gauss_valuation(cover.p, pl.degree, c, opt.oracle, opt.precision);
    return out;
  }
  out.kind = EpsKind::Wild;
  const std::uint32_t cd = conductor(cover, pl, chi);
  out.valuation = Rational(static_cast<long>(pl.degree) * (static_cast<long>(cd) - 1));
  return out;
}

EpsilonLedger epsilon_ledger(const CoverDatum& cover, std::size_t chi, const EpsilonOptions& opt) {
  require_prime_base(cover);
  EpsilonLedger led;
  led.character = chi;
  led.base_term = Rational(static_cast<long>(cover.r) * (cover.g_base - 1));
  led.global_valuation = led.base_term;
  for (std::size_t i = 0; i < cover.places.size(); ++i) {
    auto loc = local_epsilon(cover, i, chi, opt);
    if (loc.kind == EpsKind::Unramified) continue;
    led.global_valuation += loc.valuation;
    led.locals.push_back(std::move(loc));
  }
  return led;
}

Rational global_epsilon_valuation(const CoverDatum& cover, std::size_t chi,
                                  const EpsilonOptions& opt) {
  return epsilon_ledger(cover, chi, opt).global_valuation;
}

K0Element E_element(const CoverDatum& cover, const EpsilonOptions& opt) {
  const auto& g = cover.group;
  auto vals = parallel_map<Rational>(g.order(), opt.exec, [&](std::size_t chi) {
    const std::size_t eval = opt.convention == Convention::Inverted ? g.char_inv(chi) : chi;
    return global_epsilon_valuation(cover, eval, opt);
  });
  K0Element E(g, Level::CharZero);
  for (std::size_t chi = 0; chi < g.order(); ++chi) E.add_to(chi, -vals[chi]);
  return E;
}

}  // namespace galmod
