// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "galmod/cover_io.hpp"
#include "galmod/error.hpp"
#include "galmod/euler_char.hpp"
#include "oracles.hpp"

using namespace galmod;

namespace {

// A random divisor satisfying the congruence n = -1 mod e_w.
DivisorSpec random_divisor(std::mt19937_64& rng, const CoverDatum& c) {
  DivisorSpec D;
  std::uniform_int_distribution<int> k(-2, 3);
  for (const auto& pl : c.places) D.at_place.push_back(static_cast<std::int64_t>(pl.e_w) * k(rng) - 1 + (pl.e_w == 1 ? 1 : 0));
  if (rng() % 2) D.unramified.push_back({c.r * (1 + static_cast<std::uint32_t>(rng() % 2)), k(rng)});
  return D;
}

}  // namespace

TEST_SUITE("euler_char") {
  TEST_CASE("lm decomposition examples") {
    CHECK(lm_decompose(1, 1, 5) == LMParts{0, 5});
    CHECK(lm_decompose(4, 1, -1) == LMParts{3, -1});
    CHECK(lm_decompose(1, 3, -1) == LMParts{0, -1});
    for (std::uint32_t et : {1u, 2u, 5u})
      for (std::uint32_t ew : {1u, 2u, 3u})
        for (std::int64_t n = -20; n <= 20; ++n) {
          if ((n + 1) % ew != 0) {
            CHECK_THROWS_AS(lm_decompose(et, ew, n), Error);
            continue;
          }
          auto lm = lm_decompose(et, ew, n);
          CHECK(lm.l >= 0);
          CHECK(lm.l < et);
          CHECK(n == (ew - 1) + (lm.l + lm.m * et) * ew);
        }
  }

  TEST_CASE("g_term examples") {
    CHECK(g_term(1, 4, 3, 5, 0) == make_rational(-1, 4));
    CHECK(g_term(0, 7, 3, 2, 1) == make_rational(6, 7));
    for (std::int64_t l = 0; l < 5; ++l) CHECK(g_term(l, 5, 0, 11, 2) == 0);
    for (std::int64_t l = 0; l < 6; ++l)
      for (std::int64_t d = 0; d < 6; ++d) {
        auto g = g_term(l, 6, d, 7, 1);
        CHECK(g >= make_rational(-l, 6));
        CHECK(g < make_rational(6 - l, 6));
        CHECK(is_integer(g - make_rational(d * 7 % 6, 6)));
      }
  }

  TEST_CASE("unramified data") {
    auto c = builtin_cover("trivial:p=3,r=2,g=2");
    auto psi = psi_structure(c, {});
    CHECK(psi == K0Element::regular(c.group, Level::ModularProjectives, 3) * (2 * (1 - 2)));
    CHECK(multiplicity_closed(c, {}, 0) == -2);
    CHECK(multiplicity_direct(c, {}, 0) == -2);
    CHECK(euler_char_structure_sheaf(c) == K0Element::basis(c.group, Level::ModularModules, 0, 3) * -2);
  }

  TEST_CASE("worked multiplicities") {
    auto k = builtin_cover("kummer:p=5,n=2,f=x(x-1)");
    auto Dw = DivisorSpec::wild_canonical(k);
    CHECK(multiplicity_closed(k, Dw, 1) == 0);
    CHECK(multiplicity_direct(k, Dw, 1) == 0);
    CHECK(multiplicity_closed(k, Dw, 0) == 1);

    auto as = builtin_cover("as:p=2,f=1/x");
    auto Aw = DivisorSpec::wild_canonical(as);
    CHECK(Aw.value(0) == -1);
    for (std::size_t chi : {0u, 1u}) {
      CHECK(multiplicity_closed(as, Aw, chi) == 0);
      CHECK(multiplicity_direct(as, Aw, chi) == 0);
    }
    auto chiO = euler_char_structure_sheaf(as);
    CHECK(chiO == K0Element::basis(as.group, Level::ModularModules, 0, 2));
  }

  TEST_CASE("tame covers need no wild correction") {
    auto k = builtin_cover("kummer:p=7,n=6,f=x(x-1)^5");
    CHECK(euler_char_structure_sheaf(k) == cartan_map(psi_structure(k, {})));
  }

  TEST_CASE("divisor validation") {
    auto as = builtin_cover("as:p=3,f=1/x");
    DivisorSpec D;
    D.at_place = {0};
    CHECK_THROWS_AS(validate_divisor(as, D), Error);
    D.at_place = {2};
    CHECK_NOTHROW(validate_divisor(as, D));
    D.at_place = {2, 2};
    CHECK_THROWS_AS(validate_divisor(as, D), Error);
  }

  TEST_CASE("corrupted data fail the integrality check") {
    auto k = builtin_cover("kummer:p=5,n=2,f=x(x-1)");
    k.places.pop_back();
    try {
      (void)psi_structure(k, {});
      FAIL("expected Integrality");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Integrality);
    }
  }

  TEST_CASE("direct = closed = pairing with e(psi) on 200 random data") {
    std::mt19937_64 rng(31);
    RandomCoverOptions opt;
    opt.max_r = 2;
    for (int t = 0; t < 200; ++t) {
      auto c = random_weakly_ramified_cover(rng, opt);
      auto D = random_divisor(rng, c);
      auto psi = psi_structure(c, D);
      auto lifted = e_map(psi);
      for (std::size_t chi = 0; chi < c.group.order(); ++chi) {
        const auto closed = multiplicity_closed(c, D, chi);
        REQUIRE(closed == multiplicity_direct(c, D, chi));
        REQUIRE(closed == pairing(lifted, K0Element::basis(c.group, Level::CharZero, chi)));
      }
    }
  }

  TEST_CASE("multiplicities sum to the Riemann-Roch total") {
    std::mt19937_64 rng(41);
    auto check = [&](const CoverDatum& c, const DivisorSpec& D) {
      Rational total = 0;
      for (std::size_t chi = 0; chi < c.group.order(); ++chi) total += multiplicity_closed(c, D, chi);
      REQUIRE(total == oracle::riemann_roch_total(c, D));
    };
    for (const auto& e : kummer_corpus()) {
      check(e.cover, {});
      check(e.cover, random_divisor(rng, e.cover));
    }
    for (const auto& e : artin_schreier_corpus()) {
      check(e.cover, DivisorSpec::wild_canonical(e.cover));
      check(e.cover, random_divisor(rng, e.cover));
    }
    for (int t = 0; t < 100; ++t) {
      auto c = random_weakly_ramified_cover(rng);
      check(c, random_divisor(rng, c));
    }
  }

  TEST_CASE("structure sheaf agrees with the quotient-curve route") {
    std::mt19937_64 rng(53);
    auto check = [](const CoverDatum& c) {
      auto chiO = euler_char_structure_sheaf(c);
      for (auto theta : c.group.p_prime_characters(c.p))
        REQUIRE(chiO.coefficient(theta) == oracle::weak_rhs_by_quotient(c, theta));
    };
    for (const auto& e : kummer_corpus()) check(e.cover);
    for (const auto& e : artin_schreier_corpus()) check(e.cover);
    RandomCoverOptions opt;
    opt.max_r = 2;
    for (int t = 0; t < 100; ++t) check(random_weakly_ramified_cover(rng, opt));
  }
}
