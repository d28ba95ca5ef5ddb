// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "galmod/cover_io.hpp"
#include "galmod/epsilon.hpp"
#include "galmod/error.hpp"

using namespace galmod;

TEST_SUITE("epsilon") {
  TEST_CASE("local factors") {
    auto c = builtin_cover("kummer:p=3,n=2,f=x");
    REQUIRE(c.places.size() == 2);
    for (std::size_t i = 0; i < c.places.size(); ++i) {
      CHECK(local_epsilon(c, i, 0).kind == EpsKind::Unramified);
      CHECK(local_epsilon(c, i, 0).valuation == 0);
      EpsilonOptions both;
      both.oracle = GaussOracle::Both;
      auto v = local_epsilon(c, i, 1, both);
      CHECK(v.kind == EpsKind::Tame);
      CHECK(v.valuation == make_rational(1, 2));
    }
    auto as = builtin_cover("as:p=2,f=1/x");
    auto w = local_epsilon(as, 0, 1);
    CHECK(w.kind == EpsKind::Wild);
    CHECK(w.valuation == 1);
  }

  TEST_CASE("global valuations of the worked examples") {
    auto triv = builtin_cover("trivial:p=5,r=2,g=3");
    CHECK(global_epsilon_valuation(triv, 0) == 2 * (3 - 1));

    auto k = builtin_cover("kummer:p=5,n=2,f=x(x-1)");
    CHECK(global_epsilon_valuation(k, 1) == 0);
    auto led = epsilon_ledger(k, 1);
    CHECK(led.base_term == -1);
    CHECK(led.locals.size() == 2);

    auto as = builtin_cover("as:p=2,f=1/x");
    CHECK(global_epsilon_valuation(as, 1) == 0);
    CHECK(global_epsilon_valuation(as, 0) == -1);
  }

  TEST_CASE("E of the worked examples") {
    auto triv = builtin_cover("trivial:p=3,r=2");
    CHECK(E_element(triv) == K0Element::basis(triv.group, Level::CharZero, 0) * 2);

    for (const char* spec : {"as:p=2,f=1/x", "kummer:p=5,n=2,f=x(x-1)"}) {
      auto c = builtin_cover(spec);
      auto E = E_element(c);
      CHECK(E.coefficient(0) == 1);
      CHECK(E.coefficient(1) == 0);
    }
  }

  TEST_CASE("oracles agree and serial equals parallel on the corpus") {
    EpsilonOptions both;
    both.oracle = GaussOracle::Both;
    EpsilonOptions serial;
    serial.exec = Exec::Serial;
    serial.oracle = GaussOracle::Stickelberger;
    for (const auto& e : kummer_corpus()) {
      auto E = E_element(e.cover, both);
      REQUIRE(E == E_element(e.cover, serial));
      REQUIRE(E.is_integral());
    }
  }

  TEST_CASE("inverted convention is the character-inverse permutation") {
    EpsilonOptions inv;
    inv.convention = Convention::Inverted;
    auto c = builtin_cover("kummer:p=7,n=3,f=x^2(x-1)");
    auto a = E_element(c), b = E_element(c, inv);
    for (std::size_t chi = 0; chi < c.group.order(); ++chi)
      CHECK(b.coefficient(chi) == a.coefficient(c.group.char_inv(chi)));
  }

  TEST_CASE("base fields larger than F_p are unsupported") {
    std::mt19937_64 rng(5);
    RandomCoverOptions opt;
    opt.max_base_exponent = 3;
    for (int t = 0; t < 50; ++t) {
      auto c = random_weakly_ramified_cover(rng, opt);
      if (c.base_exponent == 1) continue;
      try {
        (void)E_element(c);
        FAIL("expected Unsupported");
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Unsupported);
      }
      return;
    }
    FAIL("no datum with a larger base field was drawn");
  }
}
