// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "galmod/epsilon.hpp"
#include "galmod/error.hpp"
#include "galmod/padic.hpp"
#include "galmod/stickelberger.hpp"
#include "oracles.hpp"

using namespace galmod;

TEST_SUITE("padic") {
  TEST_CASE("Teichmueller lift of 1 is 1") {
    auto ctx = field_context(7, 2);
    for (unsigned M : {1u, 3u, 6u}) {
      auto t = teichmuller(*ctx, ctx->one(), M);
      WittRing W(ctx, M);
      CHECK(t.value == W.one());
    }
  }

  TEST_CASE("Teichmueller lift of 2 in Z/25 is 7") {
    auto ctx = field_context(5, 1);
    auto t = teichmuller(*ctx, ctx->from_int(2), 2);
    REQUIRE(t.value.size() == 1);
    CHECK(t.value[0] == 7);
  }

  TEST_CASE("Teichmueller lifts reduce back and are (q-1)-th roots of unity") {
    std::mt19937_64 rng(3);
    for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {5, 2}, {7, 1}, {11, 2}}) {
      auto ctx = field_context(p, r);
      WittRing W(ctx, 4);
      std::uniform_int_distribution<std::uint32_t> pick(1, static_cast<std::uint32_t>(ctx->q() - 1));
      for (int t = 0; t < 100; ++t) {
        auto x = ctx->unpack(pick(rng));
        auto w = teichmuller(*ctx, x, 4);
        CHECK(W.reduce(w.value) == x);
        CHECK(W.pow(w.value, ctx->q() - 1) == W.one());
      }
    }
  }

  TEST_CASE("valuation examples") {
    CHECK(gauss_valuation(3, 1, 1, GaussOracle::Padic) == make_rational(1, 2));
    CHECK(gauss_valuation(2, 3, 3, GaussOracle::Padic) == 2);
    CHECK(gauss_valuation(5, 2, 0, GaussOracle::Padic) == 0);
    CHECK(gauss_valuation(3, 1, 1, GaussOracle::Both) == make_rational(1, 2));
  }

  TEST_CASE("engine agrees with the digit-sum rule on small fields") {
    for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}, {5, 2}, {7, 2}, {13, 1}}) {
      auto ctx = field_context(p, r);
      PadicGaussEngine eng(ctx, default_lambda_precision(*ctx));
      for (std::uint64_t c = 0; c + 1 < ctx->q(); ++c)
        REQUIRE(eng.valuation(c) == oracle::fractional_orbit_sum(p, r, c));
    }
  }

  TEST_CASE("insufficient precision is reported with a usable bound") {
    auto ctx = field_context(2, 3);
    PadicGaussEngine low(ctx, 2);
    // v(tau(chi_6)) = 2 needs lambda-precision above 2.
    try {
      (void)low.valuation(6);
      FAIL("expected a precision error");
    } catch (const PrecisionError& e) {
      CHECK(e.required() > 2);
      PadicGaussEngine ok(ctx, e.required());
      CHECK(ok.valuation(6) == 2);
    }
  }
}
