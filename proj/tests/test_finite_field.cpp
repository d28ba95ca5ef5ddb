// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "galmod/error.hpp"
#include "galmod/finite_field.hpp"
#include "galmod/numtheory.hpp"
#include "galmod/polyfp.hpp"

using namespace galmod;

namespace {

std::vector<std::pair<std::uint32_t, unsigned>> small_prime_powers(std::uint64_t limit) {
  std::vector<std::pair<std::uint32_t, unsigned>> out;
  for (std::uint32_t p = 2; p <= limit; ++p) {
    if (!nt::is_prime(p)) continue;
    std::uint64_t q = p;
    for (unsigned r = 1; q <= limit; ++r, q *= p) out.emplace_back(p, r);
  }
  return out;
}

}  // namespace

TEST_SUITE("finite_field") {
  TEST_CASE("prime field F_3 uses generator 2") {
    auto f = make_field(3, 1);
    CHECK(f.q() == 3);
    CHECK(f.pack(f.generator()) == 2);
  }

  TEST_CASE("F_8 generator has order 7") {
    auto f = make_field(2, 3);
    CHECK(fp::degree(f.modulus()) == 3);
    CHECK(fp::is_irreducible(f.modulus(), 2));
    auto g = f.generator();
    for (unsigned k = 1; k < 7; ++k) CHECK(f.pow(g, k) != f.one());
    CHECK(f.pow(g, 7) == f.one());
  }

  TEST_CASE("non-prime characteristic is rejected") {
    try {
      make_field(4, 1);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidInput);
    }
  }

  TEST_CASE("trace examples") {
    auto f5 = make_field(5, 1);
    for (int a = 0; a < 5; ++a) CHECK(f5.trace(f5.from_int(a)) == static_cast<unsigned>(a));
    auto f4 = make_field(2, 2);
    // F_4 = F_2[w]/(w^2+w+1): Tr(w) = w + w^2 = 1.
    CHECK(f4.modulus() == fp::Poly{1, 1, 1});
    CHECK(f4.trace(FqElem{{0, 1}}) == 1);
    CHECK(f4.trace(f4.zero()) == 0);
  }

  TEST_CASE("dlog examples") {
    auto f8 = make_field(2, 3);
    CHECK(f8.dlog(f8.one()) == 0);
    CHECK(f8.dlog(f8.generator()) == 1);
    auto g3 = f8.mul(f8.generator(), f8.mul(f8.generator(), f8.generator()));
    CHECK(f8.dlog(g3) == 3);
  }

  TEST_CASE("trace table agrees with the Frobenius sum for every q <= 343") {
    for (auto [p, r] : small_prime_powers(343)) {
      auto ctx = field_context(p, r);
      for (std::uint32_t x = 0; x < ctx->q(); ++x)
        REQUIRE(ctx->trace_table()[x] == ctx->trace_by_frobenius(ctx->unpack(x)));
    }
  }

  TEST_CASE("exp and log tables are inverse and the trace is additive") {
    std::mt19937_64 rng(11);
    for (auto [p, r] : small_prime_powers(729)) {
      auto ctx = field_context(p, r);
      const auto q = ctx->q();
      for (std::uint64_t k = 0; k + 1 < q; ++k) REQUIRE(ctx->log_table()[ctx->exp_table()[k]] == k);
      std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(q - 1));
      for (int t = 0; t < 50; ++t) {
        auto a = ctx->unpack(pick(rng)), b = ctx->unpack(pick(rng));
        CHECK((ctx->trace(a) + ctx->trace(b)) % p == ctx->trace(ctx->add(a, b)));
        if (a != ctx->zero()) CHECK(ctx->mul(a, ctx->inv(a)) == ctx->one());
      }
    }
  }

  TEST_CASE("Frobenius has order r") {
    auto ctx = field_context(3, 4);
    auto g = ctx->generator();
    auto x = g;
    for (unsigned i = 0; i < 4; ++i) x = ctx->frobenius(x);
    CHECK(x == g);
    CHECK(ctx->frobenius(g) != g);
  }

  TEST_CASE("polynomial factorization multiplies back") {
    std::mt19937_64 rng(5);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
      std::uniform_int_distribution<std::uint32_t> c(0, p - 1);
      for (int t = 0; t < 30; ++t) {
        fp::Poly f(6);
        for (auto& x : f) x = c(rng);
        f.push_back(1);
        fp::Poly prod{1};
        for (auto& [g, m] : fp::factor(f, p)) {
          CHECK(fp::is_irreducible(g, p));
          for (unsigned i = 0; i < m; ++i) prod = fp::mul(prod, g, p);
        }
        CHECK(prod == f);
      }
    }
  }
}
