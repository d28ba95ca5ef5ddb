// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "galmod/cyclotomic.hpp"
#include "galmod/numtheory.hpp"
#include "oracles.hpp"

using namespace galmod;

namespace {

std::complex<double> embed_complex(const CyclotomicInt& z) {
  const double pi = 3.14159265358979323846;
  std::complex<double> acc = 0;
  for (std::size_t k = 0; k < z.coeffs().size(); ++k)
    acc += z.coeffs()[k].get_d() * std::polar(1.0, 2 * pi * k / z.order());
  return acc;
}

}  // namespace

TEST_SUITE("cyclotomic") {
  TEST_CASE("ring arithmetic examples") {
    auto z4 = CyclotomicInt::zeta(4, 1);
    CHECK(z4 * z4 == CyclotomicInt::constant(4, -1));
    CHECK(CyclotomicInt::zeta(3, 1) + CyclotomicInt::zeta(3, 2) == CyclotomicInt::constant(3, -1));
    CHECK(CyclotomicInt::zeta(5, 1).twist(2) == CyclotomicInt::zeta(5, 2));
    CHECK(CyclotomicInt::zeta(6, 6) == CyclotomicInt::constant(6, 1));
    CHECK(CyclotomicInt::zeta(3, 1).embed(12) == CyclotomicInt::zeta(12, 4));
  }

  TEST_CASE("twists are ring homomorphisms") {
    auto a = CyclotomicInt::zeta(15, 2) + CyclotomicInt::constant(15, 3);
    auto b = CyclotomicInt::zeta(15, 7) - CyclotomicInt::zeta(15, 1);
    for (std::int64_t t : {1, 2, 4, 7, 8, 11, 13, 14}) {
      CHECK((a * b).twist(t) == a.twist(t) * b.twist(t));
      CHECK((a + b).twist(t) == a.twist(t) + b.twist(t));
    }
  }

  TEST_CASE("trivial character gives -1") {
    for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {7, 1}, {2, 4}}) {
      auto ctx = field_context(p, r);
      CHECK(gauss_sum(*ctx, 0) == CyclotomicInt::constant(gauss_order(*ctx), -1));
    }
  }

  TEST_CASE("quadratic Gauss sum over F_3") {
    auto ctx = field_context(3, 1);
    auto tau = gauss_sum(*ctx, 1);
    const auto m = gauss_order(*ctx);
    CHECK(m == 6);
    // zeta_3 = zeta_6^2.
    CHECK(tau == CyclotomicInt::zeta(6, 2) - CyclotomicInt::zeta(6, 4));
    CHECK(tau * tau == CyclotomicInt::constant(6, -3));
  }

  TEST_CASE("serial and parallel exponent histograms agree") {
    for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 5}, {3, 4}, {5, 3}, {31, 1}}) {
      auto ctx = field_context(p, r);
      for (std::uint64_t c : std::vector<std::uint64_t>{1, 2, 5, ctx->q() - 2}) {
        CHECK(gauss_exponent_counts_serial(*ctx, c) == gauss_exponent_counts_parallel(*ctx, c));
        CHECK(gauss_sum(*ctx, c, Exec::Serial) == gauss_sum(*ctx, c, Exec::Parallel));
      }
    }
  }

  TEST_CASE("product identity on sample fields") {
    for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {5, 2}, {13, 1}}) {
      auto ctx = field_context(p, r);
      for (std::uint64_t c = 1; c + 1 < ctx->q(); ++c) {
        auto tau = gauss_sum(*ctx, c);
        REQUIRE(tau * twist_mult_part(tau, *ctx, -1) == gauss_product_target(*ctx, c));
      }
    }
  }

  TEST_CASE("CRT coordinates vanish exactly on the kernel of Z[C_m] -> Z[zeta_m]") {
    std::mt19937_64 rng(7);
    for (std::uint32_t m : {1u, 2u, 6u, 12u, 30u, 36u, 45u, 60u, 210u}) {
      CHECK(crt_basis_coordinates(m, std::vector<std::int64_t>(m, 0)).size() == nt::euler_phi(m));
      for (int t = 0; t < 30; ++t) {
        std::vector<std::int64_t> a(m), b(m);
        for (auto& x : a) x = static_cast<std::int64_t>(rng() % 7) - 3;
        // b = a + (random multiple of a vanishing sum over a coset of a
        // prime-order subgroup), so a and b have the same image.
        b = a;
        const auto primes = nt::prime_factors(m);
        if (!primes.empty()) {
          const std::uint64_t l = primes[rng() % primes.size()], step = m / l, off = rng() % m;
          const std::int64_t w = static_cast<std::int64_t>(rng() % 5) - 2;
          for (std::uint64_t j = 0; j < l; ++j) b[(off + j * step) % m] += w;
        }
        CHECK(crt_basis_coordinates(m, a) == crt_basis_coordinates(m, b));
        const bool zero_crt = [&] {
          for (auto v : crt_basis_coordinates(m, a))
            if (v) return false;
          return true;
        }();
        CHECK(zero_crt == CyclotomicInt::from_exponent_counts(m, a).is_zero());
        auto diff = a;
        diff[rng() % m] += 1;
        CHECK((CyclotomicInt::from_exponent_counts(m, a) == CyclotomicInt::from_exponent_counts(m, diff)) ==
              (crt_basis_coordinates(m, a) == crt_basis_coordinates(m, diff)));
      }
    }
  }

  TEST_CASE("group-ring product check agrees with the power-basis product") {
    for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 4}, {3, 2}, {5, 2}, {7, 1}, {19, 1}}) {
      auto ctx = field_context(p, r);
      for (std::uint64_t c = 1; c + 1 < ctx->q(); ++c) {
        auto tau = gauss_sum(*ctx, c);
        const bool dense = tau * twist_mult_part(tau, *ctx, -1) == gauss_product_target(*ctx, c);
        CHECK(dense);
        CHECK(gauss_product_identity(*ctx, c) == dense);
        CHECK(gauss_product_identity(*ctx, c, Exec::Parallel) == dense);
      }
    }
  }

  TEST_CASE("group-ring product check rejects a wrong target") {
    // tau(chi) tau(chi^-1) = chi(-1) q; feeding the inverse sign must fail.
    auto ctx = field_context(3, 1);
    auto tau = gauss_sum(*ctx, 1);
    CHECK_FALSE(tau * twist_mult_part(tau, *ctx, -1) == CyclotomicInt::constant(6, 3));
    std::vector<std::int64_t> v(6, 0);
    v[0] = 3;
    CHECK(crt_basis_coordinates(6, v) != std::vector<std::int64_t>(2, 0));
  }

  TEST_CASE("complex embedding matches direct floating summation") {
    for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}, {7, 2}}) {
      auto ctx = field_context(p, r);
      for (std::uint64_t c = 0; c + 1 < ctx->q(); c += 3) {
        auto exact = embed_complex(gauss_sum(*ctx, c));
        auto direct = oracle::gauss_sum_complex(*ctx, c);
        CHECK(std::abs(exact - direct) < 1e-7 * ctx->q());
        if (c != 0) CHECK(complex_abs2(gauss_sum(*ctx, c)) == doctest::Approx(ctx->q()).epsilon(1e-9));
      }
    }
  }

  TEST_CASE("complex_abs2 basics") {
    CHECK(complex_abs2(CyclotomicInt::constant(7, -1)) == doctest::Approx(1.0));
    CHECK(complex_abs2(CyclotomicInt(7)) == doctest::Approx(0.0));
  }
}
