// Copyright 2026 The galmod Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "galmod/cover.hpp"
#include "galmod/cover_io.hpp"
#include "galmod/error.hpp"
#include "oracles.hpp"

using namespace galmod;

namespace {

RationalFunctionDivisor divisor(std::uint32_t p, std::vector<std::pair<fp::Poly, int>> terms) {
  RationalFunctionDivisor f;
  f.p = p;
  for (auto& [q, m] : terms) f.terms.push_back({P1Place{false, q}, m});
  return f;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidInput;
}

PlaceDatum place(const AbelianGroup& g, std::uint32_t et, std::uint32_t ew, std::size_t cot,
                 const std::string& label) {
  PlaceDatum pl;
  pl.label = label;
  pl.e_t = et;
  pl.e_w = ew;
  pl.inertia = Subgroup::cyclic_of_order(g, et * ew);
  pl.decomposition = pl.inertia;
  pl.wild = Subgroup::cyclic_of_order(g, ew);
  pl.cotangent = cot;
  return pl;
}

}  // namespace

TEST_SUITE("cover") {
  TEST_CASE("Kummer p=5 n=2 f=x(x-1)") {
    auto c = kummer_cover(5, 2, divisor(5, {{{0, 1}, 1}, {{4, 1}, 1}}));
    REQUIRE(c.places.size() == 2);
    for (const auto& pl : c.places) {
      CHECK(pl.e_t == 2);
      CHECK(pl.e_w == 1);
      CHECK(pl.degree == 1);
    }
    CHECK(cover_genus(c) == 0);
    CHECK(oracle::genus_hilbert(c) == 0);
  }

  TEST_CASE("Kummer p=7 n=3 f=x ramifies at 0 and infinity") {
    auto c = kummer_cover(7, 3, divisor(7, {{{0, 1}, 1}}));
    REQUIRE(c.places.size() == 2);
    std::vector<std::string> labels{c.places[0].label, c.places[1].label};
    CHECK(std::find(labels.begin(), labels.end(), "inf") != labels.end());
    CHECK(std::find(labels.begin(), labels.end(), "x") != labels.end());
    for (const auto& pl : c.places) CHECK(pl.e_t == 3);
  }

  TEST_CASE("Kummer construction errors") {
    CHECK(kind_of([] { kummer_cover(3, 3, divisor(3, {{{0, 1}, 1}})); }) ==
          ErrorKind::TamenessViolation);
    CHECK(kind_of([] { kummer_cover(5, 3, divisor(5, {{{0, 1}, 1}})); }) ==
          ErrorKind::ConstantExtension);
    CHECK(kind_of([] { kummer_cover(5, 2, divisor(5, {{{0, 1}, 2}})); }) ==
          ErrorKind::ReducibleCover);
  }

  TEST_CASE("Artin-Schreier examples") {
    auto c2 = artin_schreier_cover(2, divisor(2, {{{0, 1}, -1}}));
    REQUIRE(c2.places.size() == 1);
    CHECK(c2.places[0].e_w == 2);
    CHECK(c2.places[0].degree == 1);
    CHECK(cover_genus(c2) == 0);

    auto c3 = artin_schreier_cover(3, divisor(3, {{{0, 1}, -1}, {{2, 1}, -1}}));
    CHECK(c3.places.size() == 2);
    CHECK(cover_genus(c3) == oracle::genus_hilbert(c3));
    CHECK(cover_genus(c3) == 2);

    CHECK(kind_of([] { artin_schreier_cover(2, divisor(2, {{{0, 1}, -2}})); }) ==
          ErrorKind::NotWeaklyRamified);
  }

  TEST_CASE("validation of synthetic data") {
    auto triv = AbelianGroup::cyclic(1);
    CHECK_NOTHROW(validate_cover(synthetic_cover(triv, 3, 1, 0, {})));

    auto z6 = AbelianGroup::cyclic(6);
    // Cotangent 3 has order 2 on the order-2 subgroup {0, 3}.  Two tame
    // places keep 2g - 2 even.
    CHECK_NOTHROW(validate_cover(synthetic_cover(
        z6, 3, 1, 0, {place(z6, 2, 1, 3, "a"), place(z6, 2, 1, 3, "a2"), place(z6, 1, 3, 0, "b")})));
    // A single tame place with e = 2 beside the wild one gives an odd 2g - 2.
    CHECK(kind_of([&] {
            validate_cover(synthetic_cover(
                z6, 3, 1, 0, {place(z6, 2, 1, 3, "a"), place(z6, 1, 3, 0, "b")}));
          }) == ErrorKind::Validation);

    CHECK(kind_of([&] {
            validate_cover(synthetic_cover(z6, 3, 1, 0, {place(z6, 2, 3, 3, "both")}));
          }) == ErrorKind::Validation);
    // r must divide the degree.
    auto bad = place(z6, 2, 1, 3, "a");
    bad.degree = 1;
    CHECK(kind_of([&] { validate_cover(synthetic_cover(z6, 3, 2, 0, {bad})); }) ==
          ErrorKind::Validation);
    // Wrong cotangent order.
    CHECK(kind_of([&] {
            validate_cover(synthetic_cover(z6, 3, 1, 0, {place(z6, 2, 1, 2, "a")}));
          }) == ErrorKind::Validation);
  }

  TEST_CASE("tame index solves the defining equation") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 50; ++t) {
      auto c = random_weakly_ramified_cover(rng);
      for (const auto& pl : c.places)
        for (std::size_t chi = 0; chi < c.group.order(); ++chi)
          REQUIRE(tame_index(c, pl, chi) == oracle::tame_index_by_evaluation(c, pl, chi));
    }
  }

  TEST_CASE("genus agrees with the Hilbert different on every corpus cover") {
    for (const auto& e : kummer_corpus()) REQUIRE(cover_genus(e.cover) == oracle::genus_hilbert(e.cover));
    for (const auto& e : artin_schreier_corpus())
      REQUIRE(cover_genus(e.cover) == oracle::genus_hilbert(e.cover));
    std::mt19937_64 rng(4);
    for (int t = 0; t < 100; ++t) {
      auto c = random_weakly_ramified_cover(rng);
      REQUIRE(cover_genus(c) == oracle::genus_hilbert(c));
    }
  }

  TEST_CASE("random data are valid and weakly ramified") {
    std::mt19937_64 rng(8);
    RandomCoverOptions opt;
    opt.max_r = 2;
    for (int t = 0; t < 100; ++t) {
      auto c = random_weakly_ramified_cover(rng, opt);
      CHECK_NOTHROW(validate_cover(c));
      CHECK(c.weakly_ramified);
      CHECK(cover_genus(c) >= 0);
    }
  }

  TEST_CASE("subcover examples") {
    auto c = kummer_cover(5, 4, divisor(5, {{{0, 1}, 1}}));
    auto whole = subcover_data(c, Subgroup::whole(c.group));
    CHECK(whole.group == c.group);
    CHECK(whole.places.size() == c.places.size());

    auto triv = subcover_data(c, Subgroup::trivial(c.group));
    CHECK(triv.group.order() == 1);
    CHECK(triv.places.empty());
    CHECK(triv.g_base == cover_genus(c));

    auto H = Subgroup::cyclic_of_order(c.group, 2);
    auto mid = subcover_data(c, H);
    CHECK(mid.group.order() == 2);
    for (const auto& pl : mid.places) CHECK(pl.e_t == 2);
    CHECK(cover_genus(mid) == cover_genus(c));
    CHECK_NOTHROW(validate_cover(mid));

    CHECK(kind_of([] {
            std::mt19937_64 rng(1);
            auto s = random_weakly_ramified_cover(rng);
            subcover_data(s, Subgroup::whole(s.group));
          }) == ErrorKind::Unsupported);
  }

  TEST_CASE("subcovers of the chain corpus keep the genus of X") {
    for (const auto& e : kummer_chain_corpus())
      for (const auto& H : all_subgroups(e.cover.group)) {
        auto sub = subcover_data(e.cover, H);
        REQUIRE_NOTHROW(validate_cover(sub));
        CHECK(cover_genus(sub) == cover_genus(e.cover));
      }
  }

  TEST_CASE("abelian group enumeration") {
    CHECK(abelian_groups_up_to(8).size() == 1 + 1 + 1 + 2 + 1 + 1 + 1 + 3);
  }
}
