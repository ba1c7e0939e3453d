#include <catch2/catch_amalgamated.hpp>

#include "blotto/construct.hpp"
#include "blotto/security.hpp"

using blotto::AtomicStrategy;
using blotto::Band;
using blotto::GameConfig;
using blotto::PartitionInfo;
using blotto::Rational;

TEST_CASE("centralized comb") {
  PartitionInfo pi36 = partition_of(GameConfig(36, 50));
  AtomicStrategy comb = blotto::comb_centralized(pi36);
  REQUIRE(comb.atoms().size() == 3);
  CHECK(comb.atoms()[0].x == Rational(0));
  CHECK(comb.atoms()[1].x == Rational(14));
  CHECK(comb.atoms()[2].x == Rational(28));
  for (const auto& a : comb.atoms()) CHECK(a.w == Rational(1, 3));

  PartitionInfo pi42 = partition_of(GameConfig(42, 50));
  AtomicStrategy comb42 = blotto::comb_centralized(pi42);
  REQUIRE(comb42.atoms().size() == 6);
  for (long j = 0; j < 6; ++j) {
    CHECK(comb42.atoms()[static_cast<std::size_t>(j)].x == Rational(8 * j));
    CHECK(comb42.atoms()[static_cast<std::size_t>(j)].w == Rational(1, 6));
  }

  PartitionInfo pi12 = partition_of(GameConfig(1, 2));
  AtomicStrategy trivial = blotto::comb_centralized(pi12);
  REQUIRE(trivial.atoms().size() == 1);
  CHECK(trivial.atoms()[0].x == Rational(0));
  CHECK(trivial.atoms()[0].w == Rational(1));
}

TEST_CASE("bands per factor") {
  PartitionInfo pi42 = partition_of(GameConfig(42, 50));
  auto bs = blotto::bands(pi42, Rational(21));
  REQUIRE(bs.size() == 3);  // factor 6 band [40, 42] lies beyond 21
  CHECK(bs[0].k1 == 1);
  CHECK(bs[0].lo == Rational(0));
  CHECK(bs[0].hi == Rational(2));
  CHECK(bs[1].k1 == 2);
  CHECK(bs[1].lo == Rational(8));
  CHECK(bs[1].hi == Rational(10));
  CHECK(bs[2].k1 == 3);
  CHECK(bs[2].lo == Rational(16));
  CHECK(bs[2].hi == Rational(18));

  PartitionInfo pi36 = partition_of(GameConfig(36, 50));
  auto bs36 = blotto::bands(pi36, Rational(18));
  REQUIRE(bs36.size() == 1);  // factor 3 band [28, 36] misses [0, 18]
  CHECK(bs36[0].k1 == 1);
  CHECK(bs36[0].lo == Rational(0));
  CHECK(bs36[0].hi == Rational(8));

  PartitionInfo pi12 = partition_of(GameConfig(1, 3));
  auto bs1 = blotto::bands(pi12, Rational(1, 2));
  REQUIRE(bs1.size() == 1);
  CHECK(bs1[0].lo == Rational(0));
  CHECK(bs1[0].hi == pi12.rB);

  // Bands of consecutive factors never touch when rB < d.
  for (std::size_t i = 0; i + 1 < bs.size(); ++i) CHECK(bs[i].hi < bs[i + 1].lo);
}

TEST_CASE("factor split of the comb") {
  PartitionInfo pi = partition_of(GameConfig(42, 50));
  auto [f1, f2] = blotto::comb_distributed(pi, 2, Rational(9));
  REQUIRE(f1.atoms().size() == 2);
  CHECK(f1.budget() == Rational(9));
  CHECK(f1.atoms()[0].x == Rational(0));
  CHECK(f1.atoms()[1].x == Rational(8));
  REQUIRE(f2.atoms().size() == 3);
  CHECK(f2.budget() == Rational(33));
  CHECK(f2.atoms()[0].x == Rational(0));
  CHECK(f2.atoms()[1].x == Rational(16));
  CHECK(f2.atoms()[2].x == Rational(32));
  CHECK(convolve(f1, f2).atoms() == blotto::comb_centralized(pi).atoms());

  PartitionInfo pi36 = partition_of(GameConfig(36, 50));
  auto [g1, g2] = blotto::comb_distributed(pi36, 1, Rational(5));
  REQUIRE(g1.atoms().size() == 1);
  CHECK(g1.atoms()[0].x == Rational(0));
  CHECK(g2.atoms() == blotto::comb_centralized(pi36).atoms());

  CHECK_THROWS_MATCHES(blotto::comb_distributed(pi, 2, Rational(11)), blotto::error,
                       Catch::Matchers::Predicate<blotto::error>([](const blotto::error& e) {
                         return e.code() == blotto::errc::infeasible_division;
                       }));
  CHECK_THROWS_AS(blotto::comb_distributed(pi, 4, Rational(9)), blotto::error);  // 4 not a factor
}

TEST_CASE("every feasible split reconstructs the comb and its value") {
  GameConfig g(42, 50);
  PartitionInfo pi = partition_of(g);
  AtomicStrategy comb = blotto::comb_centralized(pi);
  Rational vstar(5, 6);
  for (const Band& band : blotto::bands(pi, Rational(21))) {
    for (const Rational& b1 :
         {band.lo, (band.lo + band.hi) / Rational(2), band.hi}) {
      auto [f1, f2] = blotto::comb_distributed(pi, band.k1, b1);
      CHECK(f1.budget() == b1);
      CHECK(f2.budget() == g.B - b1);
      AtomicStrategy conv = convolve(f1, f2);
      CHECK(conv.atoms() == comb.atoms());
      CHECK(value_of(g, conv).value == vstar);
    }
  }
}

TEST_CASE("sampler determinism and support") {
  GameConfig g(42, 50);
  PartitionInfo pi = partition_of(g);
  auto [a1, a2] = blotto::sample_ss1_profile(pi, Rational(7), 1);
  auto [b1, b2] = blotto::sample_ss1_profile(pi, Rational(7), 1);
  CHECK(a1 == b1);
  CHECK(a2 == b2);
  auto [c1, c2] = blotto::sample_ss1_profile(pi, Rational(7), 2);
  CHECK((!(a1 == c1) || !(a2 == c2)));

  CHECK(a1.budget() == Rational(7));
  CHECK(a2.budget() == Rational(35));
  CHECK(a1.atoms().front().x == Rational(0));
  CHECK(a1.atoms().back().x == Rational(7));

  // mass 1/2 at each end cluster, 1/3 per partner cluster
  Rational front_mass = cdf(a1, a1.budget() / Rational(2));
  CHECK(front_mass == Rational(1, 2));
}

TEST_CASE("sampler rejects divisions outside the gap") {
  PartitionInfo pi = partition_of(GameConfig(42, 50));
  CHECK_THROWS_AS(blotto::sample_ss1_profile(pi, Rational(5), 1), blotto::error);
  CHECK_THROWS_AS(blotto::sample_ss1_profile(pi, Rational(8), 1), blotto::error);
  CHECK_THROWS_AS(blotto::sample_ss1_profile(pi, Rational(6), 1), blotto::error);

  PartitionInfo odd = partition_of(GameConfig(36, 50));  // m = 3
  CHECK_THROWS_AS(blotto::sample_ss1_profile(odd, Rational(7), 1), blotto::error);
}

TEST_CASE("sampled profiles satisfy equal mass and break dominance") {
  GameConfig g(42, 50);
  PartitionInfo pi = partition_of(g);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    for (const Rational& b1 : {Rational(13, 2), Rational(7), Rational(15, 2)}) {
      auto [f1, f2] = blotto::sample_ss1_profile(pi, b1, seed);
      CHECK(f1.atoms().back().x <= f1.budget());
      CHECK(f2.atoms().back().x <= f2.budget());
      AtomicStrategy conv = convolve(f1, f2);
      CHECK(check_ss1(pi, conv).ok);
      CHECK_FALSE(check_ss2(pi, conv).ok);
    }
  }
}
