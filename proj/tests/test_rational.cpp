#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "blotto/random.hpp"
#include "blotto/rational.hpp"

using blotto::Rational;

TEST_CASE("rationals are stored in lowest terms") {
  CHECK(Rational(4, 6) == Rational(2, 3));
  CHECK(Rational(-4, 6) == Rational(-2, 3));
  CHECK(Rational(4, -6) == Rational(-2, 3));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(36) - Rational(2) * Rational(14) == Rational(8));
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK(-Rational(5, 7) == Rational(-5, 7));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);

  Rational acc(1, 10);
  for (int i = 0; i < 10; ++i) acc += Rational(1, 10);
  CHECK(acc == Rational(11, 10));  // no float drift, 0.1 sums exactly
}

TEST_CASE("comparisons") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7, 7) == Rational(1));
  CHECK(Rational(5, 6) > Rational(2, 3));
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(-3, 4).sign() == -1);
  CHECK(Rational(-3, 4).abs() == Rational(3, 4));
}

TEST_CASE("floor, ceil and integer access") {
  CHECK(Rational(7, 2).floor_long() == 3);
  CHECK(Rational(7, 2).ceil_long() == 4);
  CHECK(Rational(-7, 2).floor_long() == -4);
  CHECK(Rational(-7, 2).ceil_long() == -3);
  CHECK(Rational(6, 2).floor_long() == 3);
  CHECK(Rational(6, 2).ceil_long() == 3);
  CHECK(Rational(18, 6).is_integer());
  CHECK(Rational(18, 6).to_long() == 3);
  CHECK_FALSE(Rational(1, 3).is_integer());
  CHECK_THROWS_AS(Rational(1, 3).to_long(), std::domain_error);
}

TEST_CASE("string round trip") {
  CHECK(Rational::parse("2/3").to_string() == "2/3");
  CHECK(Rational::parse("-15/5").to_string() == "-3");
  CHECK(Rational::parse("42").to_string() == "42");
  CHECK(Rational::parse("0/9") == Rational(0));
  CHECK(Rational::parse("123456789012345678901234567890/2").to_string() ==
        "61728394506172839450617283945");

  for (const char* bad : {"", "/", "1/", "/2", "1/0", "a", "1.5", "1 /2", "2/-3", "--1"})
    CHECK_THROWS_AS(Rational::parse(bad), blotto::error);

  std::ostringstream os;
  os << Rational(-5, 10);
  CHECK(os.str() == "-1/2");
}

TEST_CASE("parse/print round trip on random rationals") {
  blotto::SeededRng rng(7);
  for (int i = 0; i < 200; ++i) {
    Rational r(rng.next_long(-100000, 100000), rng.next_long(1, 100000));
    CHECK(Rational::parse(r.to_string()) == r);
  }
}

TEST_CASE("seeded rng is deterministic and in range") {
  blotto::SeededRng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    long x = a.next_long(-5, 17);
    CHECK(x == b.next_long(-5, 17));
    CHECK(x >= -5);
    CHECK(x <= 17);
  }
  blotto::SeededRng c(1);
  for (int i = 0; i < 50; ++i) {
    Rational f = c.next_in(Rational(1, 3), Rational(1, 2));
    CHECK(f >= Rational(1, 3));
    CHECK(f <= Rational(1, 2));
  }
}
