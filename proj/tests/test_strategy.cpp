#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "blotto/random.hpp"
#include "blotto/strategy.hpp"

using blotto::Atom;
using blotto::AtomicStrategy;
using blotto::IntStrategy;
using blotto::Rational;

namespace {

AtomicStrategy random_strategy(blotto::SeededRng& rng, const Rational& budget) {
  long n = rng.next_long(1, 6);
  std::map<Rational, long> raw;
  for (long i = 0; i < n; ++i) raw[rng.next_in(Rational(0), budget)] += rng.next_long(1, 1000);
  long total = 0;
  for (auto& [x, w] : raw) total += w;
  std::vector<Atom> atoms;
  for (auto& [x, w] : raw) atoms.push_back(Atom{x, Rational(w, total)});
  return AtomicStrategy(budget, std::move(atoms));
}

// Independent oracle: pairwise sums grouped in a map, no reliance on the
// production convolution.
std::map<Rational, Rational> brute_convolution(const AtomicStrategy& a, const AtomicStrategy& b) {
  std::map<Rational, Rational> out;
  for (const Atom& p : a.atoms())
    for (const Atom& q : b.atoms()) out[p.x + q.x] += p.w * q.w;
  return out;
}

}  // namespace

TEST_CASE("cdf and left limit") {
  AtomicStrategy f(Rational(7), {{Rational(0), Rational(1, 2)}, {Rational(7), Rational(1, 2)}});
  CHECK(cdf(f, Rational(0)) == Rational(1, 2));
  CHECK(cdf(f, Rational(6)) == Rational(1, 2));
  CHECK(cdf(f, Rational(7)) == Rational(1));
  CHECK(cdf(f, Rational(-1)) == Rational(0));
  CHECK(cdf_left(f, Rational(7)) == Rational(1, 2));
  CHECK(cdf_left(f, Rational(0)) == Rational(0));

  AtomicStrategy comb(Rational(36), {{Rational(0), Rational(1, 3)},
                                     {Rational(14), Rational(1, 3)},
                                     {Rational(28), Rational(1, 3)}});
  CHECK(cdf(comb, Rational(28)) == Rational(1));
  CHECK(cdf_left(comb, Rational(15)) == Rational(2, 3));

  AtomicStrategy point = AtomicStrategy::dirac(Rational(0), Rational(1));
  CHECK(cdf_left(point, Rational(0)) == Rational(0));
}

TEST_CASE("strategy invariants are rejected with named diagnostics") {
  using Catch::Matchers::ContainsSubstring;
  CHECK_THROWS_WITH(AtomicStrategy(Rational(1), {{Rational(2), Rational(1)}}),
                    ContainsSubstring("within [0, budget]"));
  CHECK_THROWS_WITH(AtomicStrategy(Rational(5), {{Rational(1), Rational(1, 2)},
                                                 {Rational(1), Rational(1, 2)}}),
                    ContainsSubstring("strictly increasing"));
  CHECK_THROWS_WITH(AtomicStrategy(Rational(5), {{Rational(1), Rational(0)},
                                                 {Rational(2), Rational(1)}}),
                    ContainsSubstring("weights positive"));
  CHECK_THROWS_WITH(AtomicStrategy(Rational(5), {{Rational(1), Rational(9, 10)}}),
                    ContainsSubstring("weights sum to 1"));
}

TEST_CASE("convolution merges coinciding sums") {
  AtomicStrategy half(Rational(7), {{Rational(0), Rational(1, 2)}, {Rational(7), Rational(1, 2)}});
  AtomicStrategy conv = convolve(half, half);
  REQUIRE(conv.atoms().size() == 3);
  CHECK(conv.budget() == Rational(14));
  CHECK(conv.atoms()[0] == Atom{Rational(0), Rational(1, 4)});
  CHECK(conv.atoms()[1] == Atom{Rational(7), Rational(1, 2)});
  CHECK(conv.atoms()[2] == Atom{Rational(14), Rational(1, 4)});
}

TEST_CASE("dirac at zero is the convolution identity") {
  blotto::SeededRng rng(11);
  AtomicStrategy f = random_strategy(rng, Rational(9));
  AtomicStrategy id = AtomicStrategy::dirac(Rational(0), Rational(0));
  AtomicStrategy conv = convolve(id, f);
  CHECK(conv.budget() == f.budget());
  CHECK(conv.atoms() == f.atoms());
}

TEST_CASE("pairwise-sum enumeration example") {
  AtomicStrategy f1(Rational(14), {{Rational(0), Rational(1, 2)}, {Rational(14), Rational(1, 2)}});
  AtomicStrategy f2(Rational(56), {{Rational(0), Rational(1, 3)},
                                   {Rational(28), Rational(1, 3)},
                                   {Rational(56), Rational(1, 3)}});
  AtomicStrategy conv = convolve(f1, f2);
  REQUIRE(conv.atoms().size() == 6);
  for (long i = 0; i < 6; ++i) {
    CHECK(conv.atoms()[static_cast<std::size_t>(i)].x == Rational(14 * i));
    CHECK(conv.atoms()[static_cast<std::size_t>(i)].w == Rational(1, 6));
  }
}

TEST_CASE("convolution properties on random strategies") {
  blotto::SeededRng rng(3);
  for (int round = 0; round < 40; ++round) {
    AtomicStrategy a = random_strategy(rng, Rational(rng.next_long(1, 20)));
    AtomicStrategy b = random_strategy(rng, Rational(rng.next_long(1, 20)));
    AtomicStrategy ab = convolve(a, b);

    CHECK(ab == convolve(b, a));
    CHECK(ab.budget() == a.budget() + b.budget());

    Rational mass;
    for (const Atom& at : ab.atoms()) {
      mass += at.w;
      CHECK(at.x.sign() >= 0);
      CHECK(at.x <= ab.budget());
    }
    CHECK(mass == Rational(1));

    auto oracle = brute_convolution(a, b);
    REQUIRE(oracle.size() == ab.atoms().size());
    std::size_t i = 0;
    for (const auto& [x, w] : oracle) {
      CHECK(ab.atoms()[i].x == x);
      CHECK(ab.atoms()[i].w == w);
      ++i;
    }

    // cdf is nondecreasing with cdf_left <= cdf, equal iff no atom there.
    Rational probe = rng.next_in(Rational(0), ab.budget());
    CHECK(cdf_left(ab, probe) <= cdf(ab, probe));
    CHECK(cdf(ab, probe) <= cdf(ab, probe + Rational(1, 7)));
  }
}

TEST_CASE("convolution associativity") {
  blotto::SeededRng rng(5);
  for (int round = 0; round < 10; ++round) {
    AtomicStrategy a = random_strategy(rng, Rational(4));
    AtomicStrategy b = random_strategy(rng, Rational(6));
    AtomicStrategy c = random_strategy(rng, Rational(5));
    CHECK(convolve(convolve(a, b), c) == convolve(a, convolve(b, c)));
  }
}

TEST_CASE("integer convolution") {
  IntStrategy identity(0, {Rational(1)});
  IntStrategy q(2, {Rational(1, 4), Rational(1, 2), Rational(1, 4)});
  CHECK(convolve_int(identity, q) == q);

  IntStrategy coin(1, {Rational(1, 2), Rational(1, 2)});
  IntStrategy two = convolve_int(coin, coin);
  CHECK(two.probs() == std::vector<Rational>{Rational(1, 4), Rational(1, 2), Rational(1, 4)});

  IntStrategy u3 = IntStrategy::uniform(2);
  IntStrategy conv = convolve_int(u3, u3);
  CHECK(conv.probs() == std::vector<Rational>{Rational(1, 9), Rational(2, 9), Rational(3, 9),
                                              Rational(2, 9), Rational(1, 9)});
}

TEST_CASE("integer and atomic convolutions agree on integer atoms") {
  blotto::SeededRng rng(13);
  for (int round = 0; round < 20; ++round) {
    long b1 = rng.next_long(0, 6), b2 = rng.next_long(0, 6);
    IntStrategy p = [&] {
      std::vector<Rational> probs(static_cast<std::size_t>(b1) + 1);
      long total = 0;
      std::vector<long> raw(probs.size());
      for (long& r : raw) total += (r = rng.next_long(0, 50));
      if (total == 0) {
        raw[0] = 1;
        total = 1;
      }
      for (std::size_t i = 0; i < probs.size(); ++i) probs[i] = Rational(raw[i], total);
      return IntStrategy(b1, std::move(probs));
    }();
    IntStrategy q = IntStrategy::uniform(b2);
    IntStrategy direct = convolve_int(p, q);
    blotto::AtomicStrategy embedded = convolve(to_atomic(p), to_atomic(q));
    CHECK(to_int_strategy(embedded) == direct);
  }
}

TEST_CASE("int strategy invariants") {
  CHECK_THROWS_AS(IntStrategy(1, {Rational(1)}), blotto::error);
  CHECK_THROWS_AS(IntStrategy(1, {Rational(1, 2), Rational(1, 3)}), blotto::error);
  CHECK_THROWS_AS(IntStrategy(1, {Rational(3, 2), Rational(-1, 2)}), blotto::error);
}
