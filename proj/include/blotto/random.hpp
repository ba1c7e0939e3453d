#pragma once

#include <cstdint>
#include <random>

#include "blotto/rational.hpp"

namespace blotto {

/// Deterministic random source for reproducible experiments. mt19937_64 has a
/// standard-specified output sequence; the integer draws below avoid
/// std::uniform_int_distribution, whose mapping is implementation-defined.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform integer in [lo, hi], unbiased via rejection.
  long next_long(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
    std::uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return lo + static_cast<long>(v % span);
  }

  /// Uniform rational k/10^4 with k in {0, ..., 10^4}.
  Rational next_fraction() { return Rational(next_long(0, kDenom), kDenom); }

  /// Uniform rational on [lo, hi] with granularity (hi - lo)/10^4.
  Rational next_in(const Rational& lo, const Rational& hi) {
    return lo + (hi - lo) * next_fraction();
  }

  static constexpr long kDenom = 10000;

 private:
  std::mt19937_64 gen_;
};

}  // namespace blotto
