#pragma once

#include <string>
#include <vector>

#include "blotto/error.hpp"
#include "blotto/rational.hpp"

namespace blotto {

/// Two-battlefield game configuration: team budget B, enemy budget E and the
/// battlefield values (unit values unless stated otherwise).
struct GameConfig {
  Rational B;
  Rational E;
  Rational v1{1};
  Rational v2{1};

  GameConfig(Rational b, Rational e, Rational value1 = 1, Rational value2 = 1)
      : B(std::move(b)), E(std::move(e)), v1(std::move(value1)), v2(std::move(value2)) {
    if (B.sign() <= 0) fail(errc::out_of_range, "team budget must be positive");
    if (E.sign() <= 0) fail(errc::out_of_range, "enemy budget must be positive");
    if (v1.sign() < 0 || v2.sign() < 0) fail(errc::out_of_range, "battlefield values must be nonnegative");
  }

  bool unit_values() const { return v1 == Rational(1) && v2 == Rational(1); }
};

/// Rational interval with explicit endpoint membership.
struct Interval {
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = true;

  bool contains(const Rational& x) const {
    if (x < lo || x > hi) return false;
    if (x == lo && !lo_closed) return false;
    if (x == hi && !hi_closed) return false;
    return true;
  }

  std::string to_string() const {
    return std::string(lo_closed ? "[" : "(") + lo.to_string() + ", " + hi.to_string() +
           (hi_closed ? "]" : ")");
  }
};

/// Partition data for budgets B < E: index m with (m-1)/m < B/E <= m/(m+1),
/// the difference d = E - B, the remainder r_B = B - (m-1)d and the
/// intervals I_1 = [0, r_B], I_j = ((j-1)d, (j-1)d + r_B] for j >= 2.
struct PartitionInfo {
  long m = 0;
  Rational d;
  Rational rB;
  std::vector<Interval> intervals;
  Rational B;
  Rational E;

  /// Closure of I_j (1-based): [(j-1)d, (j-1)d + r_B]. Mass bookkeeping in
  /// the security checks assigns boundary atoms to the closure; with
  /// r_B < d the closures are pairwise disjoint.
  Interval closure(long j) const {
    const Interval& it = intervals.at(static_cast<std::size_t>(j - 1));
    return Interval{it.lo, it.hi, true, true};
  }
};

/// Computes the partition data for cfg. Requires B < E: with d = E - B > 0,
/// m is the unique integer with (m-1)d < B <= md.
inline PartitionInfo partition_of(const GameConfig& cfg) {
  if (!(cfg.B < cfg.E)) fail(errc::budget_order, "partition requires B < E");
  PartitionInfo pi;
  pi.B = cfg.B;
  pi.E = cfg.E;
  pi.d = cfg.E - cfg.B;
  Rational ratio = cfg.B / pi.d;
  pi.m = ratio.is_integer() ? ratio.to_long() : ratio.floor_long() + 1;
  pi.rB = cfg.B - Rational(pi.m - 1) * pi.d;
  pi.intervals.reserve(static_cast<std::size_t>(pi.m));
  for (long j = 1; j <= pi.m; ++j) {
    Rational lo = Rational(j - 1) * pi.d;
    pi.intervals.push_back(Interval{lo, lo + pi.rB, j == 1, true});
  }
  return pi;
}

}  // namespace blotto
