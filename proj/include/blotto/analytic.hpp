#pragma once

#include "blotto/error.hpp"
#include "blotto/game.hpp"
#include "blotto/rational.hpp"

namespace blotto {

/// Share of a battlefield won by allocating x against y: win 1, tie 1/2, lose 0.
inline Rational win_share(const Rational& x, const Rational& y) {
  if (x > y) return Rational(1);
  if (x == y) return Rational(1, 2);
  return Rational(0);
}

/// Team payoff of the pure profile (b, e): v1*W(b,e) + v2*W(B-b, E-e).
/// The enemy's payoff is v1 + v2 minus this (constant-sum).
inline Rational payoff_pure(const GameConfig& cfg, const Rational& b, const Rational& e) {
  if (b.sign() < 0 || b > cfg.B) fail(errc::out_of_range, "allocation b outside [0, B]");
  if (e.sign() < 0 || e > cfg.E) fail(errc::out_of_range, "allocation e outside [0, E]");
  return cfg.v1 * win_share(b, e) + cfg.v2 * win_share(cfg.B - b, cfg.E - e);
}

/// Closed-form centralized security value for unit battlefield values:
/// 1 - 1/m for B < E in partition m, 1 at B = E, 1 + 1/m for B > E with
/// B/E in ((m+1)/m, m/(m-1)].
inline Rational centralized_value(const GameConfig& cfg) {
  if (!cfg.unit_values()) fail(errc::unsupported_values, "centralized value requires v1 = v2 = 1");
  if (cfg.B == cfg.E) return Rational(1);
  if (cfg.B < cfg.E) {
    long m = partition_of(cfg).m;
    return Rational(1) - Rational(1, m);
  }
  // B > E: the unique m with E/(B-E) < m <= B/(B-E) is floor(B/(B-E)).
  long m = (cfg.B / (cfg.B - cfg.E)).floor_long();
  return Rational(1) + Rational(1, m);
}

}  // namespace blotto
