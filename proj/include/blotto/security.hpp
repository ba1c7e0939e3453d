#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "blotto/analytic.hpp"
#include "blotto/error.hpp"
#include "blotto/game.hpp"
#include "blotto/rational.hpp"
#include "blotto/strategy.hpp"

namespace blotto {

/// Worst-case value of a team strategy together with a minimizing enemy
/// allocation. The payoff is piecewise constant in the enemy's pure choice,
/// so the infimum is always attained at one of finitely many candidates.
struct ValueReport {
  Rational value;
  Rational witness_e;
  bool attained = true;
};

/// Expected team payoff of the mixed strategy f against the enemy pure
/// allocation e, straight from the per-battlefield win shares.
inline Rational payoff_mixed(const GameConfig& cfg, const AtomicStrategy& f, const Rational& e) {
  Rational u;
  for (const Atom& a : f.atoms()) u += a.w * payoff_pure(cfg, a.x, e);
  return u;
}

/// Exact min over e in [0, E] of the team's expected payoff, for unit values
/// and B < E. Between consecutive points of {atom} u {atom + d} u {0, E} the
/// payoff is constant, so evaluating every breakpoint plus one interior point
/// of each open piece covers the whole range.
inline ValueReport value_of(const GameConfig& cfg, const AtomicStrategy& f) {
  if (!cfg.unit_values()) fail(errc::unsupported_values, "value_of requires v1 = v2 = 1");
  if (!(cfg.B < cfg.E)) fail(errc::budget_order, "value_of requires B < E");
  if (f.budget() != cfg.B)
    fail(errc::out_of_range, "strategy budget " + f.budget().to_string() + " differs from B");

  Rational d = cfg.E - cfg.B;
  std::vector<Rational> breakpoints;
  breakpoints.reserve(f.atoms().size() * 2 + 2);
  breakpoints.push_back(Rational(0));
  breakpoints.push_back(cfg.E);
  for (const Atom& a : f.atoms()) {
    breakpoints.push_back(a.x);
    breakpoints.push_back(a.x + d);  // <= B + d = E
  }
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

  std::vector<Rational> candidates = breakpoints;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    candidates.push_back((breakpoints[i] + breakpoints[i + 1]) / Rational(2));

  std::optional<ValueReport> best;
  for (const Rational& e : candidates) {
    Rational u = payoff_mixed(cfg, f, e);
    if (!best || u < best->value) best = ValueReport{u, e, true};
  }
  return *best;
}

/// Enemy payoff against f at allocation x via the CDF identity
/// F(x) - F(x-d) + 1. Valid where neither x nor x-d carries an atom; used as
/// a cross-check of the win-share evaluation at such points.
inline Rational enemy_payoff_cdf_form(const AtomicStrategy& f, const Rational& x, const Rational& d) {
  return cdf(f, x) - cdf(f, x - d) + Rational(1);
}

/// Mass placement report for the equal-mass condition: one entry per
/// interval plus the mass falling outside all of them.
struct Ss1Report {
  bool ok = false;
  std::vector<std::pair<long, Rational>> masses;  // (j, mass in closure of I_j)
  Rational outside;
};

/// Which right endpoint the dominance condition compares against: the
/// interval [0, x-d) read literally (strict) or with the endpoint included
/// (closed). Strategies with atoms exactly d apart -- the comb family -- put
/// mass precisely at x-d; only the closed reading accepts them, so it is the
/// default. The strict reading stays available for inspection.
enum class Ss2Reading { closed, strict };

struct Ss2Violation {
  long j;
  Rational x;
  Rational lhs;
  Rational rhs;
};

struct Ss2Report {
  bool ok = false;
  std::optional<Ss2Violation> violation;
};

namespace detail {

inline void require_strict_remainder(const PartitionInfo& pi) {
  if (pi.rB == pi.d) fail(errc::boundary_case, "security conditions exclude r_B = d");
  if (pi.rB > pi.d) fail(errc::internal, "r_B > d cannot happen");
}

inline void require_budget(const PartitionInfo& pi, const AtomicStrategy& f) {
  if (f.budget() != pi.B)
    fail(errc::out_of_range, "strategy budget " + f.budget().to_string() + " differs from B");
}

}  // namespace detail

/// Checks that every interval closure [ (j-1)d, (j-1)d + r_B ] carries mass
/// exactly 1/m. Boundary atoms at multiples of d belong to the closure; with
/// r_B < d (enforced) the closures are pairwise disjoint.
inline Ss1Report check_ss1(const PartitionInfo& pi, const AtomicStrategy& f) {
  detail::require_strict_remainder(pi);
  detail::require_budget(pi, f);
  Ss1Report rep;
  rep.ok = true;
  Rational share(1, pi.m);
  Rational covered;
  for (long j = 1; j <= pi.m; ++j) {
    Interval cl = pi.closure(j);
    Rational mass = mass_closed(f, cl.lo, cl.hi);
    if (mass != share) rep.ok = false;
    covered += mass;
    rep.masses.emplace_back(j, std::move(mass));
  }
  rep.outside = Rational(1) - covered;
  return rep;
}

/// Checks the dominance condition: for every j in [m-1] and every atom
/// location x in the closure of I_{j+1},
///     mass(I_{j+1} intersect [0, x]) <= mass(I_j intersect [0, x-d))
/// with the right endpoint of the second interval handled per `reading`.
/// Atom locations suffice: the left side only jumps at atoms and the right
/// side is nondecreasing in x.
inline Ss2Report check_ss2(const PartitionInfo& pi, const AtomicStrategy& f,
                           Ss2Reading reading = Ss2Reading::closed) {
  detail::require_strict_remainder(pi);
  detail::require_budget(pi, f);
  Ss2Report rep;
  rep.ok = true;
  for (long j = 1; j + 1 <= pi.m; ++j) {
    Interval upper = pi.closure(j + 1);
    Interval lower = pi.closure(j);
    for (const Atom& a : f.atoms()) {
      if (a.x < upper.lo) continue;
      if (a.x > upper.hi) break;
      Rational lhs = mass_closed(f, upper.lo, a.x);
      Rational y = a.x - pi.d;  // y <= lower.hi because a.x <= upper.hi
      Rational rhs;
      if (reading == Ss2Reading::closed) {
        rhs = y < lower.lo ? Rational(0) : cdf(f, y) - cdf_left(f, lower.lo);
      } else {
        rhs = !(y > lower.lo) ? Rational(0) : cdf_left(f, y) - cdf_left(f, lower.lo);
      }
      if (lhs > rhs) {
        rep.ok = false;
        rep.violation = Ss2Violation{j, a.x, std::move(lhs), std::move(rhs)};
        return rep;
      }
    }
  }
  return rep;
}

/// Combined security-strategy report: both placement conditions, the exact
/// worst-case value, the closed-form centralized value, and whether the two
/// routes agree ((ss1 and ss2) holding exactly when the value matches).
struct SsCheckReport {
  bool ss1_ok = false;
  std::vector<std::pair<long, Rational>> ss1_masses;
  Rational ss1_outside;
  bool ss2_ok = false;
  std::optional<Ss2Violation> ss2_violation;
  Rational value;
  Rational witness_e;
  Rational centralized;
  bool agreement = false;

  bool is_security_strategy() const { return ss1_ok && ss2_ok; }
};

inline SsCheckReport is_security_strategy(const GameConfig& cfg, const AtomicStrategy& f,
                                          Ss2Reading reading = Ss2Reading::closed) {
  PartitionInfo pi = partition_of(cfg);
  Ss1Report r1 = check_ss1(pi, f);
  Ss2Report r2 = check_ss2(pi, f, reading);
  ValueReport vr = value_of(cfg, f);
  SsCheckReport rep;
  rep.ss1_ok = r1.ok;
  rep.ss1_masses = std::move(r1.masses);
  rep.ss1_outside = std::move(r1.outside);
  rep.ss2_ok = r2.ok;
  rep.ss2_violation = std::move(r2.violation);
  rep.value = vr.value;
  rep.witness_e = vr.witness_e;
  rep.centralized = centralized_value(cfg);
  rep.agreement = (rep.ss1_ok && rep.ss2_ok) == (rep.value == rep.centralized);
  return rep;
}

}  // namespace blotto
