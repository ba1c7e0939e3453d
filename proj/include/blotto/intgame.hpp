#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "blotto/analytic.hpp"
#include "blotto/construct.hpp"
#include "blotto/error.hpp"
#include "blotto/random.hpp"
#include "blotto/rational.hpp"
#include "blotto/simplex.hpp"
#include "blotto/strategy.hpp"

namespace blotto {

/// Team payoff of every pure profile of the integer game: entries[t][e] is
/// the two-battlefield win share of allocating t against e. All entries lie
/// in {0, 1/2, 1, 3/2, 2} and the game is constant-sum with total 2.
struct PayoffMatrix {
  long B = 0;
  long E = 0;
  std::vector<std::vector<Rational>> entries;

  static PayoffMatrix make(long B, long E) {
    if (B < 0 || E < 0) fail(errc::out_of_range, "budgets must be nonnegative");
    PayoffMatrix pm;
    pm.B = B;
    pm.E = E;
    pm.entries.resize(static_cast<std::size_t>(B) + 1);
    for (long t = 0; t <= B; ++t) {
      auto& row = pm.entries[static_cast<std::size_t>(t)];
      row.reserve(static_cast<std::size_t>(E) + 1);
      for (long e = 0; e <= E; ++e)
        row.push_back(win_share(Rational(t), Rational(e)) +
                      win_share(Rational(B - t), Rational(E - e)));
    }
    return pm;
  }

  const Rational& at(long t, long e) const {
    return entries[static_cast<std::size_t>(t)][static_cast<std::size_t>(e)];
  }
};

struct GameSolution {
  Rational value;
  IntStrategy strategy;
};

namespace detail {

// Exact value and optimal mixed strategy of the matrix game max_q min_e
// q' m[.][e]. Solved in the shifted packing form: with M = m + 1 entrywise
// positive, sigma = max{ 1.w : M w <= 1, w >= 0 } equals the reciprocal of
// the shifted game value, the row player's optimum is the dual vector over
// sigma, and w/sigma is an optimal reply. The slack basis is feasible and
// nondegenerate, so no phase 1 and no degenerate stall at the start.
//
// Rows are generated lazily: the LP is solved on a small working set of
// allocations, every excluded row is priced against the primal vector, and
// violated rows join the set until none remain. At that point the restricted
// optimum is the full optimum and excluded rows carry zero dual weight, so
// the recovered strategy is exact.
inline GameSolution solve_game_lp(const std::vector<std::vector<Rational>>& m, long E) {
  std::size_t K = m.size();  // number of allocations
  std::size_t cols = static_cast<std::size_t>(E) + 1;

  std::vector<std::vector<Rational>> shifted_rows(K);
  for (std::size_t k = 0; k < K; ++k) {
    shifted_rows[k].reserve(cols);
    for (std::size_t e = 0; e < cols; ++e) shifted_rows[k].push_back(m[k][e] + Rational(1));
  }

  std::vector<bool> in_set(K, false);
  std::vector<std::size_t> working;
  const std::size_t seed_count = 12;
  if (K <= seed_count + 2) {
    for (std::size_t k = 0; k < K; ++k) in_set[k] = true;
  } else {
    for (std::size_t i = 0; i < seed_count; ++i)
      in_set[(i * (K - 1)) / (seed_count - 1)] = true;
  }

  LpResult res;
  for (;;) {
    working.clear();
    for (std::size_t k = 0; k < K; ++k)
      if (in_set[k]) working.push_back(k);

    LpProblem p;
    p.objective.assign(cols, Rational(1));
    p.rows.reserve(working.size());
    for (std::size_t k : working)
      p.rows.push_back(LpConstraint{shifted_rows[k], LpRelation::le, Rational(1)});
    res = lp_solve(p);
    if (res.status != LpStatus::optimal || res.objective.sign() <= 0)
      fail(errc::internal, "packing LP must have a positive optimum");

    bool grew = false;
    for (std::size_t k = 0; k < K; ++k) {
      if (in_set[k]) continue;
      Rational cap;
      for (std::size_t e = 0; e < cols; ++e) {
        if (res.x[e].is_zero()) continue;
        cap += shifted_rows[k][e] * res.x[e];
      }
      if (cap > Rational(1)) {
        in_set[k] = true;
        grew = true;
      }
    }
    if (!grew) break;
  }

  if (res.duals.size() != working.size()) fail(errc::internal, "packing LP duals unavailable");
  const Rational& sigma = res.objective;
  Rational shifted = Rational(1) / sigma;

  Rational dual_total;
  for (const Rational& u : res.duals) dual_total += u;
  if (dual_total != sigma) fail(errc::internal, "duals violate strong duality");
  std::vector<Rational> probs(K, Rational(0));
  for (std::size_t i = 0; i < working.size(); ++i) probs[working[i]] = res.duals[i] / sigma;
  IntStrategy strategy(static_cast<long>(K) - 1, std::move(probs));

  // Certificate, independent of simplex internals: the returned strategy
  // guarantees the shifted value against every enemy column, and the scaled
  // primal vector caps every row at it (verified for the working rows here,
  // for the rest by the pricing loop above).
  Rational worst;
  bool first = true;
  for (std::size_t e = 0; e < cols; ++e) {
    Rational u;
    for (std::size_t k = 0; k < K; ++k) {
      if (strategy.probs()[k].is_zero()) continue;
      u += strategy.probs()[k] * shifted_rows[k][e];
    }
    if (first || u < worst) worst = std::move(u);
    first = false;
  }
  if (worst != shifted) fail(errc::internal, "strategy does not attain the LP value");
  for (std::size_t k : working) {
    Rational cap;
    for (std::size_t e = 0; e < cols; ++e) {
      if (res.x[e].is_zero()) continue;
      cap += shifted_rows[k][e] * res.x[e];
    }
    if (cap > Rational(1)) fail(errc::internal, "enemy certificate violates its cap");
  }
  return {shifted - Rational(1), std::move(strategy)};
}

}  // namespace detail

/// Exact security value of the centralized integer game, with an optimal
/// mixed strategy.
inline GameSolution centralized_value_int(long B, long E) {
  PayoffMatrix pm = PayoffMatrix::make(B, E);
  return detail::solve_game_lp(pm.entries, E);
}

/// Exact optimum of the convex slice with one factor held fixed: the free
/// factor's strategy sees the effective payoff sum_j fixed_j * entries[j+k][e],
/// linear in the free probabilities.
inline GameSolution best_response_lp(const PayoffMatrix& pm, const IntStrategy& fixed,
                                     int fixed_side, long free_budget) {
  if (fixed_side != 1 && fixed_side != 2)
    fail(errc::dimension_mismatch, "fixed_side must be 1 or 2");
  if (fixed.budget() + free_budget != pm.B)
    fail(errc::dimension_mismatch, "fixed budget plus free budget must equal B");
  std::vector<std::vector<Rational>> eff(static_cast<std::size_t>(free_budget) + 1,
                                         std::vector<Rational>(static_cast<std::size_t>(pm.E) + 1,
                                                               Rational(0)));
  for (long j = 0; j <= fixed.budget(); ++j) {
    const Rational& w = fixed.prob(j);
    if (w.is_zero()) continue;
    for (long k = 0; k <= free_budget; ++k) {
      auto& out = eff[static_cast<std::size_t>(k)];
      const auto& in = pm.entries[static_cast<std::size_t>(j + k)];
      for (long e = 0; e <= pm.E; ++e) {
        if (in[static_cast<std::size_t>(e)].is_zero()) continue;
        out[static_cast<std::size_t>(e)].addmul(w, in[static_cast<std::size_t>(e)]);
      }
    }
  }
  return detail::solve_game_lp(eff, pm.E);
}

/// Exact worst case of a product profile against every integer enemy
/// allocation.
inline Rational eval_value_int(const PayoffMatrix& pm, const IntStrategy& f1,
                               const IntStrategy& f2) {
  if (f1.budget() + f2.budget() != pm.B)
    fail(errc::dimension_mismatch, "profile budgets must sum to B");
  IntStrategy conv = convolve_int(f1, f2);
  Rational worst;
  bool first = true;
  for (long e = 0; e <= pm.E; ++e) {
    Rational u;
    for (long t = 0; t <= pm.B; ++t) {
      if (conv.prob(t).is_zero()) continue;
      u += conv.prob(t) * pm.at(t, e);
    }
    if (first || u < worst) worst = std::move(u);
    first = false;
  }
  return worst;
}

/// Best product profile found by multistart alternating best responses,
/// with its exact worst-case value. The value is a certified lower bound on
/// the distributed security value of the integer game; the true optimum may
/// be higher because the product constraint makes the program non-convex.
struct SolveResult {
  Rational lower_bound;
  IntStrategy f1;
  IntStrategy f2;
  long starts_used = 0;
  long iterations = 0;  // alternation rounds spent on the best start
  std::uint64_t seed = 0;
};

namespace detail {

inline IntStrategy random_simplex_point(SeededRng& rng, long budget) {
  std::vector<long> raw(static_cast<std::size_t>(budget) + 1);
  long total = 0;
  while (total == 0) {
    total = 0;
    for (long& r : raw) {
      r = rng.next_long(0, SeededRng::kDenom);
      total += r;
    }
  }
  std::vector<Rational> probs;
  probs.reserve(raw.size());
  for (long r : raw) probs.push_back(Rational(r, total));
  return IntStrategy(budget, std::move(probs));
}

// Pushforward split of a centralized strategy: allocation t maps to
// (max(0, t - B2), min(t, B2)).
inline std::pair<IntStrategy, IntStrategy> marginal_split(const IntStrategy& p, long b1) {
  long b2 = p.budget() - b1;
  std::vector<Rational> m1(static_cast<std::size_t>(b1) + 1, Rational(0));
  std::vector<Rational> m2(static_cast<std::size_t>(b2) + 1, Rational(0));
  for (long t = 0; t <= p.budget(); ++t) {
    m1[static_cast<std::size_t>(t > b2 ? t - b2 : 0)] += p.prob(t);
    m2[static_cast<std::size_t>(t < b2 ? t : b2)] += p.prob(t);
  }
  return {IntStrategy(b1, std::move(m1)), IntStrategy(b2, std::move(m2))};
}

struct AlternationOutcome {
  Rational value;
  IntStrategy f1;
  IntStrategy f2;
  long rounds = 0;
};

inline long encoding_digits(const IntStrategy& s) {
  long total = 0;
  for (const Rational& p : s.probs()) total += static_cast<long>(p.to_string().size());
  return total;
}

// Each best-response vertex inherits the other factor's denominators through
// the effective payoff matrix, so strategy encodings grow geometrically
// across rounds. A round is entered only while the profile encoding stays
// under a fixed budget, in addition to the improvement and round caps.
// Stopping early is sound: every intermediate value is the exact worst case
// of a concrete profile. Structured starts (combs, splits) keep tiny
// encodings and still run to their exact fixed points.
inline constexpr long kEncodingBudget = 400;

inline AlternationOutcome alternate(const PayoffMatrix& pm, IntStrategy f1, IntStrategy f2,
                                    const Rational& tol, long max_rounds = 200) {
  long b1 = f1.budget();
  long b2 = f2.budget();
  Rational v = eval_value_int(pm, f1, f2);
  long rounds = 0;
  while (rounds < max_rounds &&
         (rounds == 0 || encoding_digits(f1) + encoding_digits(f2) <= kEncodingBudget)) {
    // Wide side first: its LP has the large tableau, and f1 carries the
    // round's smallest encodings.
    GameSolution r2 = best_response_lp(pm, f1, 1, b2);
    if (r2.value < v) fail(errc::internal, "alternation decreased the value");
    GameSolution r1 = best_response_lp(pm, r2.strategy, 2, b1);
    if (r1.value < r2.value) fail(errc::internal, "alternation decreased the value");
    f1 = std::move(r1.strategy);
    f2 = std::move(r2.strategy);
    ++rounds;
    Rational improvement = r1.value - v;
    v = std::move(r1.value);
    if (improvement <= tol) break;
  }
  return {std::move(v), std::move(f1), std::move(f2), rounds};
}

inline SolveResult solve_distributed_core(const PayoffMatrix& pm, const GameSolution& centralized,
                                          long B1, long starts, std::uint64_t seed,
                                          const Rational& tol) {
  if (B1 < 0 || Rational(B1) > Rational(pm.B, 2))
    fail(errc::bad_division, "B1 = " + std::to_string(B1) + " outside [0, B/2]");
  long B2 = pm.B - B1;

  std::vector<std::pair<IntStrategy, IntStrategy>> initial;
  if (pm.B < pm.E) {
    PartitionInfo pi = partition_of(GameConfig(Rational(pm.B), Rational(pm.E)));
    if (auto band = band_containing(pi, Rational(B1), Rational(pm.B, 2))) {
      auto [c1, c2] = comb_distributed(pi, band->k1, Rational(B1));
      initial.emplace_back(to_int_strategy(c1), to_int_strategy(c2));
    }
  }
  initial.push_back(marginal_split(centralized.strategy, B1));
  initial.emplace_back(IntStrategy::uniform(B1), IntStrategy::uniform(B2));
  SeededRng rng(seed);
  for (long s = 0; s < starts; ++s) {
    IntStrategy f1 = random_simplex_point(rng, B1);
    IntStrategy f2 = random_simplex_point(rng, B2);
    initial.emplace_back(std::move(f1), std::move(f2));
  }

  std::optional<AlternationOutcome> best;
  long used = 0;
  for (auto& [f1, f2] : initial) {
    AlternationOutcome out = alternate(pm, std::move(f1), std::move(f2), tol);
    ++used;
    if (out.value > centralized.value)
      fail(errc::internal, "product profile exceeded the centralized value");
    if (!best || out.value > best->value) best = std::move(out);
    if (best->value == centralized.value) break;  // provable global optimum
  }

  SolveResult res{best->value, std::move(best->f1), std::move(best->f2), used, best->rounds, seed};
  if (eval_value_int(pm, res.f1, res.f2) != res.lower_bound)
    fail(errc::internal, "solver value disagrees with its own profile");
  return res;
}

}  // namespace detail

inline SolveResult solve_distributed(long B, long E, long B1, long starts, std::uint64_t seed,
                                     const Rational& tol = Rational(0)) {
  PayoffMatrix pm = PayoffMatrix::make(B, E);
  GameSolution centralized = detail::solve_game_lp(pm.entries, E);
  return detail::solve_distributed_core(pm, centralized, B1, starts, seed, tol);
}

/// Brute-force reference for tiny splits: scans the B1-simplex on the grid
/// with the given resolution, solving the exact slice LP for the partner at
/// every grid point. The result is a valid lower bound on the distributed
/// security value and sits within 2*(B1+1)/resolution of the true optimum.
inline Rational oracle_grid(long B, long E, long B1, long resolution) {
  if (B1 > 3) fail(errc::too_large, "grid oracle supports B1 <= 3 only");
  if (B1 < 0 || B1 > B) fail(errc::out_of_range, "B1 outside [0, B]");
  if (resolution < 1) fail(errc::out_of_range, "resolution must be positive");
  PayoffMatrix pm = PayoffMatrix::make(B, E);
  long free_budget = B - B1;

  std::vector<long> counts(static_cast<std::size_t>(B1) + 1, 0);
  std::optional<Rational> best;
  auto visit = [&](auto&& self, std::size_t idx, long remaining) -> void {
    if (idx + 1 == counts.size()) {
      counts[idx] = remaining;
      std::vector<Rational> probs;
      probs.reserve(counts.size());
      for (long c : counts) probs.push_back(Rational(c, resolution));
      IntStrategy f1(B1, std::move(probs));
      GameSolution slice = best_response_lp(pm, f1, 1, free_budget);
      if (!best || slice.value > *best) best = std::move(slice.value);
      return;
    }
    for (long c = 0; c <= remaining; ++c) {
      counts[idx] = c;
      self(self, idx + 1, remaining - c);
    }
  };
  visit(visit, 0, resolution);
  return *best;
}

}  // namespace blotto
