#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "blotto/construct.hpp"
#include "blotto/error.hpp"
#include "blotto/intgame.hpp"
#include "blotto/rational.hpp"

namespace blotto {

/// One row of a division sweep: the solver's certified lower bound for the
/// split B1, the centralized LP value, and -- when B1 falls in a factor
/// band -- the band and the exact value of its comb profile.
struct SweepRecord {
  long b1 = 0;
  Rational lower_bound;
  Rational centralized;
  bool in_band = false;
  std::optional<long> band_k1;
  std::optional<Rational> comb_value;

  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

inline void validate(const SweepRecord& r) {
  if (r.lower_bound > r.centralized)
    fail(errc::internal, "sweep row " + std::to_string(r.b1) + ": lower bound exceeds centralized value");
  if (r.in_band) {
    if (!r.band_k1 || !r.comb_value)
      fail(errc::internal, "sweep row " + std::to_string(r.b1) + ": band fields missing");
    if (r.lower_bound < *r.comb_value)
      fail(errc::internal, "sweep row " + std::to_string(r.b1) + ": lower bound below comb value");
  }
}

/// Runs the distributed solver for every division B1 in {0, ..., b1_max}.
/// Deterministic for a fixed seed; rows are validated before they are
/// returned.
inline std::vector<SweepRecord> run_sweep(long B, long E, long b1_max, long starts,
                                          std::uint64_t seed, const Rational& tol = Rational(0)) {
  if (b1_max < 0 || Rational(b1_max) > Rational(B, 2))
    fail(errc::bad_division, "b1_max outside [0, B/2]");
  PayoffMatrix pm = PayoffMatrix::make(B, E);
  GameSolution centralized = detail::solve_game_lp(pm.entries, E);

  std::optional<PartitionInfo> pi;
  if (B < E) pi = partition_of(GameConfig(Rational(B), Rational(E)));

  std::vector<SweepRecord> rows;
  rows.reserve(static_cast<std::size_t>(b1_max) + 1);
  for (long b1 = 0; b1 <= b1_max; ++b1) {
    SweepRecord rec;
    rec.b1 = b1;
    rec.centralized = centralized.value;
    if (pi) {
      if (auto band = band_containing(*pi, Rational(b1), Rational(B, 2))) {
        rec.in_band = true;
        rec.band_k1 = band->k1;
        auto [c1, c2] = comb_distributed(*pi, band->k1, Rational(b1));
        rec.comb_value = eval_value_int(pm, to_int_strategy(c1), to_int_strategy(c2));
      }
    }
    SolveResult sol = detail::solve_distributed_core(pm, centralized, b1, starts, seed, tol);
    if (b1 == 0 && sol.lower_bound != centralized.value)
      fail(errc::internal, "B1 = 0 must reproduce the centralized value");
    rec.lower_bound = sol.lower_bound;
    validate(rec);
    rows.push_back(std::move(rec));
  }
  return rows;
}

}  // namespace blotto
