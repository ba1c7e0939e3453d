#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "blotto/error.hpp"
#include "blotto/game.hpp"
#include "blotto/random.hpp"
#include "blotto/rational.hpp"
#include "blotto/security.hpp"
#include "blotto/strategy.hpp"

namespace blotto {

/// Division band for a factor k1 of m: the closure [ (k1-1)d, (k1-1)d + r_B ]
/// of I_{k1}. For B1 inside it the two-factor comb split is feasible and
/// recovers the centralized value.
struct Band {
  long k1;
  Rational lo;
  Rational hi;

  bool contains(const Rational& b1) const { return !(b1 < lo) && !(b1 > hi); }
};

/// The m-atom comb: mass 1/m at each of 0, d, 2d, ..., (m-1)d.
inline AtomicStrategy comb_centralized(const PartitionInfo& pi) {
  std::vector<Atom> atoms;
  atoms.reserve(static_cast<std::size_t>(pi.m));
  for (long j = 0; j < pi.m; ++j) atoms.push_back(Atom{Rational(j) * pi.d, Rational(1, pi.m)});
  return AtomicStrategy(pi.B, std::move(atoms));
}

/// One band per factor k1 of m whose interval meets [0, b_half], sorted by
/// lower edge. Bands for distinct factors are disjoint whenever r_B < d.
inline std::vector<Band> bands(const PartitionInfo& pi, const Rational& b_half) {
  std::vector<Band> out;
  for (long k1 = 1; k1 <= pi.m; ++k1) {
    if (pi.m % k1 != 0) continue;
    Rational lo = Rational(k1 - 1) * pi.d;
    if (lo > b_half) continue;
    out.push_back(Band{k1, lo, lo + pi.rB});
  }
  return out;  // ascending k1 implies ascending lo
}

/// Locates the band containing b1, if any.
inline std::optional<Band> band_containing(const PartitionInfo& pi, const Rational& b1,
                                           const Rational& b_half) {
  for (const Band& b : bands(pi, b_half))
    if (b.contains(b1)) return b;
  return std::nullopt;
}

/// Factor split of the comb: F1 holds k1 atoms spaced d apart from 0, F2
/// holds k2 = m/k1 atoms spaced k1*d apart from 0; their convolution is the
/// centralized comb. Feasible exactly when B1 lies in the k1 band (otherwise
/// one factor's support would overrun its budget).
inline std::pair<AtomicStrategy, AtomicStrategy> comb_distributed(const PartitionInfo& pi, long k1,
                                                                  const Rational& B1) {
  if (k1 <= 0 || pi.m % k1 != 0)
    fail(errc::infeasible_division, "k1 = " + std::to_string(k1) + " is not a factor of m");
  Rational lo = Rational(k1 - 1) * pi.d;
  Rational hi = lo + pi.rB;
  if (B1 < lo || B1 > hi)
    fail(errc::infeasible_division, "B1 = " + B1.to_string() + " outside the band [" +
                                        lo.to_string() + ", " + hi.to_string() + "] for k1 = " +
                                        std::to_string(k1));
  long k2 = pi.m / k1;
  std::vector<Atom> a1;
  for (long j = 0; j < k1; ++j) a1.push_back(Atom{Rational(j) * pi.d, Rational(1, k1)});
  std::vector<Atom> a2;
  Rational stride = Rational(k1) * pi.d;
  for (long j = 0; j < k2; ++j) a2.push_back(Atom{Rational(j) * stride, Rational(1, k2)});
  return {AtomicStrategy(B1, std::move(a1)), AtomicStrategy(pi.B - B1, std::move(a2))};
}

namespace detail {

// Cluster of 1-3 atoms carrying `mass` inside [lo, lo + width]. `anchor_lo`
// (resp. `anchor_hi`) pins an atom at the lower (upper) end of the cluster.
inline void make_cluster(SeededRng& rng, const Rational& lo, const Rational& width,
                         const Rational& mass, bool anchor_lo, bool anchor_hi,
                         std::vector<Atom>& out) {
  long n = width.is_zero() ? 1 : rng.next_long(1, 3);
  std::vector<Rational> offsets;
  if (n == 1) {
    offsets.push_back(anchor_hi ? width : Rational(0));
  } else {
    offsets.push_back(anchor_lo ? Rational(0) : rng.next_in(Rational(0), width / Rational(4)));
    if (n == 3) offsets.push_back(rng.next_in(width / Rational(4), width * Rational(3, 4)));
    offsets.push_back(anchor_hi ? width : rng.next_in(width * Rational(3, 4), width));
  }
  std::sort(offsets.begin(), offsets.end());
  offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
  n = static_cast<long>(offsets.size());
  std::vector<long> raw(static_cast<std::size_t>(n));
  long total = 0;
  for (long& r : raw) {
    r = rng.next_long(1, SeededRng::kDenom);
    total += r;
  }
  for (long i = 0; i < n; ++i)
    out.push_back(Atom{lo + offsets[static_cast<std::size_t>(i)],
                       mass * Rational(raw[static_cast<std::size_t>(i)], total)});
}

}  // namespace detail

/// Seeded sampler of product profiles whose convolution satisfies the
/// equal-mass condition while the division B1 sits strictly between the k1=1
/// and k1=2 bands. F1 carries mass 1/2 in clusters touching 0 and B1; F2
/// carries mass 2/m in m/2 clusters placed so every shifted copy of an F1
/// cluster lands inside one interval closure. Requires m even, r_B < d and
/// B1 in (d - r_B, d).
inline std::pair<AtomicStrategy, AtomicStrategy> sample_ss1_profile(const PartitionInfo& pi,
                                                                    const Rational& B1,
                                                                    std::uint64_t seed) {
  detail::require_strict_remainder(pi);
  if (pi.m % 2 != 0) fail(errc::out_of_range, "sampler requires an even partition index");
  Rational gap_lo = pi.d - pi.rB;
  if (!(B1 > gap_lo) || !(B1 < pi.d))
    fail(errc::out_of_range, "B1 = " + B1.to_string() + " outside (" + gap_lo.to_string() + ", " +
                                 pi.d.to_string() + ")");

  SeededRng rng(seed);
  Rational slack = B1 - gap_lo;
  Rational wmax = slack / Rational(8);
  Rational wp1 = rng.next_in(Rational(0), wmax);
  Rational wp2 = rng.next_in(Rational(0), wmax);

  std::vector<Atom> f1_atoms;
  detail::make_cluster(rng, Rational(0), wp1, Rational(1, 2), true, false, f1_atoms);
  detail::make_cluster(rng, B1 - wp2, wp2, Rational(1, 2), false, true, f1_atoms);

  std::vector<Atom> f2_atoms;
  Rational cluster_mass = Rational(2, pi.m);
  for (long i = 1; 2 * i <= pi.m; ++i) {
    Rational wq = rng.next_in(Rational(0), wmax);
    Rational lo = Rational(2 * i - 1) * pi.d - B1 + wp2;
    Rational hi = Rational(2 * i - 2) * pi.d + pi.rB - wq - wp1;
    if (lo > hi) fail(errc::infeasible_gap, "empty placement window for cluster " + std::to_string(i));
    Rational margin = (hi - lo) / Rational(4);
    Rational q = rng.next_in(lo + margin, hi - margin);
    detail::make_cluster(rng, q, wq, cluster_mass, false, false, f2_atoms);
  }

  AtomicStrategy f1(B1, std::move(f1_atoms));
  AtomicStrategy f2(pi.B - B1, std::move(f2_atoms));
  if (!check_ss1(pi, convolve(f1, f2)).ok)
    fail(errc::internal, "sampled profile violates the equal-mass condition");
  return {std::move(f1), std::move(f2)};
}

}  // namespace blotto
