#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "blotto/error.hpp"
#include "blotto/rational.hpp"

namespace blotto {

struct Atom {
  Rational x;  // location
  Rational w;  // weight

  friend bool operator==(const Atom& a, const Atom& b) { return a.x == b.x && a.w == b.w; }
};

/// Finite-support mixed strategy on [0, budget]: sorted atoms with positive
/// weights summing to exactly 1. The constructor enforces the invariants and
/// names the violated one in the diagnostic.
class AtomicStrategy {
 public:
  AtomicStrategy(Rational budget, std::vector<Atom> atoms)
      : budget_(std::move(budget)), atoms_(std::move(atoms)) {
    if (atoms_.empty()) fail(errc::invalid_strategy, "strategy has no atoms");
    Rational total;
    const Rational* prev = nullptr;
    for (const Atom& a : atoms_) {
      if (a.x.sign() < 0 || a.x > budget_)
        fail(errc::invalid_strategy, "atom location within [0, budget] violated at x=" + a.x.to_string());
      if (prev && !(*prev < a.x))
        fail(errc::invalid_strategy, "atom locations strictly increasing violated at x=" + a.x.to_string());
      if (a.w.sign() <= 0)
        fail(errc::invalid_strategy, "atom weights positive violated at x=" + a.x.to_string());
      total += a.w;
      prev = &a.x;
    }
    if (total != Rational(1))
      fail(errc::invalid_strategy, "weights sum to 1 violated (sum = " + total.to_string() + ")");
  }

  static AtomicStrategy dirac(Rational at, Rational budget) {
    return AtomicStrategy(std::move(budget), {Atom{std::move(at), Rational(1)}});
  }

  const Rational& budget() const { return budget_; }
  const std::vector<Atom>& atoms() const { return atoms_; }

  friend bool operator==(const AtomicStrategy& a, const AtomicStrategy& b) {
    return a.budget_ == b.budget_ && a.atoms_ == b.atoms_;
  }

 private:
  Rational budget_;
  std::vector<Atom> atoms_;
};

/// CDF value F(x): total weight of atoms at locations <= x.
inline Rational cdf(const AtomicStrategy& f, const Rational& x) {
  Rational s;
  for (const Atom& a : f.atoms()) {
    if (a.x > x) break;
    s += a.w;
  }
  return s;
}

/// Left limit F(x-): total weight of atoms at locations strictly < x.
inline Rational cdf_left(const AtomicStrategy& f, const Rational& x) {
  Rational s;
  for (const Atom& a : f.atoms()) {
    if (!(a.x < x)) break;
    s += a.w;
  }
  return s;
}

/// Mass carried by the closed interval [lo, hi].
inline Rational mass_closed(const AtomicStrategy& f, const Rational& lo, const Rational& hi) {
  if (hi < lo) return Rational(0);
  return cdf(f, hi) - cdf_left(f, lo);
}

/// Convolution of two independent finite-support strategies: atoms at all
/// pairwise location sums, coinciding sums merged. Budget adds.
inline AtomicStrategy convolve(const AtomicStrategy& f1, const AtomicStrategy& f2) {
  std::map<Rational, Rational> sums;
  for (const Atom& a : f1.atoms())
    for (const Atom& b : f2.atoms()) sums[a.x + b.x] += a.w * b.w;
  std::vector<Atom> atoms;
  atoms.reserve(sums.size());
  for (auto& [x, w] : sums) atoms.push_back(Atom{x, w});
  return AtomicStrategy(f1.budget() + f2.budget(), std::move(atoms));
}

/// Mixed strategy of the integer game: probability vector over allocations
/// {0, ..., budget}.
class IntStrategy {
 public:
  IntStrategy(long budget, std::vector<Rational> probs)
      : budget_(budget), probs_(std::move(probs)) {
    if (budget_ < 0) fail(errc::invalid_strategy, "budget must be nonnegative");
    if (probs_.size() != static_cast<std::size_t>(budget_) + 1)
      fail(errc::invalid_strategy, "probability vector length must be budget + 1");
    Rational total;
    for (const Rational& p : probs_) {
      if (p.sign() < 0) fail(errc::invalid_strategy, "probabilities nonnegative violated");
      total += p;
    }
    if (total != Rational(1))
      fail(errc::invalid_strategy, "weights sum to 1 violated (sum = " + total.to_string() + ")");
  }

  static IntStrategy dirac(long at, long budget) {
    std::vector<Rational> p(static_cast<std::size_t>(budget) + 1, Rational(0));
    p.at(static_cast<std::size_t>(at)) = Rational(1);
    return IntStrategy(budget, std::move(p));
  }

  static IntStrategy uniform(long budget) {
    std::vector<Rational> p(static_cast<std::size_t>(budget) + 1, Rational(1, budget + 1));
    return IntStrategy(budget, std::move(p));
  }

  long budget() const { return budget_; }
  const std::vector<Rational>& probs() const { return probs_; }
  const Rational& prob(long t) const { return probs_[static_cast<std::size_t>(t)]; }

  friend bool operator==(const IntStrategy& a, const IntStrategy& b) {
    return a.budget_ == b.budget_ && a.probs_ == b.probs_;
  }

 private:
  long budget_;
  std::vector<Rational> probs_;
};

/// Discrete convolution; output budget is the sum of the input budgets.
inline IntStrategy convolve_int(const IntStrategy& p, const IntStrategy& q) {
  long budget = p.budget() + q.budget();
  std::vector<Rational> out(static_cast<std::size_t>(budget) + 1, Rational(0));
  for (long i = 0; i <= p.budget(); ++i) {
    if (p.prob(i).is_zero()) continue;
    for (long j = 0; j <= q.budget(); ++j) {
      if (q.prob(j).is_zero()) continue;
      out[static_cast<std::size_t>(i + j)] += p.prob(i) * q.prob(j);
    }
  }
  return IntStrategy(budget, std::move(out));
}

/// Embeds an integer strategy as an atomic one (atoms on the integers).
inline AtomicStrategy to_atomic(const IntStrategy& p) {
  std::vector<Atom> atoms;
  for (long t = 0; t <= p.budget(); ++t)
    if (!p.prob(t).is_zero()) atoms.push_back(Atom{Rational(t), p.prob(t)});
  return AtomicStrategy(Rational(p.budget()), std::move(atoms));
}

/// Converts an atomic strategy with integer locations and integer budget into
/// an IntStrategy; rejects non-integer data.
inline IntStrategy to_int_strategy(const AtomicStrategy& f) {
  if (!f.budget().is_integer())
    fail(errc::invalid_strategy, "budget is not an integer: " + f.budget().to_string());
  long budget = f.budget().to_long();
  std::vector<Rational> probs(static_cast<std::size_t>(budget) + 1, Rational(0));
  for (const Atom& a : f.atoms()) {
    if (!a.x.is_integer())
      fail(errc::invalid_strategy, "atom location is not an integer: " + a.x.to_string());
    probs[static_cast<std::size_t>(a.x.to_long())] = a.w;
  }
  return IntStrategy(budget, std::move(probs));
}

}  // namespace blotto
