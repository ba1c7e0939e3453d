#pragma once

#include <gmp.h>

#include <cstddef>
#include <utility>
#include <vector>

#include "blotto/error.hpp"
#include "blotto/rational.hpp"

namespace blotto {

enum class LpStatus { optimal, infeasible, unbounded };
enum class LpRelation { le, eq, ge };

struct LpConstraint {
  std::vector<Rational> coeffs;
  LpRelation rel;
  Rational rhs;
};

/// maximize objective . x subject to the rows, x >= 0.
struct LpProblem {
  std::vector<Rational> objective;
  std::vector<LpConstraint> rows;
};

struct LpResult {
  LpStatus status;
  std::vector<Rational> x;
  Rational objective;
  /// Shadow prices, one per constraint row. Populated only for problems
  /// given entirely as <= rows with nonnegative right-hand sides (the form
  /// the game solvers use); empty otherwise.
  std::vector<Rational> duals;
};

namespace detail {

// Pivot counter for performance diagnostics; not part of the solver contract.
inline thread_local long g_pivot_count = 0;

// Arbitrary-precision integer with value semantics; the simplex tableau
// element.
class Zint {
 public:
  Zint() noexcept { mpz_init(z_); }
  explicit Zint(long v) {
    mpz_init(z_);
    mpz_set_si(z_, v);
  }
  Zint(const Zint& o) { mpz_init_set(z_, o.z_); }
  Zint(Zint&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  Zint& operator=(const Zint& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  Zint& operator=(Zint&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }
  ~Zint() { mpz_clear(z_); }

  int sign() const noexcept { return mpz_sgn(z_); }
  bool is_zero() const noexcept { return mpz_sgn(z_) == 0; }
  void negate() noexcept { mpz_neg(z_, z_); }
  void set(const Zint& o) { mpz_set(z_, o.z_); }
  void set_si(long v) { mpz_set_si(z_, v); }

  mpz_srcptr raw() const noexcept { return z_; }
  mpz_ptr raw() noexcept { return z_; }

 private:
  mpz_t z_;
};

// Dense two-phase simplex over exact rationals, run on an integer tableau:
// rows are scaled to integers up front and the working matrix holds
// det * R, where R is the usual rational Gauss-Jordan tableau and det > 0 is
// the current basis determinant (Bareiss-style fraction-free pivoting, all
// divisions exact). Signs and ratio comparisons read directly off the scaled
// entries. Pivots start under Dantzig's rule and fall back to Bland's rule
// after a fixed pivot budget per phase; Bland rules out cycling, so the
// solver always terminates.
class SimplexTableau {
 public:
  SimplexTableau(const LpProblem& p) : n_(p.objective.size()) {
    for (const LpConstraint& row : p.rows)
      if (row.coeffs.size() != n_)
        fail(errc::dimension_mismatch, "constraint arity differs from objective arity");

    // Normalize to rhs >= 0; a >= row with zero rhs becomes a <= row so its
    // slack can start basic.
    std::vector<LpConstraint> rows = p.rows;
    for (LpConstraint& row : rows) {
      if (row.rhs.sign() < 0) {
        for (Rational& c : row.coeffs) c = -c;
        row.rhs = -row.rhs;
        if (row.rel == LpRelation::le) row.rel = LpRelation::ge;
        else if (row.rel == LpRelation::ge) row.rel = LpRelation::le;
      }
      if (row.rel == LpRelation::ge && row.rhs.is_zero()) {
        for (Rational& c : row.coeffs) c = -c;
        row.rel = LpRelation::le;
      }
    }

    std::size_t m = rows.size();
    std::size_t slacks = 0, artificials = 0;
    for (const LpConstraint& row : rows) {
      if (row.rel != LpRelation::eq) ++slacks;
      if (row.rel != LpRelation::le) ++artificials;
    }
    cols_ = n_ + slacks + artificials;
    first_artificial_ = n_ + slacks;
    t_.assign(m, std::vector<Zint>(cols_ + 1));
    basis_.resize(m);
    det_.set_si(1);

    duals_available_ = first_artificial_ == cols_;
    for (const LpConstraint& row : p.rows)
      if (row.rel != LpRelation::le || row.rhs.sign() < 0) duals_available_ = false;
    if (duals_available_) {
      slack_col_.resize(m);
      row_scale_.resize(m);
    }

    // Scale every row to integer coefficients.
    mpz_t lcm, tmp, unit;
    mpz_init(lcm);
    mpz_init(tmp);
    mpz_init_set_ui(unit, 1);
    std::size_t slack = n_, art = first_artificial_;
    for (std::size_t r = 0; r < m; ++r) {
      mpz_set_ui(lcm, 1);
      for (const Rational& c : rows[r].coeffs) mpz_lcm(lcm, lcm, mpq_denref(c.raw()));
      mpz_lcm(lcm, lcm, mpq_denref(rows[r].rhs.raw()));
      for (std::size_t j = 0; j < n_; ++j) scaled_set(t_[r][j], rows[r].coeffs[j], lcm, tmp);
      scaled_set(t_[r][cols_], rows[r].rhs, lcm, tmp);
      switch (rows[r].rel) {
        case LpRelation::le:
          t_[r][slack].set_si(1);
          if (duals_available_) {
            slack_col_[r] = slack;
            row_scale_[r] = Rational::from_mpz(lcm, unit);
          }
          basis_[r] = slack++;
          break;
        case LpRelation::ge:
          t_[r][slack++].set_si(-1);
          t_[r][art].set_si(1);
          basis_[r] = art++;
          break;
        case LpRelation::eq:
          t_[r][art].set_si(1);
          basis_[r] = art++;
          break;
      }
    }
    mpz_clear(lcm);
    mpz_clear(tmp);
    mpz_clear(unit);
  }

  LpResult solve(const std::vector<Rational>& objective) {
    if (first_artificial_ < cols_) {
      // Phase 1: maximize minus the sum of artificials.
      std::vector<Zint> phase1(cols_);
      for (std::size_t j = first_artificial_; j < cols_; ++j) phase1[j].set_si(-1);
      build_objective_row(phase1);
      if (run(cols_) == LpStatus::unbounded)
        fail(errc::internal, "phase 1 cannot be unbounded");
      if (!obj_[cols_].is_zero()) return {LpStatus::infeasible, {}, Rational(0), {}};
      evict_artificials();
    }

    // Scale the true objective to integers; the reported value divides the
    // factor back out.
    mpz_t lcm, tmp, unit;
    mpz_init(lcm);
    mpz_init(tmp);
    mpz_init_set_ui(unit, 1);
    mpz_set_ui(lcm, 1);
    for (const Rational& c : objective) mpz_lcm(lcm, lcm, mpq_denref(c.raw()));
    std::vector<Zint> costs(cols_);
    for (std::size_t j = 0; j < n_; ++j) scaled_set(costs[j], objective[j], lcm, tmp);
    Rational obj_scale = Rational::from_mpz(lcm, unit);
    mpz_clear(lcm);
    mpz_clear(tmp);
    mpz_clear(unit);

    build_objective_row(costs);
    LpStatus st = run(first_artificial_);
    if (st == LpStatus::unbounded) return {LpStatus::unbounded, {}, Rational(0), {}};

    std::vector<Rational> x(n_, Rational(0));
    for (std::size_t r = 0; r < t_.size(); ++r)
      if (basis_[r] < n_) x[basis_[r]] = Rational::from_mpz(t_[r][cols_].raw(), det_.raw());
    Rational value = -Rational::from_mpz(obj_[cols_].raw(), det_.raw()) / obj_scale;
    std::vector<Rational> duals;
    if (duals_available_) {
      duals.reserve(slack_col_.size());
      for (std::size_t r = 0; r < slack_col_.size(); ++r)
        duals.push_back(-Rational::from_mpz(obj_[slack_col_[r]].raw(), det_.raw()) *
                        row_scale_[r] / obj_scale);
    }
    return {LpStatus::optimal, std::move(x), std::move(value), std::move(duals)};
  }

 private:
  static void scaled_set(Zint& out, const Rational& v, mpz_srcptr lcm, mpz_t tmp) {
    mpz_divexact(tmp, lcm, mpq_denref(v.raw()));
    mpz_mul(out.raw(), tmp, mpq_numref(v.raw()));
  }

  // obj_[j] holds det * (reduced cost of column j); obj_[cols_] holds
  // det * (-z): det*c_j - sum_r c_B[r] * (det*R[r][j]) is already at scale
  // det.
  void build_objective_row(const std::vector<Zint>& costs) {
    obj_.assign(cols_ + 1, Zint());
    for (std::size_t j = 0; j < cols_; ++j) mpz_mul(obj_[j].raw(), costs[j].raw(), det_.raw());
    for (std::size_t r = 0; r < t_.size(); ++r) {
      const Zint& cb = costs[basis_[r]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (t_[r][j].is_zero()) continue;
        mpz_submul(obj_[j].raw(), cb.raw(), t_[r][j].raw());
      }
    }
  }

  LpStatus run(std::size_t allowed_cols) {
    const long bland_after = 4 * static_cast<long>(t_.size() + allowed_cols);
    for (long iter = 0;; ++iter) {
      std::size_t pc = allowed_cols;
      if (iter < bland_after) {
        for (std::size_t j = 0; j < allowed_cols; ++j)
          if (obj_[j].sign() > 0 &&
              (pc == allowed_cols || mpz_cmp(obj_[j].raw(), obj_[pc].raw()) > 0))
            pc = j;
      } else {
        for (std::size_t j = 0; j < allowed_cols; ++j) {
          if (obj_[j].sign() > 0) {
            pc = j;
            break;
          }
        }
      }
      if (pc == allowed_cols) return LpStatus::optimal;

      std::size_t pr = t_.size();
      mpz_t lhs, rhs;
      mpz_init(lhs);
      mpz_init(rhs);
      for (std::size_t r = 0; r < t_.size(); ++r) {
        if (t_[r][pc].sign() <= 0) continue;
        if (pr == t_.size()) {
          pr = r;
          continue;
        }
        // Compare rhs[r]/t[r][pc] against the incumbent without dividing.
        mpz_mul(lhs, t_[r][cols_].raw(), t_[pr][pc].raw());
        mpz_mul(rhs, t_[pr][cols_].raw(), t_[r][pc].raw());
        int c = mpz_cmp(lhs, rhs);
        if (c < 0 || (c == 0 && basis_[r] < basis_[pr])) pr = r;
      }
      mpz_clear(lhs);
      mpz_clear(rhs);
      if (pr == t_.size()) return LpStatus::unbounded;
      pivot(pr, pc);
    }
  }

  // Fraction-free Gauss-Jordan step: every non-pivot row (and the objective
  // row) maps to (piv * row - row[pc] * pivot_row) / det; the pivot row is
  // left as is and det becomes the pivot entry. Divisions are exact.
  void pivot(std::size_t pr, std::size_t pc) {
    ++g_pivot_count;
    const std::vector<Zint>& prow = t_[pr];
    Zint piv = prow[pc];  // copy; the pivot row itself does not change
    mpz_t acc;
    mpz_init(acc);
    for (std::size_t r = 0; r < t_.size(); ++r) {
      if (r == pr) continue;
      eliminate(t_[r], prow, pc, piv, acc);
    }
    eliminate(obj_, prow, pc, piv, acc);
    mpz_clear(acc);
    if (piv.sign() < 0) {
      // Restore det > 0: negating every row together with det leaves the
      // represented rational tableau unchanged.
      piv.negate();
      for (auto& row : t_)
        for (Zint& v : row) v.negate();
      for (Zint& v : obj_) v.negate();
    }
    det_ = std::move(piv);
    basis_[pr] = pc;
  }

  void eliminate(std::vector<Zint>& row, const std::vector<Zint>& prow, std::size_t pc,
                 const Zint& piv, mpz_t acc) {
    Zint factor = row[pc];  // snapshot before the column is zeroed
    if (factor.is_zero()) {
      // Row only rescales from det to piv.
      for (Zint& v : row) {
        if (v.is_zero()) continue;
        mpz_mul(v.raw(), v.raw(), piv.raw());
        mpz_divexact(v.raw(), v.raw(), det_.raw());
      }
      return;
    }
    for (std::size_t j = 0; j < row.size(); ++j) {
      mpz_mul(row[j].raw(), row[j].raw(), piv.raw());
      if (!prow[j].is_zero()) {
        mpz_mul(acc, factor.raw(), prow[j].raw());
        mpz_sub(row[j].raw(), row[j].raw(), acc);
      }
      if (!mpz_sgn(row[j].raw())) continue;
      mpz_divexact(row[j].raw(), row[j].raw(), det_.raw());
    }
  }

  // After phase 1 every artificial sits at zero; pivot each one out on any
  // usable column (preferring positive entries) or drop its row as
  // redundant.
  void evict_artificials() {
    for (std::size_t r = 0; r < t_.size();) {
      if (basis_[r] < first_artificial_) {
        ++r;
        continue;
      }
      std::size_t pc = first_artificial_;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (!t_[r][j].is_zero()) {
          pc = j;
          if (t_[r][j].sign() > 0) break;  // keep scanning for a positive one
        }
      }
      if (pc == first_artificial_) {
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
      } else {
        pivot(r, pc);
        ++r;
      }
    }
  }

  std::size_t n_;
  std::size_t cols_ = 0;
  std::size_t first_artificial_ = 0;
  bool duals_available_ = false;
  std::vector<std::size_t> slack_col_;
  std::vector<Rational> row_scale_;
  std::vector<std::vector<Zint>> t_;
  std::vector<Zint> obj_;
  std::vector<std::size_t> basis_;
  Zint det_{1};
};

}  // namespace detail

/// Exact-rational simplex. Returns an optimal vertex, or reports the problem
/// infeasible or unbounded.
inline LpResult lp_solve(const LpProblem& p) {
  detail::SimplexTableau tableau(p);
  return tableau.solve(p.objective);
}

}  // namespace blotto
