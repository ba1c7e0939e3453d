#pragma once

#include <gmp.h>

#include <compare>
#include <cstring>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "blotto/error.hpp"

namespace blotto {

/// Exact rational number: arbitrary-precision p/q kept in lowest terms with
/// q > 0. Thin value wrapper around GMP's mpq_t; every operation is exact,
/// nothing here ever rounds.
class Rational {
 public:
  Rational() noexcept { mpq_init(q_); }

  Rational(long n) {  // NOLINT: implicit by design, Rational(3) reads as 3/1
    mpq_init(q_);
    mpq_set_si(q_, n, 1);
  }

  Rational(long n, long d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    mpq_init(q_);
    mpq_set_si(q_, n, static_cast<unsigned long>(d));
    mpq_canonicalize(q_);
  }

  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }

  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }

  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }

  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }

  ~Rational() { mpq_clear(q_); }

  /// Parses "p" or "p/q" with decimal digits and an optional leading '-' on
  /// the numerator. The denominator must be a positive integer.
  static Rational parse(std::string_view s) {
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
    if (!is_int_token(num, true) || (slash != std::string_view::npos && !is_int_token(den, false)))
      fail(errc::parse_error, "not a rational: '" + std::string(s) + "'");
    Rational r;
    mpz_set_str(mpq_numref(r.q_), std::string(num).c_str(), 10);
    if (slash != std::string_view::npos) {
      mpz_set_str(mpq_denref(r.q_), std::string(den).c_str(), 10);
      if (mpz_sgn(mpq_denref(r.q_)) == 0)
        fail(errc::parse_error, "zero denominator: '" + std::string(s) + "'");
      mpq_canonicalize(r.q_);
    }
    return r;
  }

  std::string to_string() const {
    std::string s = z_str(mpq_numref(q_));
    if (mpz_cmp_ui(mpq_denref(q_), 1) != 0) s += "/" + z_str(mpq_denref(q_));
    return s;
  }

  int sign() const noexcept { return mpq_sgn(q_); }
  bool is_zero() const noexcept { return mpq_sgn(q_) == 0; }
  bool is_integer() const noexcept { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

  Rational abs() const {
    Rational r;
    mpq_abs(r.q_, q_);
    return r;
  }

  /// Largest integer <= value, as a long. Throws if it does not fit.
  long floor_long() const {
    mpz_t f;
    mpz_init(f);
    mpz_fdiv_q(f, mpq_numref(q_), mpq_denref(q_));
    long v = fitted(f);
    mpz_clear(f);
    return v;
  }

  /// Smallest integer >= value, as a long. Throws if it does not fit.
  long ceil_long() const {
    mpz_t c;
    mpz_init(c);
    mpz_cdiv_q(c, mpq_numref(q_), mpq_denref(q_));
    long v = fitted(c);
    mpz_clear(c);
    return v;
  }

  /// The exact integer value; throws unless the rational is an integer.
  long to_long() const {
    if (!is_integer()) throw std::domain_error("Rational: not an integer: " + to_string());
    return fitted(mpq_numref(q_));
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    Rational r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
  }
  Rational operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
  }

  Rational& operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
  }

  /// *this += a * b and *this -= a * b without Rational temporaries.
  void addmul(const Rational& a, const Rational& b) {
    mpq_t t;
    mpq_init(t);
    mpq_mul(t, a.q_, b.q_);
    mpq_add(q_, q_, t);
    mpq_clear(t);
  }

  void submul(const Rational& a, const Rational& b) {
    mpq_t t;
    mpq_init(t);
    mpq_mul(t, a.q_, b.q_);
    mpq_sub(q_, q_, t);
    mpq_clear(t);
  }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    int c = mpq_cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

  /// Low-level access for exact linear algebra on raw GMP integers.
  mpq_srcptr raw() const noexcept { return q_; }

  /// Builds p/q from raw GMP integers; canonicalizes. q must be nonzero.
  static Rational from_mpz(mpz_srcptr num, mpz_srcptr den) {
    if (mpz_sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
    Rational r;
    mpz_set(mpq_numref(r.q_), num);
    mpz_set(mpq_denref(r.q_), den);
    if (mpz_sgn(mpq_denref(r.q_)) < 0) {
      mpz_neg(mpq_numref(r.q_), mpq_numref(r.q_));
      mpz_neg(mpq_denref(r.q_), mpq_denref(r.q_));
    }
    mpq_canonicalize(r.q_);
    return r;
  }

 private:
  static bool is_int_token(std::string_view t, bool allow_sign) {
    if (allow_sign && !t.empty() && t.front() == '-') t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  }

  static std::string z_str(mpz_srcptr z) {
    std::string buf(mpz_sizeinbase(z, 10) + 2, '\0');
    mpz_get_str(buf.data(), 10, z);
    buf.resize(std::strlen(buf.c_str()));
    return buf;
  }

  static long fitted(mpz_srcptr z) {
    if (!mpz_fits_slong_p(z)) throw std::domain_error("Rational: integer overflows long");
    return mpz_get_si(z);
  }

  mpq_t q_;
};

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace blotto
