#pragma once

// Arbitrary-precision real numbers on top of MPFR.
//
// Every Real carries its own precision. Binary operations produce a result
// at the larger of the two operand precisions, so mixing precisions never
// silently loses bits.

#include <mpfr.h>
#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <compare>
#include <concepts>
#include <cstdlib>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "zetaperiods/error.hpp"

namespace zp {

/// Working precision, counted in decimal digits.
class Precision {
 public:
  static constexpr int kMinDigits = 30;
  static constexpr int kDefaultGuard = 20;

  constexpr Precision() = default;
  explicit Precision(int digits) : digits_(digits) {
    if (digits < kMinDigits) {
      throw DomainError("precision must be at least " + std::to_string(kMinDigits) +
                        " digits, got " + std::to_string(digits));
    }
  }

  [[nodiscard]] constexpr int digits() const { return digits_; }
  [[nodiscard]] mpfr_prec_t bits() const { return digits_to_bits(digits_); }

  [[nodiscard]] Precision plus(int extra) const { return Precision(digits_ + extra); }
  [[nodiscard]] Precision with_guard(int guard = kDefaultGuard) const { return plus(guard); }

  static mpfr_prec_t digits_to_bits(int digits) {
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
  }
  static int bits_to_digits(mpfr_prec_t bits) {
    return static_cast<int>(std::floor(static_cast<double>(bits - 8) * 0.30102999566398120));
  }

  friend constexpr bool operator==(Precision, Precision) = default;
  friend constexpr auto operator<=>(Precision, Precision) = default;

 private:
  int digits_ = 50;
};

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact scalars that mix directly with Real without an explicit conversion.
template <class T>
concept RealOperand = std::same_as<T, int> || std::same_as<T, long> || std::same_as<T, Rational> ||
                      std::same_as<T, Integer>;

class Real {
 public:
  Real() : Real(Bits{Precision().bits()}) {}
  explicit Real(Precision p) : Real(Bits{p.bits()}) {}

  Real(long v, Precision p) : Real(Bits{p.bits()}) { mpfr_set_si(v_, v, MPFR_RNDN); }
  Real(const Rational& q, Precision p) : Real(Bits{p.bits()}) { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
  Real(const Integer& z, Precision p) : Real(Bits{p.bits()}) { mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }

  Real(const Real& o) : Real(Bits{mpfr_get_prec(o.v_)}) { mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  /// Parses a decimal literal ("1.25", "-3e-5", "17").
  static Real parse(std::string_view text, Precision p) {
    Real r(p);
    std::string s(text);
    if (s.empty() || mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
      throw InvalidInput("not a decimal number: '" + s + "'");
    }
    return r;
  }

  [[nodiscard]] mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
  [[nodiscard]] int digits() const { return Precision::bits_to_digits(bits()); }

  /// Copy rounded (or zero-extended) to another precision.
  [[nodiscard]] Real at(Precision p) const {
    Real r(p);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  [[nodiscard]] mpfr_srcptr get() const { return v_; }
  [[nodiscard]] mpfr_ptr get() { return v_; }

  [[nodiscard]] bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  [[nodiscard]] int sign() const { return mpfr_sgn(v_); }
  [[nodiscard]] double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// log10 |x|, or -infinity for zero. Works far outside double range.
  [[nodiscard]] double log10_abs() const {
    if (is_zero()) return -INFINITY;
    long e = 0;
    double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
    return std::log10(std::fabs(m)) + static_cast<double>(e) * 0.30102999566398120;
  }

  /// Decimal string with `digits` significant digits.
  [[nodiscard]] std::string str(int digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", std::max(digits, 1), v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }
  [[nodiscard]] std::string str() const { return str(digits()); }

  /// Nearest integer (ties away from zero).
  [[nodiscard]] Integer round_to_integer() const {
    Integer z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
  }

  Real& operator+=(const Real& o) { widen(o); mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { widen(o); mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { widen(o); mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { widen(o); mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator+=(long o) { mpfr_add_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator-=(long o) { mpfr_sub_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator*=(long o) { mpfr_mul_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator/=(long o) { mpfr_div_si(v_, v_, o, MPFR_RNDN); return *this; }
  Real& operator+=(const Rational& q) { mpfr_add_q(v_, v_, q.get_mpq_t(), MPFR_RNDN); return *this; }
  Real& operator-=(const Rational& q) { mpfr_sub_q(v_, v_, q.get_mpq_t(), MPFR_RNDN); return *this; }
  Real& operator*=(const Rational& q) { mpfr_mul_q(v_, v_, q.get_mpq_t(), MPFR_RNDN); return *this; }
  Real& operator/=(const Rational& q) {
    if (q == 0) throw DomainError("division by zero rational");
    mpfr_div_q(v_, v_, q.get_mpq_t(), MPFR_RNDN);
    return *this;
  }
  Real& operator+=(const Integer& z) { mpfr_add_z(v_, v_, z.get_mpz_t(), MPFR_RNDN); return *this; }
  Real& operator-=(const Integer& z) { mpfr_sub_z(v_, v_, z.get_mpz_t(), MPFR_RNDN); return *this; }
  Real& operator*=(const Integer& z) { mpfr_mul_z(v_, v_, z.get_mpz_t(), MPFR_RNDN); return *this; }
  Real& operator/=(const Integer& z) { mpfr_div_z(v_, v_, z.get_mpz_t(), MPFR_RNDN); return *this; }

  friend Real operator-(const Real& a) {
    Real r(Bits{a.bits()});
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator+(const Real& a, const Real& b) { return binary(a, b, mpfr_add); }
  friend Real operator-(const Real& a, const Real& b) { return binary(a, b, mpfr_sub); }
  friend Real operator*(const Real& a, const Real& b) { return binary(a, b, mpfr_mul); }
  friend Real operator/(const Real& a, const Real& b) { return binary(a, b, mpfr_div); }

  template <class T>
  friend Real operator+(Real a, const T& b) requires RealOperand<T> { a += to_op(b); return a; }
  template <class T>
  friend Real operator-(Real a, const T& b) requires RealOperand<T> { a -= to_op(b); return a; }
  template <class T>
  friend Real operator*(Real a, const T& b) requires RealOperand<T> { a *= to_op(b); return a; }
  template <class T>
  friend Real operator/(Real a, const T& b) requires RealOperand<T> { a /= to_op(b); return a; }
  template <class T>
  friend Real operator+(const T& b, Real a) requires RealOperand<T> { a += to_op(b); return a; }
  template <class T>
  friend Real operator*(const T& b, Real a) requires RealOperand<T> { a *= to_op(b); return a; }
  template <class T>
  friend Real operator-(const T& b, const Real& a) requires RealOperand<T> { return -(a - b); }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b) {
    int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, long b) {
    int c = mpfr_cmp_si(a.v_, b);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }

  friend std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.str(); }

  // Elementary functions; results keep the argument precision.
  friend Real abs(const Real& x) { return unary(x, mpfr_abs); }
  friend Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
  friend Real exp(const Real& x) { return unary(x, mpfr_exp); }
  friend Real log(const Real& x) {
    if (x.sign() <= 0) throw DomainError("log of non-positive real");
    return unary(x, mpfr_log);
  }
  friend Real sin(const Real& x) { return unary(x, mpfr_sin); }
  friend Real cos(const Real& x) { return unary(x, mpfr_cos); }
  friend Real pow(const Real& x, long n) {
    Real r(Bits{x.bits()});
    mpfr_pow_si(r.v_, x.v_, n, MPFR_RNDN);
    return r;
  }
  friend Real pow(const Real& x, const Real& y) { return binary(x, y, mpfr_pow); }
  friend Real atan2(const Real& y, const Real& x) { return binary(y, x, mpfr_atan2); }
  friend Real hypot(const Real& x, const Real& y) { return binary(x, y, mpfr_hypot); }

  static Real pi(Precision p) {
    Real r(p);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  static Real log2(Precision p) {
    Real r(p);
    mpfr_const_log2(r.v_, MPFR_RNDN);
    return r;
  }
  /// 10^e at precision p.
  static Real pow10(long e, Precision p) {
    Real r(10, p);
    mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
  }

 private:
  struct Bits {
    mpfr_prec_t bits;
  };
  explicit Real(Bits b) {
    mpfr_init2(v_, b.bits);
    mpfr_set_zero(v_, 1);
  }

  void widen(const Real& o) {
    if (o.bits() > bits()) mpfr_prec_round(v_, o.bits(), MPFR_RNDN);
  }

  template <class Fn>
  static Real binary(const Real& a, const Real& b, Fn fn) {
    Real r(Bits{std::max(a.bits(), b.bits())});
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  template <class Fn>
  static Real unary(const Real& a, Fn fn) {
    Real r(Bits{a.bits()});
    fn(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  static long to_op(int v) { return v; }
  static long to_op(long v) { return v; }
  static const Rational& to_op(const Rational& q) { return q; }
  static const Integer& to_op(const Integer& z) { return z; }

  mpfr_t v_;
};

}  // namespace zp
