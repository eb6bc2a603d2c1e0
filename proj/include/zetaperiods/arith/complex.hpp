#pragma once

#include <ostream>
#include <string>

#include "zetaperiods/arith/real.hpp"

namespace zp {

/// Complex number with both parts at one precision.
struct Complex {
  Real re;
  Real im;

  Complex() = default;
  explicit Complex(Precision p) : re(p), im(p) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(const Real& r) : re(r), im(Real(0, Precision(Precision::bits_to_digits(r.bits())))) {}
  Complex(const Rational& r, Precision p) : re(r, p), im(0, p) {}
  Complex(const Rational& r, const Rational& i, Precision p) : re(r, p), im(i, p) {}

  [[nodiscard]] Precision precision() const { return Precision(std::max(re.digits(), im.digits())); }
  [[nodiscard]] bool is_zero() const { return re.is_zero() && im.is_zero(); }

  Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
  Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    Real d = o.re * o.re + o.im * o.im;
    Real r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
  }
  Complex& operator*=(const Real& s) { re *= s; im *= s; return *this; }
  Complex& operator/=(const Real& s) { re /= s; im /= s; return *this; }
  template <RealOperand T>
  Complex& operator+=(const T& s) { re += s; return *this; }
  template <RealOperand T>
  Complex& operator-=(const T& s) { re -= s; return *this; }
  template <RealOperand T>
  Complex& operator*=(const T& s) { re *= s; im *= s; return *this; }
  template <RealOperand T>
  Complex& operator/=(const T& s) { re /= s; im /= s; return *this; }

  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator+(Complex a, const Complex& b) { a += b; return a; }
  friend Complex operator-(Complex a, const Complex& b) { a -= b; return a; }
  friend Complex operator*(Complex a, const Complex& b) { a *= b; return a; }
  friend Complex operator/(Complex a, const Complex& b) { a /= b; return a; }
  friend Complex operator*(Complex a, const Real& s) { a *= s; return a; }
  friend Complex operator*(const Real& s, Complex a) { a *= s; return a; }
  friend Complex operator/(Complex a, const Real& s) { a /= s; return a; }
  friend Complex operator+(Complex a, const Real& s) { a.re += s; return a; }
  friend Complex operator-(Complex a, const Real& s) { a.re -= s; return a; }
  template <RealOperand T>
  friend Complex operator*(Complex a, const T& s) { a *= s; return a; }
  template <RealOperand T>
  friend Complex operator*(const T& s, Complex a) { a *= s; return a; }
  template <RealOperand T>
  friend Complex operator/(Complex a, const T& s) { a /= s; return a; }
  template <RealOperand T>
  friend Complex operator+(Complex a, const T& s) { a += s; return a; }
  template <RealOperand T>
  friend Complex operator-(Complex a, const T& s) { a -= s; return a; }

  friend Complex conj(const Complex& a) { return {a.re, -a.im}; }
  friend Real abs(const Complex& a) { return hypot(a.re, a.im); }
  friend Real arg(const Complex& a) { return atan2(a.im, a.re); }

  /// Principal branch: arg in (-pi, pi]. On the negative real axis the
  /// imaginary part is +pi (upper half-plane limit).
  friend Complex log(const Complex& a) {
    if (a.is_zero()) throw DomainError("log of zero");
    return {log(abs(a)), arg(a)};
  }
  friend Complex exp(const Complex& a) {
    Real m = exp(a.re);
    return {m * cos(a.im), m * sin(a.im)};
  }
  friend Complex pow(const Complex& a, long n) {
    Complex base = a;
    Complex r(Rational(1), a.precision());
    bool neg = n < 0;
    unsigned long e = neg ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    while (e > 0) {
      if (e & 1UL) r *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    if (neg) {
      Complex one(Rational(1), a.precision());
      return one / r;
    }
    return r;
  }
  /// a^q for rational q via the principal logarithm.
  friend Complex pow(const Complex& a, const Rational& q) {
    if (q.get_den() == 1) return pow(a, q.get_num().get_si());
    return exp(log(a) * q);
  }

  [[nodiscard]] std::string str(int digits) const {
    std::string s = re.str(digits);
    if (im.sign() >= 0) s += "+";
    return s + im.str(digits) + "i";
  }
  friend std::ostream& operator<<(std::ostream& os, const Complex& z) { return os << z.str(z.re.digits()); }
};

/// |x| for either scalar flavour; used by templated numerics.
inline Real magnitude(const Real& x) { return abs(x); }
inline Real magnitude(const Complex& z) { return abs(z); }

/// 2*pi*i at precision p.
inline Complex two_pi_i(Precision p) { return {Real(0, p), Real::pi(p) * 2}; }

}  // namespace zp
