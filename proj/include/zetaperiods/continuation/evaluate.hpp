#pragma once

// Numerical evaluation of truncated log-series near the expansion point.

#include <cmath>
#include <vector>

#include "zetaperiods/arith/complex.hpp"
#include "zetaperiods/frobenius/basis.hpp"

namespace zp {

struct SeriesValue {
  Complex value;
  Real tail;  // estimated truncation error
};

/// Terms needed so that (|z|/radius)^N is below 10^-digits, with slack for
/// the polynomial growth of the coefficients.
inline int required_terms(double ratio, int digits) {
  if (!(ratio < 1)) throw DomainError("evaluation point is not inside the disc of convergence");
  if (ratio <= 0) return 1;
  return static_cast<int>(std::ceil(digits * std::log(10.0) / -std::log(ratio))) + 40;
}

namespace detail {

// sum_{n} c[n] z^n by Horner, at precision w.
template <class Scalar>
Scalar horner(const std::vector<Rational>& c, const Scalar& z) {
  Scalar acc = z * Rational(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

}  // namespace detail

/// Value of s at z (principal branch of log and of z^rho). The tail estimate
/// assumes geometric decay with ratio |z|/radius beyond the last coefficients.
inline SeriesValue eval_logseries(const LogSeries& s, const Complex& z, Precision p, const Real& radius) {
  Precision w = p.with_guard();
  Complex zw(z.re.at(w), z.im.at(w));
  Real az = abs(zw);
  if (!(az < radius)) {
    throw DomainError("|z| = " + az.str(12) + " is outside the certified radius " + radius.str(12));
  }
  Complex L = log(zw);
  Complex zr = s.rho() == 0 ? Complex(Rational(1), w) : pow(zw, s.rho());
  Complex total(Rational(0), w);
  Complex Lk(Rational(1), w);
  Real tail(0, w);
  Real ratio = az / radius;
  Real absL = abs(L);
  const int N = s.truncation();
  for (int k = 0; k < s.num_blocks(); ++k) {
    if (k > 0) Lk *= L;
    total += detail::horner(s.block(k), zw) * Lk;
    // tail: largest of the last few terms times the geometric factor
    Real last(0, w);
    for (int n = std::max(0, N - 3); n <= N; ++n) {
      Real t = abs(Real(s.at(k, n), w)) * pow(az, static_cast<long>(n));
      if (t > last) last = t;
    }
    tail += last * ratio / (1 - ratio) * pow(absL, static_cast<long>(k));
  }
  total *= zr;
  tail *= abs(zr);
  return {total, tail};
}

/// Value and derivatives 0..order-1 with respect to the chart variable.
inline std::vector<SeriesValue> eval_logseries_jet(const LogSeries& s, const Complex& z, int order, Precision p,
                                                   const Real& radius) {
  std::vector<SeriesValue> out;
  LogSeries d = s;
  for (int m = 0; m < order; ++m) {
    if (m > 0) d = d.derivative();
    out.push_back(eval_logseries(d, z, p, radius));
  }
  return out;
}

/// Jets of every basis element at z, rows indexed by j, including the normalization factor.
inline std::vector<std::vector<Complex>> basis_jets(const FrobeniusBasis& b, const Complex& z, Precision p,
                                                    const Real& radius, Real* max_tail = nullptr) {
  std::vector<std::vector<Complex>> jets;
  for (int j = 0; j < b.order(); ++j) {
    auto vals = eval_logseries_jet(b.solutions[j], z, b.order(), p, radius);
    Complex sc = b.scale(j, p);
    std::vector<Complex> row;
    for (auto& v : vals) {
      row.push_back(v.value * sc);
      if (max_tail) {
        Real t = v.tail * abs(sc);
        if (t > *max_tail) *max_tail = t;
      }
    }
    jets.push_back(std::move(row));
  }
  return jets;
}

}  // namespace zp
