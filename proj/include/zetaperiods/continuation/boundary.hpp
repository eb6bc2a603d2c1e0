#pragma once

// Summation on the boundary of the disc of convergence. The series there
// converge only like a power of n, so a partial sum is combined with an
// asymptotic expansion of the tail in powers of 1/n, summed with Hurwitz zeta.

#include <cmath>
#include <string>
#include <vector>

#include "zetaperiods/arith/complex.hpp"
#include "zetaperiods/arith/constants.hpp"

namespace zp {

/// Terms s^n * w(n) * n^-power * extra(n), n >= 1, where w(n) is binom(2n,n)/4^n
/// (central) or its reciprocal, and extra(n) = shift + 2n (H_{n-1} - H_{2n-1})
/// when harmonic is set, 1 otherwise.
struct BoundarySeries {
  enum class Weight { central, inverse };
  Weight weight = Weight::central;
  int sign = 1;  // s = +1 or -1
  int power = 1;
  bool harmonic = false;
  int shift = 0;
};

struct BoundarySum {
  Real value;
  Real error;  // estimate: first omitted asymptotic term plus rounding
};

struct BoundaryOptions {
  int digits = 40;
  long cutoff = 2000;  // direct summation up to n = cutoff
  int asymptotic_terms = 14;
};

namespace detail {

inline Rational bernoulli_poly(int m, const Rational& x) {
  Rational acc = 0;
  for (int j = 0; j <= m; ++j) acc += Rational(binomial(m, j)) * bernoulli(j) * pow(x, m - j);
  return acc;
}

inline std::vector<Rational> series_exp(const std::vector<Rational>& l) {
  const std::size_t J = l.size();
  std::vector<Rational> e(J, Rational(0));
  e[0] = 1;
  for (std::size_t n = 1; n < J; ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += Rational(static_cast<long>(k)) * l[k] * e[n - k];
    e[n] = acc / static_cast<long>(n);
  }
  return e;
}

/// binom(2n,n)/4^n = (pi n)^(-1/2) sum_j c_j n^-j; the sign flips the log for the reciprocal.
inline std::vector<Rational> central_asymptotics(int J, int direction) {
  std::vector<Rational> l(J, Rational(0));
  const Rational half = make_rational(1, 2);
  for (int k = 1; k < J; ++k) {
    Rational c = (bernoulli_poly(k + 1, half) - bernoulli_poly(k + 1, Rational(1))) / (k * (k + 1));
    if (k % 2 == 0) c = -c;
    l[k] = c * direction;
  }
  return series_exp(l);
}

/// H_{n-1} - H_{2n-1} + log 2 as a series in 1/n.
inline std::vector<Rational> harmonic_difference_asymptotics(int J) {
  std::vector<Rational> e(J, Rational(0));
  if (J > 1) e[1] = make_rational(-1, 4);
  for (int k = 1; 2 * k < J; ++k) {
    Rational f = 1 - pow(Rational(4), -k);
    e[2 * k] = -bernoulli(2 * k) / (2 * k) * f;
  }
  return e;
}

/// sum_{n > N} s^n n^-sigma for N even.
inline Real power_tail(int sign, const Real& sigma, long N, Precision p) {
  if (sign > 0) return hurwitz_zeta(sigma, Real(N + 1, p), p);
  Real scale = pow(Real(2, p), -sigma);
  Real even = hurwitz_zeta(sigma, Real(make_rational(N + 2, 2), p), p);
  Real odd = hurwitz_zeta(sigma, Real(make_rational(N + 1, 2), p), p);
  return scale * (even - odd);
}

}  // namespace detail

inline BoundarySum boundary_sum(const BoundarySeries& s, BoundaryOptions opt = {}) {
  if (s.sign != 1 && s.sign != -1) throw InvalidInput("boundary series sign must be +1 or -1");
  const Precision p(opt.digits);
  const Precision w = p.with_guard();
  long N = opt.cutoff + (opt.cutoff % 2);
  const int J = opt.asymptotic_terms;
  const int dir = s.weight == BoundarySeries::Weight::central ? 1 : -1;
  const Real log2 = const_log2(w);

  // direct part
  Real sum(0, w), wn(1, w), H1(0, w), H2(0, w);  // H1 = H_{n-1}, H2 = H_{2n-1}
  for (long n = 1; n <= N; ++n) {
    // binom(2n,n)/4^n = prod (2m-1)/(2m)
    if (dir > 0) {
      wn *= 2 * n - 1;
      wn /= 2 * n;
    } else {
      wn *= 2 * n;
      wn /= 2 * n - 1;
    }
    if (n > 1) {
      H1 += Real(make_rational(1, n - 1), w);
      H2 += Real(make_rational(1, 2 * n - 2), w);
    }
    H2 += Real(make_rational(1, 2 * n - 1), w);
    Real t = wn / pow(Real(n, w), static_cast<long>(s.power));
    if (s.harmonic) t *= (H1 - H2) * (2 * n) + s.shift;
    if (s.sign < 0 && n % 2 == 1) t = -t;
    sum += t;
  }

  // tail: term = s^n A n^-sigma0 sum_j a_j n^-j
  std::vector<Real> a;
  for (const auto& c : detail::central_asymptotics(J + 1, dir)) a.emplace_back(c, w);
  Real A = dir > 0 ? Real(1, w) / sqrt(const_pi(w)) : sqrt(const_pi(w));
  Real sigma0 = Real(s.power, w) + Rational(dir > 0 ? make_rational(1, 2) : make_rational(-1, 2));
  if (s.harmonic) {
    // shift + 2n(-log 2 + e(1/n)) = n (-2 log 2 + (shift + 2 e_1) / n + 2 e_2 / n^2 ...)
    auto e = detail::harmonic_difference_asymptotics(J + 1);
    std::vector<Real> f(J + 1, Real(0, w));
    f[0] = log2 * -2;
    for (int j = 1; j <= J; ++j) f[j] = Real(e[j] * 2, w);
    f[1] += s.shift;
    std::vector<Real> prod(J + 1, Real(0, w));
    for (int i = 0; i <= J; ++i) {
      for (int j = 0; i + j <= J; ++j) prod[i + j] += a[i] * f[j];
    }
    a = std::move(prod);
    sigma0 -= 1;
  }
  if (!(sigma0 > 1)) throw DomainError("boundary series does not converge fast enough for the tail expansion");
  Real tail(0, w);
  for (int j = 0; j < J; ++j) tail += a[j] * detail::power_tail(s.sign, sigma0 + j, N, w);
  Real omitted = abs(a[J] * detail::power_tail(1, sigma0 + J, N, w));
  BoundarySum out;
  out.value = (sum + A * tail).at(p);
  out.error = (abs(A) * omitted + Real::pow10(-p.digits() + 5, w)).at(p);
  return out;
}

}  // namespace zp
