#pragma once

// Fundamental constants at arbitrary precision: pi, log 2, zeta(k), and the
// Hurwitz zeta function used for tail sums.
//
// pi and log 2 come from MPFR. Odd zeta values are summed with
// Euler-Maclaurin; even ones are derived from pi and Bernoulli numbers so
// that zeta(2m)/pi^(2m) is exactly rational at every precision.

#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "zetaperiods/arith/rational.hpp"
#include "zetaperiods/arith/real.hpp"

namespace zp {

namespace detail {

class BernoulliTable {
 public:
  /// B_0..B_m (B_1 = -1/2).
  std::vector<Rational> upto(int m) {
    std::lock_guard lock(mu_);
    while (static_cast<int>(b_.size()) <= m) {
      int n = static_cast<int>(b_.size());
      if (n == 0) {
        b_.emplace_back(1);
        continue;
      }
      if (n > 1 && n % 2 == 1) {
        b_.emplace_back(0);
        continue;
      }
      // sum_{k=0}^{n} C(n+1, k) B_k = 0
      Rational s = 0;
      for (int k = 0; k < n; ++k) {
        if (b_[k] == 0) continue;
        s += Rational(binomial(n + 1, k)) * b_[k];
      }
      Rational bn = -s / Rational(n + 1);
      b_.push_back(bn);
    }
    return {b_.begin(), b_.begin() + m + 1};
  }

 private:
  std::mutex mu_;
  std::vector<Rational> b_;
};

inline BernoulliTable& bernoulli_table() {
  static BernoulliTable t;
  return t;
}

/// Constants cache keyed by label. A request at higher precision replaces the
/// stored entry; lower-precision requests are served by rounding it.
class ConstantCache {
 public:
  template <class Fn>
  Real get(const std::string& label, Precision p, Fn compute) {
    {
      std::lock_guard lock(mu_);
      auto it = entries_.find(label);
      if (it != entries_.end() && it->second.bits() >= p.bits()) return it->second.at(p);
    }
    Real v = compute();
    std::lock_guard lock(mu_);
    auto it = entries_.find(label);
    if (it == entries_.end() || it->second.bits() < v.bits()) entries_.insert_or_assign(label, v);
    return v.at(p);
  }

 private:
  std::mutex mu_;
  std::map<std::string, Real> entries_;
};

inline ConstantCache& constant_cache() {
  static ConstantCache c;
  return c;
}

}  // namespace detail

/// Exact Bernoulli number B_n.
inline Rational bernoulli(int n) {
  if (n < 0) throw DomainError("Bernoulli index must be non-negative");
  return detail::bernoulli_table().upto(n)[n];
}

inline Real const_pi(Precision p) {
  return detail::constant_cache().get("pi", p, [&] { return Real::pi(p.with_guard()); });
}

inline Real const_log2(Precision p) {
  return detail::constant_cache().get("log2", p, [&] { return Real::log2(p.with_guard()); });
}

namespace detail {

/// Rising factorial s (s+1) ... (s+m-1) for real s, as a double (for bounds).
inline double rising_log10(double s, int m) {
  double acc = 0;
  for (int i = 0; i < m; ++i) acc += std::log10(std::fabs(s + i));
  return acc;
}

struct EulerMaclaurinPlan {
  long direct_terms;  // M: terms summed explicitly
  int corrections;    // K: Bernoulli correction terms
};

/// Picks (M, K) so that the first omitted correction for sum_{n>=a+M} n^-s
/// is below 10^-digits. For completely monotone summands the omitted-term
/// magnitude bounds the remainder.
inline EulerMaclaurinPlan plan_euler_maclaurin(double s, double a, int digits) {
  long m = std::max<long>(10, static_cast<long>(digits * 0.4));
  for (int attempt = 0; attempt < 12; ++attempt, m *= 2) {
    double x = a + static_cast<double>(m);
    double two_pi = 2.0 * M_PI;
    for (int k = 1; k <= 4 * digits + 40; ++k) {
      // |B_2k|/(2k)! ~ 2 / (2 pi)^(2k)
      double term = std::log10(2.0) - 2.0 * k * std::log10(two_pi) + rising_log10(s, 2 * k - 1) -
                    (s + 2.0 * k - 1.0) * std::log10(x);
      if (term < -digits) return {m, std::max(k - 1, 1)};
      if (k > 4 && term > 0) break;
    }
  }
  throw NumericFailure("Euler-Maclaurin plan failed to converge");
}

}  // namespace detail

/// Hurwitz zeta sum_{n>=0} (n+a)^-s for real s > 1, a > 0.
inline Real hurwitz_zeta(const Real& s, const Real& a, Precision p) {
  Precision w = p.with_guard();
  if (!(s > 1)) throw DomainError("hurwitz_zeta requires s > 1");
  if (!(a > 0)) throw DomainError("hurwitz_zeta requires a > 0");
  Real sw = s.at(w);
  Real aw = a.at(w);
  auto plan = detail::plan_euler_maclaurin(sw.to_double(), aw.to_double(), w.digits());
  Real sum(w);
  for (long n = 0; n < plan.direct_terms; ++n) sum += pow(aw + n, -sw);
  Real x = aw + plan.direct_terms;
  // integral + half endpoint
  sum += pow(x, 1 - sw) / (sw - 1);
  Real xs = pow(x, -sw);
  sum += xs / 2;
  auto bern = detail::bernoulli_table().upto(2 * plan.corrections);
  // term_k = B_2k/(2k)! * s(s+1)...(s+2k-2) * x^(-s-2k+1)
  Real rising = sw;                 // s^(2k-1 rising) for k = 1
  Real xpow = xs / x;               // x^(-s-1)
  Real fact(2, w);                  // (2k)!
  Real inv_x2 = Real(1, w) / (x * x);
  for (int k = 1; k <= plan.corrections; ++k) {
    Real term = rising * xpow / fact;
    term *= bern[2 * k];
    sum += term;
    rising *= (sw + (2 * k - 1)) * (sw + 2 * k);
    xpow *= inv_x2;
    fact *= static_cast<long>((2 * k + 1) * (2 * k + 2));
  }
  return sum.at(p);
}

/// Riemann zeta at an integer k >= 2.
inline Real zeta(int k, Precision p) {
  if (k < 2) throw DomainError("zeta(k) requires k >= 2, got " + std::to_string(k));
  return detail::constant_cache().get("zeta" + std::to_string(k), p, [&] {
    Precision w = p.with_guard();
    if (k % 2 == 0) {
      int m = k / 2;
      // zeta(2m) = (-1)^(m+1) B_2m (2 pi)^(2m) / (2 (2m)!)
      Rational c = bernoulli(k) / (Rational(factorial(k)) * 2);
      if (m % 2 == 0) c = -c;
      Real v = pow(Real::pi(w) * 2, static_cast<long>(k));
      v *= c;
      return v;
    }
    return hurwitz_zeta(Real(k, w), Real(1, w), w);
  });
}

/// Even zeta value as a rational multiple of pi^(2m): zeta(2m) = c * pi^(2m).
inline Rational even_zeta_pi_coefficient(int k) {
  if (k < 2 || k % 2 != 0) throw DomainError("even_zeta_pi_coefficient needs an even k >= 2");
  int m = k / 2;
  Rational c = bernoulli(k) * Rational(Integer(1) << static_cast<unsigned>(k)) / (Rational(factorial(k)) * 2);
  if (m % 2 == 0) c = -c;
  return c;
}

}  // namespace zp
