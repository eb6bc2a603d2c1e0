#pragma once

// Analytic continuation by local Taylor expansion at ordinary points.
//
// A jet is the vector (y, y', ..., y^(r-1)) at a point. Several jets are
// transported together since they share the local recurrence coefficients.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "zetaperiods/arith/complex.hpp"
#include "zetaperiods/ode/operator.hpp"
#include "zetaperiods/ode/singularities.hpp"

namespace zp {

template <class Scalar>
struct SolutionSample {
  Scalar point;
  std::vector<Scalar> jet;
};

struct TransportOptions {
  double step_factor = 0.5;
  int max_steps = 100000;
};

struct TransportStats {
  int steps = 0;
  double lost_digits = 0;  // worst cancellation seen in a single step
};

inline Complex to_complex(const Complex& z) { return z; }
inline Complex to_complex(const Real& x) { return Complex(x); }

namespace detail {

inline bool is_zero(const Real& x) { return x.is_zero(); }
inline bool is_zero(const Complex& z) { return z.re.is_zero() && z.im.is_zero(); }

inline double log10_mag(const Real& x) { return x.is_zero() ? -1e300 : x.log10_abs(); }
inline double log10_mag(const Complex& z) {
  Real m = abs(z);
  return m.is_zero() ? -1e300 : m.log10_abs();
}

}  // namespace detail

/// Moves jets from z0 to z1 with one local power series. |z1 - z0| must be
/// below the distance from z0 to the nearest singular point.
template <class Scalar>
std::vector<std::vector<Scalar>> taylor_step(const DOperator& d, const Scalar& z0,
                                             const std::vector<std::vector<Scalar>>& jets, const Scalar& z1,
                                             Precision p, TransportStats* stats = nullptr) {
  const int r = d.order();
  Precision w = p.with_guard();
  const Scalar zero = Scalar(Rational(0), w);
  Scalar h = z1 - z0;

  // a[i][l] = [h^l] P_i(z0 + h) * h^(l + r - i)
  int maxdeg = 0;
  for (const auto& c : d.coeffs) maxdeg = std::max(maxdeg, c.degree());
  std::vector<Scalar> hp{Scalar(Rational(1), w)};
  for (int e = 1; e <= maxdeg + r; ++e) hp.push_back(hp.back() * h);
  std::vector<Scalar> zp{Scalar(Rational(1), w)};
  for (int e = 1; e <= maxdeg; ++e) zp.push_back(zp.back() * z0);
  std::vector<std::vector<Scalar>> a(r + 1);
  for (int i = 0; i <= r; ++i) {
    const PolyQ& P = d.coeffs[i];
    for (int l = 0; l <= P.degree(); ++l) {
      Scalar s = zero;
      for (int m = l; m <= P.degree(); ++m) {
        if (P[m] != 0) s += zp[m - l] * Rational(Rational(binomial(m, l)) * P[m]);
      }
      a[i].push_back(s * hp[l + r - i]);
    }
  }
  if (a[r].empty() || detail::is_zero(a[r][0])) throw DomainError("Taylor step starts at a singular point");
  const Scalar lead = a[r][0];

  const double eps_log = -static_cast<double>(w.digits());
  const int max_terms = 40 * w.digits() + 200;
  std::vector<std::vector<Scalar>> out;
  for (const auto& jet : jets) {
    if (static_cast<int>(jet.size()) != r) throw InvalidInput("jet length must equal the operator order");
    std::vector<Scalar> u;
    Integer fact = 1;
    for (int m = 0; m < r; ++m) {
      if (m > 0) fact *= m;
      u.push_back(jet[m] * hp[m] / Scalar(Rational(fact), w));
    }
    double peak = -1e300;
    for (const auto& x : u) peak = std::max(peak, detail::log10_mag(x));
    if (peak < -1e299) {
      out.emplace_back(r, zero);
      continue;
    }
    int quiet = 0;
    int n = 0;
    for (;; ++n) {
      if (n + r > max_terms) throw NumericFailure("Taylor step did not converge; use a smaller step");
      Scalar acc = zero;
      for (int i = 0; i <= r; ++i) {
        for (int l = 0; l < static_cast<int>(a[i].size()) && l <= n; ++l) {
          if (i == r && l == 0) continue;
          const Scalar& y = u[n - l + i];
          if (detail::is_zero(y) || detail::is_zero(a[i][l])) continue;
          Integer ff = 1;
          for (int q = 0; q < i; ++q) ff *= (n - l + i - q);
          acc += a[i][l] * y * ff;
        }
      }
      Integer ffr = 1;
      for (int q = 0; q < r; ++q) ffr *= (n + r - q);
      Scalar next = -acc / (lead * ffr);
      double mag = detail::log10_mag(next);
      peak = std::max(peak, mag);
      // account for derivative weights n^(r-1) when judging smallness
      double weighted = mag + (r - 1) * std::log10(static_cast<double>(n + r + 1));
      u.push_back(std::move(next));
      if (weighted < peak + eps_log) {
        if (++quiet >= r + 2) break;
      } else {
        quiet = 0;
      }
    }
    std::vector<Scalar> res;
    // cancellation is judged against the whole output jet, since a single
    // component may vanish at the endpoint without any loss of accuracy
    double out_mag = -1e300;
    Scalar hinv = Scalar(Rational(1), w) / h;
    Scalar hpow = Scalar(Rational(1), w);
    for (int m = 0; m < r; ++m) {
      Scalar s = zero;
      for (int k = static_cast<int>(u.size()) - 1; k >= m; --k) {
        Integer ff = 1;
        for (int q = 0; q < m; ++q) ff *= (k - q);
        s += u[k] * ff;
      }
      out_mag = std::max(out_mag, detail::log10_mag(s));
      res.push_back(s * hpow);
      hpow *= hinv;
    }
    if (stats && out_mag > -1e299) stats->lost_digits = std::max(stats->lost_digits, peak - out_mag);
    out.push_back(std::move(res));
  }
  if (stats) ++stats->steps;
  return out;
}

/// Transports jets along a polyline, subdividing so that each step stays within
/// step_factor times the distance to the nearest singular point.
template <class Scalar>
std::vector<std::vector<Scalar>> continue_along(const DOperator& d, const SingularitySet& sing, Scalar z,
                                                std::vector<std::vector<Scalar>> jets,
                                                const std::vector<Scalar>& path, Precision p,
                                                TransportStats* stats = nullptr, TransportOptions opt = {}) {
  Precision w = p.with_guard();
  Real too_close = Real::pow10(-std::max(5, p.digits() / 4), w);
  int steps = 0;
  for (const Scalar& target : path) {
    for (;;) {
      Real rem = magnitude(target - z);
      if (rem.is_zero()) break;
      Real dist = sing.distance(to_complex(z));
      Real allowed = rem;
      if (dist.sign() >= 0) {
        if (dist < too_close) {
          throw DomainError("path comes within " + dist.str(6) + " of a singular point near " +
                            to_complex(z).str(12));
        }
        allowed = dist * Rational(opt.step_factor);
      }
      Scalar next = rem <= allowed ? target : z + (target - z) * (allowed / rem);
      for (int attempt = 0;; ++attempt) {
        try {
          jets = taylor_step(d, z, jets, next, p, stats);
          break;
        } catch (const NumericFailure&) {
          if (attempt >= 8) throw;
          next = z + (next - z) * make_rational(1, 2);
        }
      }
      z = next;
      if (++steps > opt.max_steps) {
        throw NumericFailure("path needs more than " + std::to_string(opt.max_steps) +
                             " steps; it likely runs into a singular point");
      }
    }
  }
  return jets;
}

/// Values (jet component 0) of transported jets at each target, visiting the
/// targets in order along the polyline start -> targets[0] -> targets[1] ...
template <class Scalar>
std::vector<std::vector<Scalar>> transport_values(const DOperator& d, const SingularitySet& sing,
                                                  const Scalar& start, std::vector<std::vector<Scalar>> jets,
                                                  const std::vector<Scalar>& targets, Precision p,
                                                  TransportStats* stats = nullptr) {
  std::vector<std::vector<Scalar>> values(jets.size());
  Scalar z = start;
  for (const auto& t : targets) {
    jets = continue_along(d, sing, z, std::move(jets), std::vector<Scalar>{t}, p, stats);
    z = t;
    for (std::size_t j = 0; j < jets.size(); ++j) values[j].push_back(jets[j][0]);
  }
  return values;
}

}  // namespace zp
