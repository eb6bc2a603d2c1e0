#pragma once

#include <string>
#include <vector>

#include "zetaperiods/arith/complex.hpp"
#include "zetaperiods/arith/constants.hpp"
#include "zetaperiods/frobenius/series.hpp"
#include "zetaperiods/ode/recurrence.hpp"

namespace zp {

enum class Normalization { plain, gamma };

inline std::string to_string(Normalization n) { return n == Normalization::plain ? "plain" : "gamma"; }

inline Normalization parse_normalization(const std::string& s) {
  if (s == "plain") return Normalization::plain;
  if (s == "gamma") return Normalization::gamma;
  throw InvalidInput("normalization must be plain or gamma, got '" + s + "'");
}

/// Power-series solution sum a_n x^(rho+n) with a_0 = seed.
inline SeriesQ analytic_solution(const Recurrence& rec, const Rational& seed, int N, const Rational& rho = 0) {
  SeriesQ s{rho, std::vector<Rational>(N + 1)};
  s.coeffs[0] = seed;
  for (int n = 1; n <= N; ++n) {
    Rational lead = rec.q(0, n, rho);
    if (lead == 0) throw DomainError("resonance: leading recurrence factor vanishes at n = " + std::to_string(n));
    Rational acc = 0;
    for (int t = 1; t <= rec.span() && t <= n; ++t) acc += rec.q(t, n, rho) * s.coeffs[n - t];
    s.coeffs[n] = -acc / lead;
  }
  return s;
}

namespace detail {

// Truncated power series in epsilon, length r (epsilon^r = 0).
using EpsSeries = std::vector<Rational>;

inline EpsSeries eps_mul(const EpsSeries& a, const EpsSeries& b) {
  const std::size_t r = a.size();
  EpsSeries c(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < r; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

inline EpsSeries eps_inverse(const EpsSeries& a) {
  const std::size_t r = a.size();
  if (a[0] == 0) throw DomainError("epsilon series not invertible");
  EpsSeries b(r);
  b[0] = 1 / a[0];
  for (std::size_t k = 1; k < r; ++k) {
    Rational s = 0;
    for (std::size_t i = 1; i <= k; ++i) s += a[i] * b[k - i];
    b[k] = -s * b[0];
  }
  return b;
}

// P(u0 + eps) truncated to eps^r.
inline EpsSeries eps_shift(const PolyQ& P, const Rational& u0, std::size_t r) {
  PolyQ shifted = P.taylor_shift(u0);
  EpsSeries e(r);
  for (std::size_t i = 0; i < r; ++i) e[i] = shifted[static_cast<int>(i)];
  return e;
}

}  // namespace detail

/// Canonical log-solutions varpi_0..varpi_{r-1} at a MUM point x = 0.
struct FrobeniusBasis {
  std::vector<LogSeries> solutions;
  Normalization normalization = Normalization::plain;
  Rational rho = 0;
  std::vector<SeriesQ> h;  // h_k = k! [eps^k] a_n(rho + eps)

  [[nodiscard]] int order() const { return static_cast<int>(solutions.size()); }
  [[nodiscard]] const std::string& chart() const { return solutions.at(0).chart(); }

  /// Numeric factor applied to the rational series of varpi_j: 1 or 1/(2 pi i)^j.
  [[nodiscard]] Complex scale(int j, Precision p) const {
    Complex one(Rational(1), p);
    if (normalization == Normalization::plain || j == 0) return one;
    return pow(two_pi_i(p.with_guard()), -static_cast<long>(j));
  }
};

inline FrobeniusBasis frobenius_basis(const ThetaOperator& op, int N, Normalization norm = Normalization::plain) {
  MumInfo info = is_mum(op);
  if (!info.mum) throw DomainError("operator is not MUM at 0: " + info.diagnostic);
  ThetaOperator cop = op.canonical();
  Recurrence rec = derive_recurrence(cop);
  const int r = cop.order();
  const Rational& rho = info.rho;

  std::vector<detail::EpsSeries> a(N + 1, detail::EpsSeries(r));
  a[0][0] = 1;
  for (int n = 1; n <= N; ++n) {
    detail::EpsSeries acc(r);
    for (int t = 1; t <= rec.span() && t <= n; ++t) {
      auto q = detail::eps_shift(rec.tap(t), Rational(n - t) + rho, r);
      auto term = detail::eps_mul(q, a[n - t]);
      for (int i = 0; i < r; ++i) acc[i] += term[i];
    }
    auto lead = detail::eps_inverse(detail::eps_shift(rec.tap(0), Rational(n) + rho, r));
    auto an = detail::eps_mul(lead, acc);
    for (int i = 0; i < r; ++i) a[n][i] = -an[i];
  }

  FrobeniusBasis basis;
  basis.normalization = norm;
  basis.rho = rho;
  Rational fact = 1;
  for (int k = 0; k < r; ++k) {
    if (k > 0) fact *= k;
    SeriesQ hk{rho, std::vector<Rational>(N + 1)};
    for (int n = 0; n <= N; ++n) hk.coeffs[n] = fact * a[n][k];
    basis.h.push_back(std::move(hk));
  }
  for (int j = 0; j < r; ++j) {
    LogSeries w(rho, N, j + 1, cop.chart());
    for (int k = 0; k <= j; ++k) {
      Rational c(binomial(j, k));
      for (int n = 0; n <= N; ++n) w.at(j - k, n) = c * basis.h[k].coeffs[n];
    }
    basis.solutions.push_back(std::move(w));
  }
  return basis;
}

}  // namespace zp
