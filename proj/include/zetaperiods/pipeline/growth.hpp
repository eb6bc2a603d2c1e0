#pragma once

// Growth diagnostics for power series with rational coefficients: the
// coefficient root |a_n|^(1/n) and the common-denominator root
// lcm(den a_0, ..., den a_n)^(1/n).

#include <string>
#include <vector>

#include "zetaperiods/frobenius/series.hpp"

namespace zp {

struct GrowthSample {
  int n = 0;
  double coefficient_root = 0;   // |a_n|^(1/n), 0 when a_n = 0
  double denominator_root = 0;   // lcm of denominators up to n, ^(1/n)
};

struct GrowthReport {
  int terms = 0;
  std::vector<GrowthSample> samples;
  double sup_coefficient_root = 0;   // over n in [N/2, N]
  double sup_denominator_root = 0;   // over n in [N/2, N]
  double radius_estimate = 0;        // 1 / last nonzero coefficient root
  std::string coefficient_trend;     // "increasing", "decreasing" or "stable"
  std::string denominator_trend;
};

namespace detail {

inline double log_abs(const Integer& z) {
  Precision p(30);
  return Real(Integer(abs(z)), p).log10_abs() * 2.302585092994046;
}

inline std::string trend(const std::vector<double>& v) {
  if (v.size() < 2) return "stable";
  bool up = true, down = true;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] > v[i - 1] * (1 + 1e-12)) down = false;
    if (v[i] < v[i - 1] * (1 - 1e-12)) up = false;
  }
  if (up && down) return "stable";
  if (up) return "increasing";
  if (down) return "decreasing";
  return "mixed";
}

}  // namespace detail

inline GrowthReport gfunction_growth_report(const SeriesQ& s, int N) {
  if (N < 10) throw InvalidInput("growth report needs N >= 10");
  if (static_cast<int>(s.coeffs.size()) <= N) throw InvalidInput("series has fewer than N + 1 coefficients");
  GrowthReport rep;
  rep.terms = N;
  Integer lcm = 1;
  double last_root = 0;
  std::vector<double> coeff_tail, den_tail;
  for (int n = 0; n <= N; ++n) {
    const Rational& a = s.coeffs[n];
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a.get_den().get_mpz_t());
    if (n == 0) continue;
    GrowthSample g;
    g.n = n;
    if (a != 0) g.coefficient_root = std::exp((detail::log_abs(a.get_num()) - detail::log_abs(a.get_den())) / n);
    g.denominator_root = std::exp(detail::log_abs(lcm) / n);
    if (a != 0) last_root = g.coefficient_root;
    if (2 * n >= N) {
      rep.sup_coefficient_root = std::max(rep.sup_coefficient_root, g.coefficient_root);
      rep.sup_denominator_root = std::max(rep.sup_denominator_root, g.denominator_root);
    }
    if (n % std::max(1, N / 8) == 0 || n == N) {
      rep.samples.push_back(g);
      if (2 * n >= N) {
        coeff_tail.push_back(g.coefficient_root);
        den_tail.push_back(g.denominator_root);
      }
    }
  }
  rep.radius_estimate = last_root > 0 ? 1 / last_root : 0;
  rep.coefficient_trend = detail::trend(coeff_tail);
  rep.denominator_trend = detail::trend(den_tail);
  return rep;
}

}  // namespace zp
