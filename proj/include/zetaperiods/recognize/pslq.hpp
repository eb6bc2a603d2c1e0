#pragma once

// Integer relation detection with the PSLQ algorithm.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "zetaperiods/arith/real.hpp"

namespace zp {

enum class RelationStatus { found, none, insufficient_precision };

struct RelationResult {
  RelationStatus status = RelationStatus::none;
  std::vector<Integer> relation;
  Real residual;  // |sum v_i x_i|
  int iterations = 0;
};

struct RelationOptions {
  int detection_digits = 0;  // 0: half the working precision
  Integer height_bound = 1000000;
  int max_iterations = 20000;
};

namespace detail {

inline Integer round_to_integer(const Real& x) {
  Integer z;
  mpfr_get_z(z.get_mpz_t(), x.get(), MPFR_RNDN);
  return z;
}

}  // namespace detail

/// Finds v with |sum v_i x_i| < 10^-detection and max |v_i| <= height_bound.
inline RelationResult integer_relation(const std::vector<Real>& xs, RelationOptions opt = {}) {
  const int n = static_cast<int>(xs.size());
  RelationResult res;
  if (n < 2) throw InvalidInput("integer_relation needs at least two values");
  Precision p(Precision::bits_to_digits(xs[0].bits()));
  for (const auto& x : xs) {
    if (Precision::bits_to_digits(x.bits()) < p.digits()) p = Precision(Precision::bits_to_digits(x.bits()));
  }
  const int detection = opt.detection_digits > 0 ? opt.detection_digits : p.digits() / 2;
  double log_h = Real(opt.height_bound, p).log10_abs();
  if (n * log_h > detection) {
    res.status = RelationStatus::insufficient_precision;
    return res;
  }
  Real thresh = Real::pow10(-detection, p);

  // Trivial relations: a zero entry.
  for (int i = 0; i < n; ++i) {
    if (abs(xs[i]) < thresh) {
      res.status = RelationStatus::found;
      res.relation.assign(n, 0);
      res.relation[i] = 1;
      res.residual = abs(xs[i]);
      return res;
    }
  }

  Real gamma = sqrt(Real(4, p) / 3);
  std::vector<Real> x;
  Real norm(0, p);
  for (const auto& v : xs) {
    x.push_back(v.at(p));
    norm += v * v;
  }
  norm = sqrt(norm);
  for (auto& v : x) v /= norm;
  std::vector<Real> s(n, Real(p));
  {
    Real acc(0, p);
    for (int k = n - 1; k >= 0; --k) {
      acc += x[k] * x[k];
      s[k] = sqrt(acc);
    }
  }
  std::vector<Real> y = x;
  // H is n x (n-1)
  std::vector<std::vector<Real>> H(n, std::vector<Real>(n - 1, Real(0, p)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n - 1 && j <= i; ++j) {
      if (i == j) {
        H[i][j] = s[j + 1] / s[j];
      } else {
        H[i][j] = -(y[i] * y[j]) / (s[j] * s[j + 1]);
      }
    }
  }
  std::vector<std::vector<Integer>> A(n, std::vector<Integer>(n, 0)), B(n, std::vector<Integer>(n, 0));
  for (int i = 0; i < n; ++i) A[i][i] = B[i][i] = 1;

  auto reduce_entry = [&](int i, int j) {
    Integer t = detail::round_to_integer(H[i][j] / H[j][j]);
    if (t == 0) return;
    y[j] += y[i] * t;
    for (int k = 0; k <= j; ++k) H[i][k] -= H[j][k] * t;
    for (int k = 0; k < n; ++k) {
      A[i][k] -= t * A[j][k];
      B[k][j] += t * B[k][i];
    }
  };
  for (int i = 1; i < n; ++i) {
    for (int j = i - 1; j >= 0; --j) reduce_entry(i, j);
  }

  Real bound_limit = Real(opt.height_bound, p) * sqrt(Real(n, p));
  for (int iter = 1; iter <= opt.max_iterations; ++iter) {
    res.iterations = iter;
    // choose m maximizing gamma^(m+1) |H_mm|
    int m = 0;
    Real best(-1, p);
    Real gp = gamma;
    for (int i = 0; i < n - 1; ++i) {
      Real v = gp * abs(H[i][i]);
      if (v > best) {
        best = v;
        m = i;
      }
      gp *= gamma;
    }
    std::swap(y[m], y[m + 1]);
    std::swap(A[m], A[m + 1]);
    std::swap(H[m], H[m + 1]);
    for (int k = 0; k < n; ++k) std::swap(B[k][m], B[k][m + 1]);
    if (m < n - 2) {
      Real t0 = sqrt(H[m][m] * H[m][m] + H[m][m + 1] * H[m][m + 1]);
      Real t1 = H[m][m] / t0;
      Real t2 = H[m][m + 1] / t0;
      for (int i = m; i < n; ++i) {
        Real t3 = H[i][m];
        Real t4 = H[i][m + 1];
        H[i][m] = t1 * t3 + t2 * t4;
        H[i][m + 1] = t1 * t4 - t2 * t3;
      }
    }
    for (int i = m + 1; i < n; ++i) {
      for (int j = std::min(i - 1, m + 1); j >= 0; --j) reduce_entry(i, j);
    }

    // relation found?
    for (int j = 0; j < n; ++j) {
      if (abs(y[j]) < thresh) {
        std::vector<Integer> v(n);
        Integer height = 0;
        for (int k = 0; k < n; ++k) {
          v[k] = B[k][j];
          Integer a = abs(v[k]);
          if (a > height) height = a;
        }
        if (height > opt.height_bound) {
          res.status = RelationStatus::none;
          return res;
        }
        Real sum(0, p);
        for (int k = 0; k < n; ++k) sum += xs[k] * v[k];
        res.status = RelationStatus::found;
        res.relation = std::move(v);
        res.residual = abs(sum);
        return res;
      }
    }
    // Any relation has Euclidean norm >= 1 / max |H_jj|.
    Real hmax(0, p);
    for (int j = 0; j < n - 1; ++j) {
      Real a = abs(H[j][j]);
      if (a > hmax) hmax = a;
    }
    if (hmax.is_zero()) break;
    if (Real(1, p) / hmax > bound_limit) {
      res.status = RelationStatus::none;
      return res;
    }
  }
  res.status = RelationStatus::none;
  return res;
}

}  // namespace zp
