#pragma once

// Dense linear algebra over Real or Complex: Gaussian elimination with
// partial pivoting and an infinity-norm condition estimate.

#include <string>
#include <vector>

#include "zetaperiods/arith/complex.hpp"

namespace zp {

template <class Scalar>
using Matrix = std::vector<std::vector<Scalar>>;

template <class Scalar>
Matrix<Scalar> identity_matrix(int n, Precision p) {
  Matrix<Scalar> m(n, std::vector<Scalar>(n, Scalar(Rational(0), p)));
  for (int i = 0; i < n; ++i) m[i][i] = Scalar(Rational(1), p);
  return m;
}

template <class Scalar>
Matrix<Scalar> matmul(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.at(0).size();
  Matrix<Scalar> c(n, std::vector<Scalar>(m, a[0][0] * Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  }
  return c;
}

template <class Scalar>
Real inf_norm(const Matrix<Scalar>& a) {
  Real best = magnitude(a.at(0).at(0)) * Rational(0);
  for (const auto& row : a) {
    Real s = best * Rational(0);
    for (const auto& x : row) s += magnitude(x);
    if (s > best) best = s;
  }
  return best;
}

template <class Scalar>
struct LinearSolve {
  Matrix<Scalar> inverse;
  Real condition;  // ||A|| * ||A^-1|| in the infinity norm
};

/// Inverse of a square matrix by Gauss-Jordan elimination with partial pivoting.
template <class Scalar>
LinearSolve<Scalar> invert(const Matrix<Scalar>& a) {
  const int n = static_cast<int>(a.size());
  Matrix<Scalar> m = a;
  Precision p(std::max(Precision::kMinDigits, Precision::bits_to_digits(magnitude(a[0][0]).bits())));
  Matrix<Scalar> inv = identity_matrix<Scalar>(n, p);
  for (int c = 0; c < n; ++c) {
    int piv = c;
    Real best = magnitude(m[c][c]);
    for (int r = c + 1; r < n; ++r) {
      Real v = magnitude(m[r][c]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best.is_zero()) throw NumericFailure("singular matrix");
    std::swap(m[c], m[piv]);
    std::swap(inv[c], inv[piv]);
    Scalar d = m[c][c];
    for (int j = 0; j < n; ++j) {
      m[c][j] = m[c][j] / d;
      inv[c][j] = inv[c][j] / d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      Scalar f = m[r][c];
      for (int j = 0; j < n; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  Real cond = inf_norm(a) * inf_norm(inv);
  return {std::move(inv), std::move(cond)};
}

/// Solves A x = b.
template <class Scalar>
std::vector<Scalar> solve(const Matrix<Scalar>& a, const std::vector<Scalar>& b, Real* condition = nullptr) {
  LinearSolve<Scalar> s = invert(a);
  if (condition) *condition = s.condition;
  std::vector<Scalar> x;
  for (const auto& row : s.inverse) {
    Scalar acc = b.at(0) * Rational(0);
    for (std::size_t j = 0; j < row.size(); ++j) acc += row[j] * b[j];
    x.push_back(std::move(acc));
  }
  return x;
}

}  // namespace zp
