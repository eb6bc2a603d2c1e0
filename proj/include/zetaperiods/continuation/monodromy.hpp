#pragma once

#include <string>
#include <vector>

#include "zetaperiods/arith/linalg.hpp"
#include "zetaperiods/continuation/evaluate.hpp"
#include "zetaperiods/continuation/taylor.hpp"

namespace zp {

struct MonodromyResult {
  Matrix<Complex> matrix;  // continued varpi_j = sum_m M[j][m] varpi_m
  TransportStats stats;
};

/// Closed polygon with `sides` vertices on the circle |z - center| = radius,
/// starting and ending at center + radius.
inline std::vector<Complex> circle_loop(const Complex& center, const Real& radius, int sides, Precision p) {
  Precision w = p.with_guard();
  std::vector<Complex> path;
  Real pi = const_pi(w);
  for (int k = 1; k <= sides; ++k) {
    Real ang = pi * (2 * k) / sides;
    if (k == sides) {
      path.push_back(center + radius);
    } else {
      path.push_back(center + Complex(radius * cos(ang), radius * sin(ang)));
    }
  }
  return path;
}

/// Monodromy of the basis around the singular point `center`, using the loop
/// |z - center| = |basepoint - center| traversed counterclockwise.
inline MonodromyResult monodromy_matrix(const ThetaOperator& op, const FrobeniusBasis& b, const Complex& center,
                                        const Complex& basepoint, Precision p, int sides = 16) {
  require_same_chart(op.chart(), b.chart());
  Precision w = p.with_guard();
  SingularitySet sing = singularities(op, w);
  Real radius = abs(basepoint - center);
  int inside = 0;
  for (const auto& s : sing.finite_points) {
    Real d = abs(s.point - center);
    if (d < radius) ++inside;
  }
  if (inside != 1) {
    throw DomainError("monodromy loop encircles " + std::to_string(inside) + " singular points (expected 1)");
  }
  // Series radius at the expansion point 0 of the basis.
  Real series_radius(-1, w);
  for (const auto& s : sing.finite_points) {
    Real d = abs(s.point);
    if (d.is_zero()) continue;
    if (series_radius.sign() < 0 || d < series_radius) series_radius = d;
  }
  Matrix<Complex> start = basis_jets(b, basepoint, p, series_radius);
  DOperator d = op.to_d_form().reduced();
  MonodromyResult res;
  Complex rot_center = center;
  // The polygon is rotated so its first vertex is the basepoint.
  Complex dir = (basepoint - center) / radius;
  std::vector<Complex> path;
  for (const auto& v : circle_loop(Complex(Rational(0), w), radius, sides, p)) path.push_back(rot_center + v * dir);
  path.back() = basepoint;
  Matrix<Complex> end = continue_along(d, sing, basepoint, start, path, p, &res.stats);
  LinearSolve<Complex> inv = invert(start);
  res.matrix = matmul(end, inv.inverse);
  return res;
}

}  // namespace zp
