#pragma once

#include <string>
#include <vector>

#include "zetaperiods/arith/complex.hpp"
#include "zetaperiods/arith/rational.hpp"
#include "zetaperiods/ode/operator.hpp"

namespace zp {

struct SingularPoint {
  Complex point;
  Real radius;       // a root of the leading coefficient lies within this distance
  bool exact = false;
  Rational exact_value = 0;  // valid when exact (real rational root)
  int multiplicity = 1;
};

struct SingularitySet {
  std::vector<SingularPoint> finite_points;
  bool has_infinity = false;

  /// Distance from z to the nearest finite singular point.
  [[nodiscard]] Real distance(const Complex& z) const {
    Real best = Real(-1, Precision(Precision::bits_to_digits(z.re.bits())));
    bool any = false;
    for (const auto& s : finite_points) {
      Real d = abs(z - s.point);
      if (!any || d < best) best = d;
      any = true;
    }
    return best;  // negative when there are no finite singular points
  }
};

namespace detail {

/// Simultaneous root iteration (Aberth-Ehrlich) for a square-free polynomial.
inline std::vector<Complex> aberth_roots(const PolyQ& f, Precision p) {
  const int n = f.degree();
  Precision w = p.with_guard();
  PolyQ df = f.derivative();

  // Initial guesses on a circle of the Cauchy bound, with an irrational angle offset.
  Real bound(1, w);
  for (int i = 0; i < n; ++i) {
    Real r = abs(Real(f[i] / f.leading(), w)) + 1;
    if (r > bound) bound = r;
  }
  std::vector<Complex> z;
  for (int k = 0; k < n; ++k) {
    Real ang = (Real::pi(w) * (2 * k) + make_rational(2, 5)) / n;
    z.emplace_back(bound / 2 * cos(ang), bound / 2 * sin(ang));
  }
  Real tol = Real::pow10(-w.digits() + 5, w);
  for (int iter = 0; iter < 2000; ++iter) {
    Real max_step(0, w);
    for (int k = 0; k < n; ++k) {
      Complex fz = f.eval_at(z[k]);
      Complex dfz = df.eval_at(z[k]);
      if (abs(fz).is_zero()) continue;
      Complex ratio = fz / dfz;
      Complex s(Real(0, w), Real(0, w));
      for (int j = 0; j < n; ++j) {
        if (j != k) s += Complex(Real(1, w), Real(0, w)) / (z[k] - z[j]);
      }
      Complex step = ratio / (Complex(Real(1, w), Real(0, w)) - ratio * s);
      z[k] -= step;
      Real m = abs(step);
      if (m > max_step) max_step = m;
    }
    if (max_step < tol) return z;
  }
  throw NumericFailure("root refinement did not converge for " + f.str());
}

}  // namespace detail

inline SingularitySet singularities(const ThetaOperator& op, Precision p) {
  SingularitySet out;
  DOperator d = op.to_d_form().reduced();
  const PolyQ& lead = d.leading();
  if (lead.is_zero()) throw InvalidInput("leading d-form coefficient vanishes");
  Real exact_radius = Real::pow10(-p.digits(), p);
  for (const auto& [f, m] : squarefree_decomposition(lead)) {
    if (f.degree() == 1) {
      Rational root = -f[0] / f[1];
      out.finite_points.push_back({Complex(root, p), exact_radius, true, root, m});
      continue;
    }
    if (f.degree() == 2) {
      Rational disc = f[1] * f[1] - 4 * f[0] * f[2];
      Integer num = disc.get_num(), den = disc.get_den();
      if (disc >= 0 && mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        Rational sq(Integer(sqrt(num)), Integer(sqrt(den)));
        for (int sign : {-1, 1}) {
          Rational root = (-f[1] + sign * sq) / (2 * f[2]);
          out.finite_points.push_back({Complex(root, p), exact_radius, true, root, m});
        }
        continue;
      }
    }
    auto roots = detail::aberth_roots(f, p);
    PolyQ df = f.derivative();
    for (auto& z : roots) {
      // A disc of radius deg * |f/f'| around z contains a root of f.
      Real r = abs(f.eval_at(z) / df.eval_at(z)) * f.degree() + exact_radius;
      out.finite_points.push_back({Complex(z.re.at(p), z.im.at(p)), r.at(p), false, 0, m});
    }
  }
  DOperator inv = invert_variable(op).to_d_form().reduced();
  out.has_infinity = inv.leading()[0] == 0;
  return out;
}

}  // namespace zp
