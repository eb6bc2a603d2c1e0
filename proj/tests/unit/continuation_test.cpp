#include <gtest/gtest.h>

#include <random>

#include "zetaperiods/continuation/evaluate.hpp"
#include "zetaperiods/continuation/monodromy.hpp"
#include "zetaperiods/continuation/taylor.hpp"
#include "zetaperiods/pipeline/fixtures.hpp"

namespace zp {
namespace {

const Precision kP(120);

ThetaOperator tilde(int k) { return invert_variable(fixtures::D(k)); }

FrobeniusBasis basis_for(const ThetaOperator& op, double ratio, Precision p) {
  return frobenius_basis(op, required_terms(ratio, p.with_guard().digits()));
}

double err(const Complex& a, const Complex& b) { return abs(a - b).log10_abs(); }
double err(const Real& a, const Real& b) {
  Real d = abs(a - b);
  return d.is_zero() ? -1e9 : d.log10_abs();
}

// Direct summation of 2 sum (-1)^(n-1) x^(n-1) / (n^3 binom(2n,n)), terms built by ratios.
Real pi0_direct(const Rational& x, Precision p) {
  Real sum(p), term(2, p);  // n = 1 term / x^0: 2/(1*2) = 1
  term = Real(1, p);
  Real eps = Real::pow10(-p.digits() - 10, p);
  for (long n = 1;; ++n) {
    sum += term;
    // t_{n+1}/t_n = -x * n^3/(n+1)^3 * binom(2n,n)/binom(2n+2,n+1), binom ratio = (n+1)/(2(2n+1))
    term *= -x;
    term *= Rational(n * n * n);
    term /= Rational((n + 1) * (n + 1) * (n + 1));
    term *= make_rational(n + 1, 2 * (2 * n + 1));
    if (abs(term) < eps) break;
  }
  return sum;
}

Real legendre_direct(const Rational& x, Precision p) {
  Real sum(p), term(1, p);
  Real eps = Real::pow10(-p.digits() - 10, p);
  for (long n = 0;; ++n) {
    sum += term;
    // (binom(2n+2,n+1)/binom(2n,n))^2 / 16 = ((2n+1)/(2n+2))^2
    term *= x * make_rational((2 * n + 1) * (2 * n + 1), (2 * n + 2) * (2 * n + 2));
    if (abs(term) < eps) break;
  }
  return sum;
}

TEST(Continuation, EvaluateSimpleSolutions) {
  FrobeniusBasis b = basis_for(tilde(3), 0.2, kP);
  Complex z(make_rational(1, 20), kP);
  Real R(make_rational(1, 4), kP);
  SeriesValue v0 = eval_logseries(b.solutions[0], z, kP, R);
  EXPECT_LT(err(v0.value, z), -kP.digits());
  SeriesValue v1 = eval_logseries(b.solutions[1], z, kP, R);
  EXPECT_LT(err(v1.value, z * log(z)), -kP.digits());
  EXPECT_THROW(eval_logseries(b.solutions[1], Complex(make_rational(1, 3), kP), kP, R), DomainError);
}

TEST(Continuation, Pi0SeriesMatchesDirectSummation) {
  auto coeffs = fixtures::pi0_coefficients(3, required_terms(1.0 / 8, kP.with_guard().digits()));
  LogSeries s = LogSeries::from_series({Rational(0), coeffs}, "phi");
  Rational x = make_rational(1, 2);
  SeriesValue v = eval_logseries(s, Complex(x, kP), kP, Real(4, kP));
  EXPECT_LT(err(v.value.re, pi0_direct(x, kP.plus(20))), -kP.digits());
  EXPECT_LT(v.tail.log10_abs(), -kP.digits());
}

TEST(Continuation, EvaluationStableUnderExtraPrecision) {
  FrobeniusBasis b = basis_for(tilde(3), 0.2, kP.plus(40));
  Complex z(make_rational(1, 20), kP);
  Real R(make_rational(1, 4), kP);
  Complex lo = eval_logseries(b.solutions[3], z, kP, R).value;
  Complex hi = eval_logseries(b.solutions[3], Complex(make_rational(1, 20), kP.plus(40)), kP.plus(40),
                              Real(make_rational(1, 4), kP.plus(40))).value;
  EXPECT_LT(err(lo, hi), -kP.digits());
}

TEST(Continuation, ThetaStepPreservesConstants) {
  ThetaOperator th({PolyQ(), PolyQ::constant(1)}, "x");
  DOperator d = th.to_d_form().reduced();
  std::vector<std::vector<Real>> jets{{Real(make_rational(7, 3), kP)}};
  auto out = taylor_step(d, Real(1, kP), jets, Real(make_rational(3, 2), kP), kP);
  EXPECT_EQ(out[0][0], jets[0][0]);
}

TEST(Continuation, StepThereAndBack) {
  ThetaOperator op = tilde(3);
  FrobeniusBasis b = basis_for(op, 0.2, kP);
  Real R(make_rational(1, 4), kP);
  Complex z0(make_rational(1, 20), kP);
  Matrix<Complex> jets = basis_jets(b, z0, kP, R);
  DOperator d = op.to_d_form().reduced();
  SingularitySet sing = singularities(op, kP);
  auto there = continue_along(d, sing, z0, jets, {Complex(make_rational(1, 10), kP)}, kP);
  auto back = continue_along(d, sing, Complex(make_rational(1, 10), kP), there, {z0}, kP);
  for (std::size_t j = 0; j < jets.size(); ++j) {
    for (std::size_t m = 0; m < jets[j].size(); ++m) {
      Real scale = abs(jets[j][m]) + 1;
      EXPECT_LT((abs(back[j][m] - jets[j][m]) / scale).log10_abs(), -kP.digits() + 5) << j << " " << m;
    }
  }
}

TEST(Continuation, Varpi0TransportsExactly) {
  ThetaOperator op = tilde(3);
  FrobeniusBasis b = basis_for(op, 0.2, kP);
  Real R(make_rational(1, 4), kP);
  Real z0(make_rational(1, 20), kP);
  auto cj = basis_jets(b, Complex(z0), kP, R);
  std::vector<std::vector<Real>> jets;
  for (auto& row : cj) {
    std::vector<Real> r;
    for (auto& c : row) r.push_back(c.re);
    jets.push_back(r);
  }
  DOperator d = op.to_d_form().reduced();
  SingularitySet sing = singularities(op, kP);
  std::vector<Real> targets{Real(2, kP), Real(3, kP), Real(4, kP), Real(5, kP)};
  auto vals = transport_values(d, sing, z0, jets, targets, kP);
  for (int t = 0; t < 4; ++t) EXPECT_LT(err(vals[0][t], targets[t]), -kP.digits() + 10) << t;
}

TEST(Continuation, RefinementIndependenceAndLinearity) {
  ThetaOperator op = tilde(3);
  FrobeniusBasis b = basis_for(op, 0.2, kP);
  Real R(make_rational(1, 4), kP);
  Complex z0(make_rational(1, 20), kP);
  Matrix<Complex> jets = basis_jets(b, z0, kP, R);
  DOperator d = op.to_d_form().reduced();
  SingularitySet sing = singularities(op, kP);
  std::vector<Complex> path{Complex(make_rational(1, 2), make_rational(1, 2), kP), Complex(Rational(3), kP)};
  auto a = continue_along(d, sing, z0, jets, path, kP);
  TransportOptions fine;
  fine.step_factor = 0.3;
  auto c = continue_along(d, sing, z0, jets, path, kP, nullptr, fine);
  for (std::size_t j = 0; j < jets.size(); ++j) {
    for (std::size_t m = 0; m < jets[j].size(); ++m) {
      Real scale = abs(a[j][m]) + 1;
      EXPECT_LT((abs(a[j][m] - c[j][m]) / scale).log10_abs(), -kP.digits() + 20);
    }
  }
  // linearity
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  std::vector<Rational> coef;
  for (std::size_t j = 0; j < jets.size(); ++j) coef.push_back(make_rational(dist(rng), 1 + std::abs(dist(rng))));
  std::vector<Complex> combo(jets[0].size(), Complex(kP.with_guard()));
  for (std::size_t j = 0; j < jets.size(); ++j) {
    for (std::size_t m = 0; m < combo.size(); ++m) combo[m] += jets[j][m] * coef[j];
  }
  auto moved = continue_along(d, sing, z0, Matrix<Complex>{combo}, path, kP);
  for (std::size_t m = 0; m < combo.size(); ++m) {
    Complex expect(kP.with_guard());
    for (std::size_t j = 0; j < jets.size(); ++j) expect += a[j][m] * coef[j];
    Real scale = abs(expect) + 1;
    EXPECT_LT((abs(moved[0][m] - expect) / scale).log10_abs(), -kP.digits() + 20);
  }
}

TEST(Continuation, LegendreTransportMatchesDirectSum) {
  ThetaOperator op = fixtures::legendre();
  auto coeffs = fixtures::legendre_coefficients(required_terms(0.1, kP.with_guard().digits()) + 40);
  LogSeries s = LogSeries::from_series({Rational(0), coeffs}, "lambda");
  Complex z0(make_rational(1, 10), kP);
  auto jet = eval_logseries_jet(s, z0, 2, kP, Real(1, kP));
  std::vector<std::vector<Complex>> jets{{jet[0].value, jet[1].value}};
  DOperator d = op.to_d_form().reduced();
  SingularitySet sing = singularities(op, kP);
  auto out = continue_along(d, sing, z0, jets, {Complex(make_rational(1, 2), kP)}, kP);
  Real direct = legendre_direct(make_rational(1, 2), kP.plus(20));
  EXPECT_LT(err(out[0][0].re, direct), -kP.digits() + 20);
  EXPECT_LT(abs(out[0][0].im).log10_abs(), -kP.digits() + 20);
  // refinement independence on the Legendre operator
  TransportOptions fine;
  fine.step_factor = 0.25;
  auto out2 = continue_along(d, sing, z0, jets, {Complex(make_rational(1, 2), kP)}, kP, nullptr, fine);
  EXPECT_LT(err(out[0][1], out2[0][1]), -kP.digits() + 20);
}

TEST(Continuation, MonodromyAroundMumPoint) {
  ThetaOperator op = tilde(3);
  FrobeniusBasis b = basis_for(op, 0.2, kP);
  Complex base(make_rational(1, 20), kP);
  MonodromyResult res = monodromy_matrix(op, b, Complex(kP), base, kP);
  Complex tpi = two_pi_i(kP.with_guard());
  Matrix<Complex> dev = res.matrix;
  for (int j = 0; j < 4; ++j) {
    for (int m = 0; m < 4; ++m) {
      Complex expect(kP);
      if (m <= j) expect = pow(tpi, static_cast<long>(j - m)) * Rational(binomial(j, m));
      EXPECT_LT(abs(res.matrix[j][m] - expect).log10_abs(), -40) << j << " " << m;
      dev[j][m] = res.matrix[j][m] - (j == m ? Complex(Rational(1), kP) : Complex(kP));
    }
  }
  Matrix<Complex> p4 = matmul(matmul(dev, dev), matmul(dev, dev));
  for (const auto& row : p4) {
    for (const auto& x : row) EXPECT_LT(abs(x).log10_abs(), -kP.digits() / 2);
  }
}

TEST(Continuation, NullHomotopicLoopIsIdentity) {
  ThetaOperator op = tilde(3);
  FrobeniusBasis b = basis_for(op, 0.2, kP);
  Complex base(make_rational(1, 20), kP);
  Matrix<Complex> jets = basis_jets(b, base, kP, Real(make_rational(1, 4), kP));
  DOperator d = op.to_d_form().reduced();
  SingularitySet sing = singularities(op, kP);
  std::vector<Complex> loop{Complex(make_rational(1, 10), make_rational(1, 40), kP),
                            Complex(make_rational(1, 10), make_rational(-1, 40), kP), base};
  auto end = continue_along(d, sing, base, jets, loop, kP);
  for (std::size_t j = 0; j < jets.size(); ++j) {
    for (std::size_t m = 0; m < jets[j].size(); ++m) {
      Real scale = abs(jets[j][m]) + 1;
      EXPECT_LT((abs(end[j][m] - jets[j][m]) / scale).log10_abs(), -kP.digits() + 20);
    }
  }
  EXPECT_THROW(monodromy_matrix(op, b, Complex(make_rational(1, 2), kP), Complex(Rational(1), kP), kP),
               DomainError);
}

TEST(Continuation, PathThroughSingularityFails) {
  ThetaOperator op = tilde(3);
  DOperator d = op.to_d_form().reduced();
  SingularitySet sing = singularities(op, Precision(40));
  std::vector<std::vector<Complex>> jets{{Complex(Rational(1), Precision(40)), Complex(Precision(40)),
                                          Complex(Precision(40)), Complex(Precision(40))}};
  EXPECT_ANY_THROW(continue_along(d, sing, Complex(make_rational(1, 20), Precision(40)), jets,
                                  {Complex(make_rational(-1, 2), Precision(40))}, Precision(40)));
}

}  // namespace
}  // namespace zp
