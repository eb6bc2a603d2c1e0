#include <gtest/gtest.h>

#include "zetaperiods/continuation/boundary.hpp"
#include "zetaperiods/pipeline/fixtures.hpp"
#include "zetaperiods/pipeline/identities.hpp"

namespace zp {
namespace {

const Precision P(40);

TEST(Boundary, CentralAsymptoticsMatchExactRatio) {
  // binom(2n,n)/4^n * sqrt(pi n) at n = 500 against the truncated expansion
  auto c = detail::central_asymptotics(8, 1);
  EXPECT_EQ(c[1], make_rational(-1, 8));
  EXPECT_EQ(c[2], make_rational(1, 128));
  EXPECT_EQ(c[3], make_rational(5, 1024));
  const long n = 500;
  Real exact = Real(central_binomial(n), P) / pow(Real(4, P), n) * sqrt(const_pi(P) * n);
  Real approx(0, P);
  for (int j = 0; j < 8; ++j) approx += Real(c[j], P) / pow(Real(n, P), static_cast<long>(j));
  EXPECT_LT(abs(exact - approx), Real::pow10(-20, P));
  auto e = detail::harmonic_difference_asymptotics(8);
  Real d = Real(harmonic(n - 1) - harmonic(2 * n - 1), P) + const_log2(P);
  Real de(0, P);
  for (int j = 1; j < 8; ++j) de += Real(e[j], P) / pow(Real(n, P), static_cast<long>(j));
  EXPECT_LT(abs(d - de), Real::pow10(-20, P));
}

TEST(Boundary, ClassicalSums) {
  // sum binom/(4^n n) = 2 log 2, sum binom/(4^n n^2) = pi^2/6 - 2 log^2 2
  BoundarySeries b1{BoundarySeries::Weight::central, 1, 1, false, 0};
  auto r1 = boundary_sum(b1);
  EXPECT_LT(abs(r1.value - const_log2(P) * 2), Real::pow10(-25, P));
  EXPECT_LT(r1.error, Real::pow10(-25, P));
  BoundarySeries b2{BoundarySeries::Weight::central, 1, 2, false, 0};
  Real want = const_pi(P) * const_pi(P) / 6 - const_log2(P) * const_log2(P) * 2;
  EXPECT_LT(abs(boundary_sum(b2).value - want), Real::pow10(-25, P));
  // alternating: sum (-1)^n binom/(4^n n) = -2 log((1+sqrt 2)/2)... checked via
  // 1/sqrt(1+x) expansion: sum_{n>=1} (-1)^n binom x^n/4^n = 1/sqrt(1+x) - 1, at x = 1
  BoundarySeries b0{BoundarySeries::Weight::central, -1, 0, false, 0};
  EXPECT_THROW(boundary_sum(b0), DomainError);
  // 2 sum 4^(n-1)/(n^2 binom) = pi^2/4 (central binomial series at the boundary)
  BoundarySeries inv{BoundarySeries::Weight::inverse, 1, 2, false, 0};
  Real lp = boundary_sum(inv).value / 2;
  EXPECT_LT(abs(lp - const_pi(P) * const_pi(P) / 4), Real::pow10(-25, P));
}

TEST(Boundary, CutoffIndependence) {
  BoundarySeries c{BoundarySeries::Weight::central, 1, 3, true, 3};
  BoundaryOptions a, b;
  b.cutoff = 600;
  EXPECT_LT(abs(boundary_sum(c, a).value - boundary_sum(c, b).value), Real::pow10(-25, P));
  BoundarySeries lp{BoundarySeries::Weight::inverse, -1, 4, false, 0};
  EXPECT_LT(abs(boundary_sum(lp, a).value - boundary_sum(lp, b).value), Real::pow10(-25, P));
}

TEST(Boundary, HighOrderBasisCoefficientsHaveClosedForms) {
  // h_{k-1}, h_k of D_k match the B/C atom summands for n <= 60
  for (int k = 2; k <= 7; ++k) {
    FrobeniusBasis b = frobenius_basis(invert_variable(fixtures::D(k)), 60);
    auto H = harmonic_table(130);
    for (long n = 1; n <= 60; ++n) {
      Rational cb(central_binomial(n));
      Rational nk = pow(Rational(n), k);
      Rational bk1 = Rational(factorial(k - 1)) * cb / pow(Rational(n), k - 1) * (n % 2 ? -1 : 1);
      Rational ck = Rational(factorial(k)) * cb / nk * (n % 2 ? 1 : -1) * (k + 2 * n * (H[n - 1] - H[2 * n - 1]));
      ASSERT_EQ(b.h[k - 1].coeffs[n], bk1) << k << " " << n;
      ASSERT_EQ(b.h[k].coeffs[n], ck) << k << " " << n;
    }
  }
}

class Identities : public ::testing::TestWithParam<int> {};

TEST_P(Identities, AllDisplayedIdentitiesHold) {
  auto reps = identity_suite(GetParam(), Real::pow10(-8, P));
  ASSERT_EQ(reps.size(), 3u);
  for (const auto& r : reps) {
    EXPECT_TRUE(r.pass) << r.id << ": " << r.difference.str(6) << "\n" << r.description;
    EXPECT_LT(r.achieved, Real::pow10(-20, P)) << r.id;
  }
}

INSTANTIATE_TEST_SUITE_P(K, Identities, ::testing::Values(2, 3, 4, 5, 6, 7));

TEST(Boundary, ExpansionAtPlusMinusFour) {
  Precision p(40);
  auto z = [&](long a, long b = 1) { return Complex(make_rational(a, b), p); };
  std::vector<Complex> tau3{Complex(zeta(3, p) * 4), z(0), z(0), z(-1, 3)};
  for (int s : {1, -1}) {
    auto r = verify_expansion_at_boundary(3, tau3, s, Real::pow10(-8, p));
    EXPECT_TRUE(r.pass) << r.id << " " << r.difference.str(6);
  }
  std::vector<Complex> wrong = tau3;
  wrong[0] = Complex(zeta(3, p) * 3);
  EXPECT_FALSE(verify_expansion_at_boundary(3, wrong, 1, Real::pow10(-8, p)).pass);
  EXPECT_THROW(verify_expansion_at_boundary(3, tau3, 2, Real::pow10(-8, p)), InvalidInput);
  EXPECT_THROW(identity_suite(8, Real::pow10(-8, p)), InvalidInput);
}

}  // namespace
}  // namespace zp
