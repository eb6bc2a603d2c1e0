#include <gtest/gtest.h>

#include "zetaperiods/pipeline/growth.hpp"
#include "zetaperiods/pipeline/report.hpp"
#include "zetaperiods/pipeline/tau.hpp"

namespace zp {
namespace {

std::map<std::string, Rational> terms(const TauEntry& e) { return e.re.terms(); }

TEST(Pipeline, D3TauAt60Digits) {
  JobSpec job = fixture_job("D3");
  job.digits = 60;
  TauReport rep = compute_tau(job);
  ASSERT_EQ(rep.tau.size(), 4u);
  for (const auto& t : rep.tau) {
    SCOPED_TRACE(t.index);
    EXPECT_TRUE(t.re.ok()) << to_string(t.re.status) << " " << t.value.re.str(30);
    EXPECT_EQ(t.im.status, RecognitionStatus::zero);
  }
  EXPECT_EQ(terms(rep.tau[0]), (std::map<std::string, Rational>{{"zeta3", 4}}));
  EXPECT_EQ(rep.tau[1].re.status, RecognitionStatus::zero);
  EXPECT_EQ(rep.tau[2].re.status, RecognitionStatus::zero);
  EXPECT_EQ(terms(rep.tau[3]), (std::map<std::string, Rational>{{"1", make_rational(-1, 3)}}));
  EXPECT_TRUE(rep.held_out_ok());
  EXPECT_TRUE(rep.confirmed());
}

}  // namespace
}  // namespace zp

namespace zp {
namespace {

using Terms = std::map<std::string, Rational>;

// Expected tau_j over the basis labels; zeta4 = pi^4/90, zeta6 = pi^6/945.
std::vector<Terms> expected_tau(int k) {
  auto q = [](long a, long b) { return make_rational(a, b); };
  switch (k) {
    case 2: return {{}, {}, {{"1", 1}}};
    case 3: return {{{"zeta3", 4}}, {}, {}, {{"1", q(-1, 3)}}};
    case 4: return {{{"pi^4", q(-6, 90)}}, {{"zeta3", -4}}, {}, {}, {{"1", q(1, 12)}}};
    case 5: return {{{"zeta5", 12}}, {{"pi^4", q(6, 90)}}, {{"zeta3", 2}}, {}, {}, {{"1", q(-1, 60)}}};
    case 6:
      return {{{"pi^6", q(-20, 945)}, {"zeta3^2", 4}}, {{"zeta5", -12}}, {{"pi^4", q(-3, 90)}},
              {{"zeta3", q(-2, 3)}}, {}, {}, {{"1", q(2, 720)}}};
    case 7:
      return {{{"zeta7", 36}, {"pi^4*zeta3", q(-12, 90)}},
              {{"pi^6", q(20, 945)}, {"zeta3^2", -4}},
              {{"zeta5", 6}},
              {{"pi^4", q(1, 90)}},
              {{"zeta3", q(1, 6)}},
              {},
              {},
              {{"1", q(-2, 5040)}}};
  }
  return {};
}

class PipelineFixture : public ::testing::TestWithParam<int> {};

TEST_P(PipelineFixture, TauMatchesClosedForms) {
  const int k = GetParam();
  JobSpec job = fixture_job("D" + std::to_string(k));
  TauReport rep = compute_tau(job);
  auto want = expected_tau(k);
  ASSERT_EQ(rep.tau.size(), want.size());
  for (std::size_t j = 0; j < want.size(); ++j) {
    SCOPED_TRACE("tau_" + std::to_string(j));
    EXPECT_TRUE(rep.tau[j].re.ok()) << rep.tau[j].value.re.str(40);
    EXPECT_EQ(rep.tau[j].re.terms(), want[j]);
    EXPECT_EQ(rep.tau[j].im.status, RecognitionStatus::zero);
    EXPECT_GE(rep.tau[j].verified_digits, 100);
  }
  EXPECT_TRUE(rep.held_out_ok()) << rep.held_out_residual.str(10);
  EXPECT_TRUE(rep.confirmed());
}

INSTANTIATE_TEST_SUITE_P(AllFixtures, PipelineFixture, ::testing::Values(2, 3, 4, 5, 6, 7));

TEST(Pipeline, GammaNormalizationMultipliesByTwoPiI) {
  JobSpec job = fixture_job("D3");
  job.digits = 80;
  job.normalization = Normalization::gamma;
  TauReport rep = compute_tau(job);
  // tau_3 (2 pi i)^3 = (8/3) pi^3 i, tau_0 = 4 zeta3
  EXPECT_EQ(rep.tau[0].re.terms(), (Terms{{"zeta3", 4}}));
  EXPECT_EQ(rep.tau[3].re.status, RecognitionStatus::zero);
  EXPECT_EQ(rep.tau[3].im.terms(), (Terms{{"pi^3", make_rational(8, 3)}}));
  EXPECT_TRUE(rep.confirmed());
}

TEST(Pipeline, RescaledChartGivesPredictableTau) {
  JobSpec job = fixture_job("D3");
  job.digits = 60;
  TauReport plain = compute_tau(job);
  job.rescale = 4;
  job.basepoint = make_rational(1, 80);
  TauOptions opt;
  opt.recognize = false;
  opt.confirm = false;
  TauReport scaled = compute_tau(job, opt);
  std::vector<Complex> vals;
  for (const auto& t : scaled.tau) vals.push_back(t.value);
  auto back = unscale_tau(vals, 4, 1, Precision(60));
  for (std::size_t j = 0; j < back.size(); ++j) {
    EXPECT_LT(abs(back[j] - plain.tau[j].value), Real::pow10(-50, Precision(60))) << j;
  }
}

TEST(Pipeline, BadSamplesAndInputsAreRejected) {
  JobSpec job = fixture_job("D3");
  job.digits = 40;
  job.samples = {make_rational(1, 2), make_rational(1, 3)};
  EXPECT_THROW(compute_tau(job), InvalidInput);
  job = fixture_job("D3");
  job.samples = {make_rational(1, 2), make_rational(1, 2), make_rational(1, 3), make_rational(1, 4),
                 make_rational(1, 5)};
  EXPECT_THROW(compute_tau(job), NumericFailure);
  EXPECT_THROW(fixture_job("D9"), InvalidInput);
}

TEST(Pipeline, JobJsonRoundTrip) {
  auto j = nlohmann::json::parse(R"({
    "operator": [["0","0","0"], ["0","0","0"], ["1","0"], ["0","0"]],
    "fixture": "D3", "digits": 50, "samples": ["1/2","1/3","1/4","1/5","1/7"],
    "normalization": "gamma", "basis": {"generators": ["pi^2", "zeta3"], "grading": "graded"},
    "height_bound": "1000"})");
  JobSpec job = parse_job(j);
  EXPECT_EQ(job.op, fixtures::D(3));
  EXPECT_EQ(job.digits, 50);
  EXPECT_EQ(job.samples.back(), make_rational(1, 7));
  EXPECT_EQ(job.normalization, Normalization::gamma);
  EXPECT_EQ(job.grading, Grading::graded);
  EXPECT_EQ(job.generators.size(), 2u);
  EXPECT_EQ(job.height_bound, 1000);
  EXPECT_THROW(parse_job(nlohmann::json::parse(R"({"digits": 50})")), InvalidInput);
  EXPECT_THROW(parse_job(nlohmann::json::parse(R"({"fixture": "D3", "samples": ["1/x"]})")), InvalidInput);
  EXPECT_THROW(compute_tau(parse_job(nlohmann::json::parse(R"({"fixture": "D3", "seed": ["1", "5"], "digits": 40})"))), InvalidInput);
}

TEST(Pipeline, ExplicitOperatorMatchesFixture) {
  JobSpec job = fixture_job("D3");
  job.digits = 40;
  job.confirm = false;
  TauReport a = compute_tau(job);
  nlohmann::json j;
  j["operator"] = nlohmann::json::array();
  const ThetaOperator d3 = fixtures::D(3);
  for (int i = 0; i <= d3.order(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& c : d3.coeff(i).coeffs()) row.push_back(c.get_str());
    j["operator"].push_back(row);
  }
  j["digits"] = 40;
  j["basis"] = {{"weight", 3}};
  JobSpec job2 = parse_job(j);
  job2.confirm = false;
  TauReport b = compute_tau(job2);
  for (std::size_t i = 0; i < a.tau.size(); ++i) EXPECT_EQ(a.tau[i].re.terms(), b.tau[i].re.terms());
}

TEST(Pipeline, ReportsAreDeterministic) {
  JobSpec job = fixture_job("D4");
  job.digits = 50;
  std::string first = to_json(compute_tau(job)).dump();
  std::string second = to_json(compute_tau(job)).dump();
  EXPECT_EQ(first, second);
}

TEST(Pipeline, MorePrecisionKeepsForms) {
  JobSpec lo = fixture_job("D3");
  JobSpec hi = lo;
  hi.digits = 200;
  TauReport a = compute_tau(lo);
  TauReport b = compute_tau(hi);
  ASSERT_EQ(a.tau.size(), b.tau.size());
  for (std::size_t i = 0; i < a.tau.size(); ++i) {
    SCOPED_TRACE(i);
    EXPECT_EQ(a.tau[i].re.terms(), b.tau[i].re.terms());
    EXPECT_EQ(a.tau[i].im.terms(), b.tau[i].im.terms());
    Real d = a.tau[i].value.re - b.tau[i].value.re;
    EXPECT_TRUE(d.is_zero() || d.log10_abs() < -100) << d.str(6);
  }
}

}  // namespace
}  // namespace zp

namespace zp {
namespace {

TEST(Growth, Pi0HasRadiusFour) {
  auto c = fixtures::pi0_coefficients(3, 400);
  auto rep = gfunction_growth_report(SeriesQ{0, c}, 400);
  EXPECT_NEAR(rep.sup_coefficient_root, 0.25, 0.25 * 0.05);
  EXPECT_NEAR(rep.radius_estimate, 4.0, 4.0 * 0.05);
  EXPECT_EQ(rep.coefficient_trend, "increasing");
  EXPECT_LT(rep.sup_denominator_root, 200.0);
}

TEST(Growth, ConstantAndLegendreSeries) {
  auto rep = gfunction_growth_report(SeriesQ{0, std::vector<Rational>(51, Rational(1))}, 50);
  EXPECT_DOUBLE_EQ(rep.sup_coefficient_root, 1.0);
  EXPECT_DOUBLE_EQ(rep.sup_denominator_root, 1.0);
  EXPECT_EQ(rep.coefficient_trend, "stable");
  auto leg = gfunction_growth_report(SeriesQ{0, fixtures::legendre_coefficients(400)}, 400);
  EXPECT_NEAR(leg.sup_coefficient_root, 1.0, 0.05);
  EXPECT_THROW(gfunction_growth_report(SeriesQ{0, {Rational(1)}}, 5), InvalidInput);
}

}  // namespace
}  // namespace zp
