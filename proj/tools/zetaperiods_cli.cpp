// Command-line front end: analyze, frobenius, continue, recognize, identities,
// growth, selftest. Exit codes: 0 ok, 1 verification failure, 2 invalid input,
// 3 numeric failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zetaperiods/continuation/monodromy.hpp"
#include "zetaperiods/pipeline/report.hpp"

namespace {

using namespace zp;

enum Exit { kOk = 0, kVerify = 1, kInvalid = 2, kNumeric = 3 };

struct Globals {
  int digits = 120;
  int terms = 0;
  std::string tol = "1e-8";
  std::string normalization = "plain";
  std::string rescale = "1";
  std::string out;
  std::string format = "text";
  bool timings = false;
};

void emit(const Globals& g, const std::string& text, const nlohmann::json& json) {
  std::string body = g.format == "json" ? json.dump(2) + "\n" : text;
  if (g.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw InvalidInput("cannot write '" + g.out + "'");
  f << body;
}

Real parse_tolerance(const std::string& s) {
  try {
    Precision p(40);
    Real t = Real::parse(s, p);
    if (!(t > 0)) throw InvalidInput("tolerance must be positive");
    return t;
  } catch (const std::exception&) {
    throw InvalidInput("bad tolerance '" + s + "'");
  }
}

// "x" or "x:y" for x + i y, with rational parts.
Complex parse_point(const std::string& s, Precision p) {
  auto colon = s.find(':');
  if (colon == std::string::npos) return Complex(parse_rational(s), p);
  return Complex(parse_rational(s.substr(0, colon)), parse_rational(s.substr(colon + 1)), p);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// The operator in the chart where it has its MUM point at 0.
ThetaOperator mum_chart_operator(const std::string& fixture, const std::string& job_file, const Globals& g) {
  if (fixture == "DL") return fixtures::legendre();
  JobSpec job = job_file.empty() ? fixture_job(fixture) : load_job(job_file);
  job.rescale = parse_rational(g.rescale);
  return detail::mum_operator(job);
}

int cmd_analyze(const Globals& g, const std::string& fixture, const std::string& job_file, bool no_confirm) {
  if (fixture.empty() == job_file.empty()) throw InvalidInput("analyze needs exactly one of a job file or --fixture");
  JobSpec job = job_file.empty() ? fixture_job(fixture) : load_job(job_file);
  if (job_file.empty() || g.digits != 120) job.digits = g.digits;
  if (g.terms > 0) job.terms = g.terms;
  if (g.normalization != "plain" || job_file.empty()) job.normalization = parse_normalization(g.normalization);
  Rational k = parse_rational(g.rescale);
  if (k != 1) {
    // keep the basepoint at the same place in the original chart
    job.rescale = k;
    job.basepoint = job.basepoint / abs(k);
  }
  if (no_confirm) job.confirm = false;
  job.validate();
  TauReport rep = compute_tau(job);
  ReportOptions ro;
  ro.timings = g.timings;
  emit(g, to_text(rep, ro), to_json(rep, ro));
  bool ok = rep.held_out_ok() && rep.recognized() && (no_confirm || rep.confirmed());
  return ok ? kOk : kVerify;
}

int cmd_frobenius(const Globals& g, const std::string& fixture, const std::string& job_file, int show) {
  if (fixture.empty() == job_file.empty()) throw InvalidInput("frobenius needs exactly one of a job file or --fixture");
  ThetaOperator op = mum_chart_operator(fixture, job_file, g);
  const int N = g.terms > 0 ? g.terms : show;
  FrobeniusBasis b = frobenius_basis(op, N, parse_normalization(g.normalization));
  nlohmann::json j;
  j["kind"] = "frobenius";
  j["chart"] = op.chart();
  j["rho"] = b.rho.get_str();
  j["normalization"] = to_string(b.normalization);
  std::ostringstream os;
  os << "chart " << op.chart() << ", rho = " << b.rho.get_str() << ", " << to_string(b.normalization)
     << " normalization" << (b.normalization == Normalization::gamma ? " (varpi_j carries (2 pi i)^-j)" : "")
     << "\n";
  nlohmann::json sols = nlohmann::json::array();
  for (int jx = 0; jx < b.order(); ++jx) {
    const LogSeries& s = b.solutions[jx];
    nlohmann::json blocks = nlohmann::json::array();
    os << "varpi_" << jx << " = x^rho * sum_k log^k(x) * block_k(x)\n";
    for (int k = 0; k < s.num_blocks(); ++k) {
      nlohmann::json c = nlohmann::json::array();
      os << "  block " << k << ":";
      for (int n = 0; n <= N; ++n) {
        c.push_back(s.at(k, n).get_str());
        os << " " << s.at(k, n).get_str();
      }
      os << "\n";
      blocks.push_back(c);
    }
    sols.push_back({{"index", jx}, {"blocks", blocks}});
  }
  j["solutions"] = sols;
  emit(g, os.str(), j);
  return kOk;
}

int cmd_continue(const Globals& g, const std::string& fixture, const std::string& job_file, const std::string& path_s,
                 bool monodromy) {
  if (fixture.empty() == job_file.empty()) throw InvalidInput("continue needs exactly one of a job file or --fixture");
  Precision p(g.digits);
  Precision w = p.with_guard();
  ThetaOperator op = mum_chart_operator(fixture, job_file, g);
  SingularitySet sing = singularities(op, w);
  Real radius = detail::series_radius(sing, w);
  if (radius.sign() < 0) radius = Real(1000000, w);
  auto pts = split(path_s, ',');
  if (pts.empty()) throw InvalidInput("--path needs at least one point");
  std::vector<Complex> path;
  for (const auto& s : pts) path.push_back(parse_point(s, w));
  const int r = op.order();
  Complex start = path.front();
  int N = g.terms > 0 ? g.terms : required_terms((abs(start) / radius).to_double(), w.digits());
  FrobeniusBasis b = frobenius_basis(op, N, parse_normalization(g.normalization));
  nlohmann::json j;
  std::ostringstream os;
  if (monodromy) {
    MonodromyResult m = monodromy_matrix(op, b, Complex(Rational(0), w), start, p);
    j["kind"] = "monodromy";
    nlohmann::json rows = nlohmann::json::array();
    os << "monodromy around 0 from " << start.str(10) << " (" << m.stats.steps << " steps)\n";
    for (const auto& row : m.matrix) {
      nlohmann::json jr = nlohmann::json::array();
      for (const auto& x : row) {
        jr.push_back(x.str(30));
        os << "  " << x.str(12);
      }
      os << "\n";
      rows.push_back(jr);
    }
    j["matrix"] = rows;
    emit(g, os.str(), j);
    return kOk;
  }
  auto jets = basis_jets(b, start, p, radius);
  TransportStats stats;
  std::vector<Complex> rest(path.begin() + 1, path.end());
  if (!rest.empty()) jets = continue_along(op.to_d_form().reduced(), sing, start, jets, rest, p, &stats);
  j["kind"] = "continuation";
  j["chart"] = op.chart();
  j["from"] = start.str(20);
  j["to"] = path.back().str(20);
  j["steps"] = stats.steps;
  nlohmann::json vals = nlohmann::json::array();
  os << "basis jets at " << path.back().str(20) << " after " << stats.steps << " steps\n";
  for (int i = 0; i < r; ++i) {
    nlohmann::json jet = nlohmann::json::array();
    os << "varpi_" << i << ":";
    for (const auto& x : jets[i]) jet.push_back(x.str(p.digits()));
    os << " " << jets[i][0].str(std::min(40, p.digits())) << "\n";
    vals.push_back(jet);
  }
  j["jets"] = vals;
  emit(g, os.str(), j);
  return kOk;
}

int cmd_recognize(const Globals& g, int weight, const std::string& gens_s, const std::string& grading_s,
                  const std::string& height_s, const std::string& value_s) {
  std::string text = value_s;
  if (text.empty()) {
    std::getline(std::cin, text);
  }
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw InvalidInput("no value given on stdin");
  text = text.substr(first, text.find_last_not_of(" \t\r\n") - first + 1);
  // precision: the number of significant digits supplied, capped by --digits
  int sig = 0;
  for (char c : text.substr(0, text.find_first_of("eE"))) sig += std::isdigit(static_cast<unsigned char>(c)) ? 1 : 0;
  Precision p(std::max(Precision::kMinDigits, std::min(sig, g.digits)));
  Real x;
  try {
    x = Real::parse(text, p);
  } catch (const std::exception&) {
    throw InvalidInput("cannot parse '" + text + "' as a real number");
  }
  std::vector<Generator> gens;
  for (const auto& s : split(gens_s, ',')) gens.push_back(parse_generator(s));
  Grading grading = grading_s == "graded" ? Grading::graded : Grading::homogeneous;
  if (grading_s != "graded" && grading_s != "homogeneous") throw InvalidInput("grading must be homogeneous or graded");
  ConstantBasis basis = build_basis(weight, gens, grading, p);
  RecognizeOptions ro;
  ro.height_bound = Integer(height_s);
  RecognitionResult r = recognize(x, basis, ro);
  nlohmann::json j = recognition_json(r, x, p.digits());
  j["kind"] = "recognition";
  j["basis"] = basis.labels();
  std::ostringstream os;
  os << to_string(r.status);
  if (r.ok()) os << ": " << r.expression() << "  (" << r.verified_digits << " digits)";
  os << "\n";
  emit(g, os.str(), j);
  return r.ok() ? kOk : kVerify;
}

int cmd_identities(const Globals& g, int k) {
  Real tol = parse_tolerance(g.tol);
  std::vector<IdentityReport> all;
  std::vector<int> ks;
  if (k == 0) {
    ks = {2, 3, 4, 5, 6, 7};
  } else {
    ks = {k};
  }
  for (int kk : ks) {
    auto r = identity_suite(kk, tol);
    all.insert(all.end(), r.begin(), r.end());
  }
  emit(g, to_text(all), to_json(all));
  for (const auto& r : all) {
    if (!r.pass) return kVerify;
  }
  return kOk;
}

int cmd_growth(const Globals& g, const std::string& fixture) {
  const int N = g.terms > 0 ? g.terms : 400;
  std::vector<Rational> c;
  if (fixture == "DL") {
    c = fixtures::legendre_coefficients(N);
  } else if (fixture.size() == 2 && fixture[0] == 'D' && fixtures::is_fixture_name(fixture)) {
    c = fixtures::pi0_coefficients(fixture[1] - '0', N);
  } else {
    throw InvalidInput("growth needs --fixture D2..D7 or DL");
  }
  GrowthReport rep = gfunction_growth_report(SeriesQ{0, c}, N);
  emit(g, to_text(rep), to_json(rep));
  return kOk;
}

int cmd_selftest(const Globals& g) {
  std::ostringstream os;
  nlohmann::json j;
  j["kind"] = "selftest";
  nlohmann::json checks = nlohmann::json::array();
  bool all = true;
  auto check = [&](const std::string& name, bool ok) {
    os << (ok ? "PASS " : "FAIL ") << name << "\n";
    checks.push_back({{"check", name}, {"pass", ok}});
    all = all && ok;
  };
  Precision p(60);
  check("zeta(4) = pi^4/90", abs(zeta(4, p) - pow(const_pi(p), 4L) / 90) < Real::pow10(-55, p));
  {
    FrobeniusBasis b = frobenius_basis(invert_variable(fixtures::D(3)), 60);
    bool ok = true;
    for (int jx = 0; jx < b.order(); ++jx) ok = ok && !residual_order(invert_variable(fixtures::D(3)), b.solutions[jx]);
    check("D3 Frobenius basis annihilated through order 60", ok);
  }
  {
    JobSpec job = fixture_job("D3");
    job.digits = 60;
    TauReport rep = compute_tau(job);
    bool ok = rep.recognized() && rep.confirmed() && rep.held_out_ok() &&
              rep.tau[0].re.terms() == std::map<std::string, Rational>{{"zeta3", 4}} &&
              rep.tau[3].re.terms() == std::map<std::string, Rational>{{"1", make_rational(-1, 3)}};
    check("D3 tau = (4 zeta3, 0, 0, -1/3) at 60 digits", ok);
  }
  {
    auto r = identity_suite(3, Real::pow10(-8, Precision(40)));
    bool ok = true;
    for (const auto& x : r) ok = ok && x.pass;
    check("k = 3 boundary identities at 1e-8", ok);
  }
  j["checks"] = checks;
  j["pass"] = all;
  emit(g, os.str(), j);
  return all ? kOk : kVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"High-precision connection coefficients at MUM points and their zeta-value forms"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--digits", g.digits, "Working precision in decimal digits")->check(CLI::Range(30, 100000));
  app.add_option("--terms", g.terms, "Series truncation override")->check(CLI::NonNegativeNumber);
  app.add_option("--tol", g.tol, "Tolerance for identity checks");
  app.add_option("--normalization", g.normalization, "plain or gamma")
      ->check(CLI::IsMember({"plain", "gamma"}));
  app.add_option("--rescale", g.rescale, "Rational rescaling k of the MUM coordinate");
  app.add_option("--out", g.out, "Write the report to a file");
  app.add_option("--format", g.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timings", g.timings, "Include wall-clock timings in reports");

  std::string fixture, job_file, path = "1/20", gens = "pi^2,zeta3,zeta5,zeta7", grading = "homogeneous",
                                 height = "1000000", value;
  bool no_confirm = false, monodromy = false;
  int show = 10, weight = 3, k = 0;

  auto* analyze = app.add_subcommand("analyze", "Compute and recognize the tau coefficients of a job");
  analyze->add_option("job", job_file, "Job file (JSON)");
  analyze->add_option("--fixture", fixture, "Built-in operator D2..D7");
  analyze->add_flag("--no-confirm", no_confirm, "Skip the higher-precision confirmation run");

  auto* frob = app.add_subcommand("frobenius", "Print the Frobenius basis series at the MUM point");
  frob->add_option("job", job_file, "Job file (JSON)");
  frob->add_option("--fixture", fixture, "Built-in operator D2..D7 or DL");
  frob->add_option("--show", show, "Number of coefficients when --terms is not given");

  auto* cont = app.add_subcommand("continue", "Transport the basis jets along a path in the MUM chart");
  cont->add_option("job", job_file, "Job file (JSON)");
  cont->add_option("--fixture", fixture, "Built-in operator D2..D7 or DL");
  cont->add_option("--path", path, "Comma-separated points, x or x:y for x + iy; the first must be near 0");
  cont->add_flag("--monodromy", monodromy, "Monodromy matrix of a loop around 0 through the first point");

  auto* rec = app.add_subcommand("recognize", "Recognize a real number (from stdin) over a constant basis");
  rec->add_option("--weight", weight, "Weight of the basis")->check(CLI::NonNegativeNumber);
  rec->add_option("--generators", gens, "Comma-separated generators, e.g. pi^2,zeta3,log2");
  rec->add_option("--grading", grading, "homogeneous or graded");
  rec->add_option("--height", height, "Largest allowed relation coefficient");
  rec->add_option("--value", value, "Value instead of reading stdin");

  auto* ids = app.add_subcommand("identities", "Check the boundary sum identities");
  ids->add_option("--k", k, "Only this k (2..7); all when omitted")->check(CLI::Range(2, 7));

  auto* growth = app.add_subcommand("growth", "Coefficient and denominator growth of a seed series");
  growth->add_option("--fixture", fixture, "D2..D7 (Pi0) or DL")->required();

  auto* self = app.add_subcommand("selftest", "Quick end-to-end checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*analyze) return cmd_analyze(g, fixture, job_file, no_confirm);
    if (*frob) return cmd_frobenius(g, fixture, job_file, show);
    if (*cont) return cmd_continue(g, fixture, job_file, path, monodromy);
    if (*rec) return cmd_recognize(g, weight, gens, grading, height, value);
    if (*ids) return cmd_identities(g, k);
    if (*growth) return cmd_growth(g, fixture);
    if (*self) return cmd_selftest(g);
  } catch (const NumericFailure& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumeric;
  }
  return kInvalid;
}
