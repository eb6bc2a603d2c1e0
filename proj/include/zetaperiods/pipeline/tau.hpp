#pragma once

// Connection coefficients of a seed solution in the Frobenius basis at a MUM
// point, and their recognition as rational combinations of zeta values.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "zetaperiods/arith/linalg.hpp"
#include "zetaperiods/continuation/evaluate.hpp"
#include "zetaperiods/continuation/taylor.hpp"
#include "zetaperiods/pipeline/job.hpp"
#include "zetaperiods/recognize/recognize.hpp"

namespace zp {

struct TauEntry {
  int index = 0;
  int weight = 0;
  Complex value;
  int verified_digits = 0;  // agreement between the working and the confirmation run
  RecognitionResult re;
  RecognitionResult im;
};

struct TauReport {
  std::string job;
  Normalization normalization = Normalization::plain;
  int digits = 0;
  int working_digits = 0;
  int confirm_digits = 0;
  int terms = 0;
  int seed_terms = 0;
  Rational basepoint;
  std::string chart;
  std::vector<Rational> samples;       // in the operator's chart; last one held out
  std::vector<Complex> chart_samples;  // the same points in the MUM chart
  Real condition;
  Real held_out_residual;
  TransportStats transport;
  std::vector<TauEntry> tau;
  double seconds = 0;

  [[nodiscard]] bool recognized() const {
    return std::all_of(tau.begin(), tau.end(), [](const TauEntry& t) { return t.re.ok() && t.im.ok(); });
  }
  [[nodiscard]] bool confirmed() const {
    return std::all_of(tau.begin(), tau.end(), [](const TauEntry& t) {
      auto good = [](const RecognitionResult& r) { return r.status == RecognitionStatus::zero || r.confirmed; };
      return good(t.re) && good(t.im);
    });
  }
  [[nodiscard]] bool held_out_ok() const {
    return held_out_residual < Real::pow10(-digits / 2, Precision(digits));
  }
};

struct TauOptions {
  bool recognize = true;
  bool confirm = true;
  int confirm_extra_digits = 40;
  int guard_digits = 20;
};

namespace detail {

/// Chart of the MUM point for the job's transform.
inline ThetaOperator mum_operator(const JobSpec& job) {
  ThetaOperator t = job.op;
  switch (job.transform) {
    case MumTransform::invert: t = invert_variable(t); break;
    case MumTransform::shift: t = shift_variable(t, job.shift_point); break;
    case MumTransform::none: break;
  }
  if (job.rescale != 1) t = rescale_variable(t, job.rescale);
  return t;
}

inline Rational to_mum_chart(const JobSpec& job, const Rational& x) {
  Rational y = x;
  switch (job.transform) {
    case MumTransform::invert:
      if (x == 0) throw DomainError("sample point 0 maps to infinity");
      y = 1 / x;
      break;
    case MumTransform::shift: y = x - job.shift_point; break;
    case MumTransform::none: break;
  }
  return y / job.rescale;
}

/// Nearest nonzero singular point; -1 if there is none.
inline Real series_radius(const SingularitySet& s, Precision p) {
  Real best(-1, p);
  for (const auto& sp : s.finite_points) {
    Real d = abs(sp.point);
    if (d < Real::pow10(-p.digits() / 2, p)) continue;
    if (best.sign() < 0 || d < best) best = d;
  }
  return best;
}

/// Seed power series: given leading coefficients, the rest from the recurrence.
inline SeriesQ seed_series(const JobSpec& job, int N) {
  Recurrence rec = derive_recurrence(job.op.canonical());
  SeriesQ s{Rational(0), std::vector<Rational>(N + 1)};
  const int given = static_cast<int>(job.seed.size());
  for (int n = 0; n <= N; ++n) {
    Rational acc = 0;
    for (int t = 1; t <= rec.span() && t <= n; ++t) acc += rec.q(t, n, Rational(0)) * s.coeffs[n - t];
    Rational lead = rec.q(0, n, Rational(0));
    if (n < given) {
      s.coeffs[n] = job.seed[n];
      if (lead * job.seed[n] + acc != 0) {
        throw InvalidInput("seed coefficient " + std::to_string(n) + " does not satisfy the operator's recurrence");
      }
      continue;
    }
    if (lead == 0) {
      if (acc != 0) throw InvalidInput("seed is inconsistent with the recurrence at n = " + std::to_string(n));
      throw InvalidInput("seed coefficient " + std::to_string(n) +
                         " is free (resonance); give at least " + std::to_string(n + 1) + " seed coefficients");
    }
    s.coeffs[n] = -acc / lead;
  }
  return s;
}

struct TauNumeric {
  std::vector<Complex> tau;
  Real condition;
  Real held_out;
  TransportStats stats;
  int terms = 0;
  int seed_terms = 0;
  Rational basepoint;
  std::vector<Complex> chart_samples;
  double usable_digits = 0;
};

inline TauNumeric tau_numeric(const JobSpec& job, Precision w) {
  const int r = job.order();
  const auto samples = job.effective_samples();
  ThetaOperator mum = mum_operator(job);
  MumInfo info = is_mum(mum);
  if (!info.mum) throw DomainError("transformed operator is not MUM at 0: " + info.diagnostic);

  TauNumeric out;
  Precision ws = w.with_guard();

  // seed values in the operator's own chart
  SingularitySet seed_sing = singularities(job.op, ws);
  Real seed_radius = series_radius(seed_sing, ws);
  Real max_sample(0, ws);
  for (const auto& s : samples) max_sample = std::max(max_sample, abs(Real(s, ws)));
  double seed_ratio = seed_radius.sign() < 0 ? 0.0 : (max_sample / seed_radius).to_double();
  if (!(seed_ratio < 0.9)) {
    throw DomainError("sample point " + max_sample.str(8) + " is too close to the seed's radius of convergence " +
                      seed_radius.str(8));
  }
  out.seed_terms = required_terms(seed_ratio, ws.digits());
  LogSeries seed = LogSeries::from_series(seed_series(job, out.seed_terms), job.op.chart());
  Real seed_eval_radius = seed_radius.sign() < 0 ? max_sample * 2 + 1 : seed_radius;
  std::vector<Complex> seed_vals;
  for (const auto& s : samples) seed_vals.push_back(eval_logseries(seed, Complex(s, ws), w, seed_eval_radius).value);

  // Frobenius basis at the MUM point
  SingularitySet sing = singularities(mum, ws);
  Real radius = series_radius(sing, ws);
  Rational base = job.basepoint;
  if (radius.sign() > 0 && !(Real(base, ws) < radius * make_rational(1, 2))) {
    throw DomainError("basepoint " + base.get_str() + " is not well inside the series radius " + radius.str(8));
  }
  Real eval_radius = radius.sign() > 0 ? radius : Real(base * 4, ws);
  std::vector<std::vector<Complex>> jets;
  for (int attempt = 0;; ++attempt) {
    double ratio = (Real(base, ws) / eval_radius).to_double();
    out.terms = job.terms ? *job.terms : required_terms(ratio, ws.digits());
    FrobeniusBasis basis = frobenius_basis(mum, out.terms, job.normalization);
    Real tail(0, ws);
    jets = basis_jets(basis, Complex(base, ws), w, eval_radius, &tail);
    if (tail < Real::pow10(-w.digits(), ws) || attempt > 0) {
      if (!(tail < Real::pow10(-w.digits() / 2, ws))) {
        throw NumericFailure("series tail at the basepoint is " + tail.str(6) + "; increase --terms");
      }
      break;
    }
    base /= 2;
  }
  out.basepoint = base;

  // continuation to the samples, visited by increasing distance from the basepoint
  for (const auto& s : samples) out.chart_samples.push_back(Complex(to_mum_chart(job, s), ws));
  std::vector<std::size_t> order(samples.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<Real> dist;
  for (const auto& c : out.chart_samples) dist.push_back(abs(c - Complex(base, ws)));
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return dist[a] < dist[b]; });
  std::vector<Complex> targets;
  for (auto i : order) targets.push_back(out.chart_samples[i]);
  DOperator d = mum.to_d_form();
  auto sorted_vals = transport_values<Complex>(d, sing, Complex(base, ws), std::move(jets), targets, w, &out.stats);
  std::vector<std::vector<Complex>> vals(r, std::vector<Complex>(samples.size()));
  for (int j = 0; j < r; ++j) {
    for (std::size_t t = 0; t < order.size(); ++t) vals[j][order[t]] = sorted_vals[j][t];
  }

  // r x r solve on the first r samples, then the held-out check
  Matrix<Complex> A(r, std::vector<Complex>(r));
  std::vector<Complex> rhs;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) A[i][j] = vals[j][i];
    rhs.push_back(seed_vals[i]);
  }
  out.tau = solve(A, rhs, &out.condition);
  out.held_out = Real(0, ws);
  for (std::size_t h = r; h < samples.size(); ++h) {
    Complex acc(Rational(0), ws);
    for (int j = 0; j < r; ++j) acc += out.tau[j] * vals[j][h];
    out.held_out = std::max(out.held_out, abs(acc - seed_vals[h]));
  }
  out.usable_digits = w.digits() - out.stats.lost_digits - out.condition.log10_abs();
  return out;
}

inline int agreement_digits(const Complex& a, const Complex& b, int cap) {
  Real diff = abs(a - b);
  if (diff.is_zero()) return cap;
  Real scale = std::max(abs(b), Real(1, Precision(cap)));
  return std::clamp(static_cast<int>(std::floor(-(diff / scale).log10_abs())), 0, cap);
}

}  // namespace detail

/// Evaluates tau at the job's precision and, with a second run at higher
/// precision, recognizes and confirms each coefficient.
inline TauReport compute_tau(const JobSpec& job, TauOptions opt = {}) {
  job.validate();
  auto t0 = std::chrono::steady_clock::now();
  const Precision p(job.digits);
  TauReport rep;
  rep.job = job.name;
  rep.normalization = job.normalization;
  rep.digits = p.digits();
  rep.samples = job.effective_samples();
  rep.chart = detail::mum_operator(job).chart();

  // widen the working precision when continuation or conditioning eat the guard
  int guard = opt.guard_digits;
  detail::TauNumeric lo;
  for (int attempt = 0;; ++attempt) {
    lo = detail::tau_numeric(job, p.plus(guard));
    if (lo.condition > Real::pow10(p.digits() / 4, p)) {
      throw NumericFailure("sample system is ill-conditioned (condition " + lo.condition.str(6) +
                           "); choose different sample points");
    }
    if (lo.usable_digits >= p.digits() + 5 || attempt == 2) break;
    guard += static_cast<int>(std::ceil(p.digits() + 10 - lo.usable_digits));
  }
  rep.working_digits = p.digits() + guard;
  rep.terms = lo.terms;
  rep.seed_terms = lo.seed_terms;
  rep.basepoint = lo.basepoint;
  rep.chart_samples = lo.chart_samples;
  rep.condition = lo.condition;
  rep.held_out_residual = lo.held_out;
  rep.transport = lo.stats;

  std::optional<detail::TauNumeric> hi;
  Precision ph = p.plus(opt.confirm_extra_digits);
  if (opt.confirm && job.confirm) hi = detail::tau_numeric(job, ph.plus(guard));

  const int r = job.order();
  const int top = job.weight ? *job.weight : r - 1;
  const bool gamma = job.normalization == Normalization::gamma;
  std::vector<Generator> gens = job.generators;
  if (gamma) {
    // tau_j (2 pi i)^j mixes in odd powers of pi
    for (auto& g : gens) {
      if (g.base == "pi") g = parse_generator("pi");
    }
    if (std::none_of(gens.begin(), gens.end(), [](const Generator& g) { return g.base == "pi"; })) {
      gens.push_back(parse_generator("pi"));
    }
  }
  RecognizeOptions ro;
  ro.height_bound = job.height_bound;

  auto recognize_part = [&](const Real& x, int w, const std::optional<Real>& x_hi) {
    RecognitionResult res;
    if (w < 0) {
      res = recognize(x, ConstantBasis{}, ro);
    } else {
      ConstantBasis b = build_basis(w, gens, job.grading, p);
      res = recognize(x, b, ro);
      if (!res.ok() && job.grading == Grading::homogeneous) {
        b = build_basis(w, gens, Grading::graded, p);
        res = recognize(x, b, ro);
      }
      if (res.status == RecognitionStatus::found && x_hi) {
        res = confirm(res, *x_hi, at_precision(b, ph), p.digits());
      }
    }
    if (res.status == RecognitionStatus::zero && x_hi) {
      res.confirmed = abs(*x_hi) < Real::pow10(-p.digits(), ph);
      res.verified_digits = abs(*x_hi).is_zero() ? ph.digits()
                                                 : std::min(ph.digits(), static_cast<int>(-abs(*x_hi).log10_abs()));
    }
    return res;
  };

  for (int j = 0; j < r; ++j) {
    TauEntry e;
    e.index = j;
    e.weight = gamma ? top : top - j;
    e.value = Complex(lo.tau[j].re.at(p), lo.tau[j].im.at(p));
    e.verified_digits = hi ? detail::agreement_digits(lo.tau[j], hi->tau[j], p.digits()) : 0;
    if (opt.recognize) {
      std::optional<Real> re_hi, im_hi;
      if (hi) {
        re_hi = hi->tau[j].re.at(ph);
        im_hi = hi->tau[j].im.at(ph);
      }
      e.re = recognize_part(e.value.re, e.weight, re_hi);
      e.im = recognize_part(e.value.im, e.weight, im_hi);
    }
    rep.tau.push_back(std::move(e));
  }
  rep.confirm_digits = hi ? ph.digits() : 0;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

/// Converts coefficients computed in a rescaled chart x' = x / k back to the
/// chart x: tau_m = k^-rho sum_{j>=m} binom(j, m) (-log k)^(j-m) tau'_j.
inline std::vector<Complex> unscale_tau(const std::vector<Complex>& tau_k, const Rational& k, const Rational& rho,
                                        Precision p) {
  Precision w = p.with_guard();
  Complex logk = log(Complex(k, w));
  Complex mlogk(-logk.re, -logk.im);
  Complex krho = pow(Complex(k, w), -rho);
  std::vector<Complex> out;
  const int r = static_cast<int>(tau_k.size());
  for (int m = 0; m < r; ++m) {
    Complex acc(Rational(0), w);
    Complex lp(Rational(1), w);
    for (int j = m; j < r; ++j) {
      acc += tau_k[j] * lp * Complex(Rational(binomial(j, m)), w);
      lp *= mlogk;
    }
    acc *= krho;
    out.push_back(acc);
  }
  return out;
}

}  // namespace zp
