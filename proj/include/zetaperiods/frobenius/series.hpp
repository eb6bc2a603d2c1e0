#pragma once

// Truncated series with rational coefficients, optionally multiplied by
// powers of log x, and the exact action of theta-form operators on them.

#include <optional>
#include <string>
#include <vector>

#include "zetaperiods/ode/operator.hpp"

namespace zp {

/// sum_{n=0}^{N} c[n] x^(rho+n)
struct SeriesQ {
  Rational rho = 0;
  std::vector<Rational> coeffs;

  [[nodiscard]] int truncation() const { return static_cast<int>(coeffs.size()) - 1; }
  [[nodiscard]] Rational operator[](int n) const {
    return (n >= 0 && n < static_cast<int>(coeffs.size())) ? coeffs[n] : Rational(0);
  }
};

/// sum_k S_k(x) log^k x, all blocks sharing the exponent offset rho and truncation N.
/// blocks[k][n] is the coefficient of x^(rho+n) log^k x.
class LogSeries {
 public:
  LogSeries() = default;
  LogSeries(Rational rho, int N, int num_blocks, std::string chart)
      : rho_(std::move(rho)), n_(N), chart_(std::move(chart)),
        blocks_(num_blocks, std::vector<Rational>(N + 1)) {}

  static LogSeries from_series(const SeriesQ& s, std::string chart) {
    LogSeries out(s.rho, s.truncation(), 1, std::move(chart));
    out.blocks_[0] = s.coeffs;
    return out;
  }

  [[nodiscard]] const Rational& rho() const { return rho_; }
  [[nodiscard]] int truncation() const { return n_; }
  [[nodiscard]] int num_blocks() const { return static_cast<int>(blocks_.size()); }
  [[nodiscard]] const std::string& chart() const { return chart_; }
  [[nodiscard]] const std::vector<Rational>& block(int k) const { return blocks_.at(k); }
  std::vector<Rational>& block(int k) { return blocks_.at(k); }
  [[nodiscard]] const Rational& at(int k, int n) const { return blocks_.at(k).at(n); }
  Rational& at(int k, int n) { return blocks_.at(k).at(n); }

  [[nodiscard]] SeriesQ series(int k) const { return {rho_, blocks_.at(k)}; }

  [[nodiscard]] bool is_zero() const {
    for (const auto& b : blocks_) {
      for (const auto& c : b) {
        if (c != 0) return false;
      }
    }
    return true;
  }

  /// Truncate to a smaller order.
  [[nodiscard]] LogSeries truncated(int N) const {
    LogSeries out(rho_, std::min(N, n_), num_blocks(), chart_);
    for (int k = 0; k < num_blocks(); ++k) {
      for (int n = 0; n <= out.n_; ++n) out.blocks_[k][n] = blocks_[k][n];
    }
    return out;
  }

  /// theta applied once: theta(x^e log^k) = e x^e log^k + k x^e log^(k-1).
  [[nodiscard]] LogSeries theta() const {
    LogSeries out(rho_, n_, num_blocks(), chart_);
    for (int k = 0; k < num_blocks(); ++k) {
      for (int n = 0; n <= n_; ++n) {
        Rational v = (rho_ + n) * blocks_[k][n];
        if (k + 1 < num_blocks()) v += (k + 1) * blocks_[k + 1][n];
        out.blocks_[k][n] = v;
      }
    }
    return out;
  }

  /// d/dx, which lowers the exponent offset by one.
  [[nodiscard]] LogSeries derivative() const {
    LogSeries out = theta();
    out.rho_ -= 1;
    return out;
  }

  friend bool operator==(const LogSeries& a, const LogSeries& b) {
    return a.rho_ == b.rho_ && a.n_ == b.n_ && a.chart_ == b.chart_ && a.blocks_ == b.blocks_;
  }

 private:
  Rational rho_ = 0;
  int n_ = 0;
  std::string chart_;
  std::vector<std::vector<Rational>> blocks_;
};

/// Exact op(s), truncated to the same order N.
inline LogSeries apply_operator(const ThetaOperator& op, const LogSeries& s) {
  require_same_chart(op.chart(), s.chart());
  const int N = s.truncation();
  LogSeries out(s.rho(), N, s.num_blocks(), s.chart());
  LogSeries th = s;
  for (int j = 0; j <= op.order(); ++j) {
    if (j > 0) th = th.theta();
    const PolyQ& p = op.coeff(j);
    for (int t = 0; t <= p.degree(); ++t) {
      if (p[t] == 0) continue;
      for (int k = 0; k < s.num_blocks(); ++k) {
        for (int n = t; n <= N; ++n) {
          const Rational& c = th.at(k, n - t);
          if (c != 0) out.at(k, n) += p[t] * c;
        }
      }
    }
  }
  return out;
}

/// Smallest n with a nonzero coefficient of x^(rho+n) in op(s); empty when clean to N.
inline std::optional<int> residual_order(const ThetaOperator& op, const LogSeries& s) {
  LogSeries r = apply_operator(op, s);
  std::optional<int> first;
  for (int k = 0; k < r.num_blocks(); ++k) {
    for (int n = 0; n <= r.truncation(); ++n) {
      if (r.at(k, n) != 0) {
        if (!first || n < *first) first = n;
        break;
      }
    }
  }
  return first;
}

}  // namespace zp
