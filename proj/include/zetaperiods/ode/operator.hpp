#pragma once

// Linear differential operators with polynomial coefficients.
//
// The canonical representation is the theta-form  sum_j p_j(x) theta^j  with
// theta = x d/dx. The d-form  sum_i P_i(x) D^i  is derived on demand. Every
// operator carries a chart tag naming its independent variable; operations
// that combine operators or series from different charts refuse to run.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "zetaperiods/error.hpp"
#include "zetaperiods/ode/poly.hpp"

namespace zp {

namespace detail {

/// Stirling numbers of the second kind S(j, i), 0 <= i, j <= n.
inline std::vector<std::vector<Integer>> stirling2(int n) {
  std::vector<std::vector<Integer>> s(n + 1, std::vector<Integer>(n + 1, 0));
  s[0][0] = 1;
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= j; ++i) s[j][i] = s[j - 1][i - 1] + Integer(i) * s[j - 1][i];
  }
  return s;
}

/// Signed Stirling numbers of the first kind s(i, j):
/// theta (theta - 1) ... (theta - i + 1) = sum_j s(i, j) theta^j.
inline std::vector<std::vector<Integer>> stirling1(int n) {
  std::vector<std::vector<Integer>> s(n + 1, std::vector<Integer>(n + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) s[i][j] = s[i - 1][j - 1] - Integer(i - 1) * s[i - 1][j];
  }
  return s;
}

}  // namespace detail

/// Operator in d-form: sum_i coeffs[i](x) (d/dx)^i.
struct DOperator {
  std::vector<PolyQ> coeffs;
  std::string chart = "phi";

  [[nodiscard]] int order() const { return static_cast<int>(coeffs.size()) - 1; }
  [[nodiscard]] const PolyQ& leading() const { return coeffs.back(); }

  /// Divides every coefficient by their common polynomial gcd.
  [[nodiscard]] DOperator reduced() const {
    PolyQ g;
    for (const auto& c : coeffs) g = gcd(g, c);
    DOperator out{{}, chart};
    for (const auto& c : coeffs) out.coeffs.push_back(c.divmod(g).first);
    return out;
  }
};

class ThetaOperator {
 public:
  ThetaOperator() = default;
  ThetaOperator(std::vector<PolyQ> theta_coeffs, std::string chart = "phi")
      : p_(std::move(theta_coeffs)), chart_(std::move(chart)) {
    while (!p_.empty() && p_.back().is_zero()) p_.pop_back();
    if (p_.size() < 2) throw InvalidInput("operator must have order >= 1");
  }

  /// Order r: the top power of theta with a nonzero coefficient.
  [[nodiscard]] int order() const { return static_cast<int>(p_.size()) - 1; }
  [[nodiscard]] const std::vector<PolyQ>& coeffs() const { return p_; }
  [[nodiscard]] const PolyQ& coeff(int j) const { return p_.at(j); }
  [[nodiscard]] const std::string& chart() const { return chart_; }

  [[nodiscard]] ThetaOperator with_chart(std::string chart) const {
    ThetaOperator out = *this;
    out.chart_ = std::move(chart);
    return out;
  }

  /// Largest degree among the coefficient polynomials.
  [[nodiscard]] int max_degree() const {
    int d = 0;
    for (const auto& p : p_) d = std::max(d, p.degree());
    return d;
  }

  /// Same operator divided by the largest power of x common to all coefficients.
  [[nodiscard]] ThetaOperator canonical() const {
    int m = max_degree();
    for (const auto& p : p_) {
      if (!p.is_zero()) m = std::min(m, p.valuation());
    }
    if (m <= 0) return *this;
    std::vector<PolyQ> q;
    for (const auto& p : p_) q.push_back(p.shifted_down(m));
    return {std::move(q), chart_};
  }

  [[nodiscard]] DOperator to_d_form() const {
    const int r = order();
    auto s2 = detail::stirling2(r);
    DOperator d{std::vector<PolyQ>(r + 1), chart_};
    for (int i = 0; i <= r; ++i) {
      PolyQ acc;
      for (int j = i; j <= r; ++j) {
        if (s2[j][i] != 0) acc += p_[j] * Rational(s2[j][i]);
      }
      d.coeffs[i] = acc.shifted_up(i);
    }
    return d;
  }

  /// Inverse of to_d_form: multiplies through by the power of x that makes
  /// every theta coefficient polynomial and leaves no common x factor.
  static ThetaOperator from_d_form(const DOperator& d) {
    const int r = d.order();
    if (r < 1) throw InvalidInput("operator must have order >= 1");
    // P_i D^i = (P_i / x^i) * theta(theta-1)...(theta-i+1)
    int shift = 0;  // multiply everything by x^shift
    bool any = false;
    for (int i = 0; i <= r; ++i) {
      if (d.coeffs[i].is_zero()) continue;
      int need = i - d.coeffs[i].valuation();
      shift = any ? std::max(shift, need) : need;
      any = true;
    }
    auto s1 = detail::stirling1(r);
    std::vector<PolyQ> p(r + 1);
    for (int i = 0; i <= r; ++i) {
      if (d.coeffs[i].is_zero()) continue;
      int up = shift - i;
      PolyQ base = up >= 0 ? d.coeffs[i].shifted_up(up) : d.coeffs[i].shifted_down(-up);
      for (int j = 0; j <= i; ++j) {
        if (s1[i][j] != 0) p[j] += base * Rational(s1[i][j]);
      }
    }
    return ThetaOperator(std::move(p), d.chart).canonical();
  }

  friend bool operator==(const ThetaOperator& a, const ThetaOperator& b) {
    return a.chart_ == b.chart_ && a.p_ == b.p_;
  }

  /// Equal up to a nonzero rational factor (ignores the chart tag).
  [[nodiscard]] bool proportional_to(const ThetaOperator& o) const {
    if (order() != o.order()) return false;
    const PolyQ& a = p_.back();
    const PolyQ& b = o.p_.back();
    Rational f = b.leading() / a.leading();
    for (int j = 0; j <= order(); ++j) {
      if (p_[j] * f != o.p_[j]) return false;
    }
    return true;
  }

  [[nodiscard]] std::string str() const {
    std::string var = chart_.size() <= 3 ? chart_ : "x";
    std::string out;
    for (int j = order(); j >= 0; --j) {
      if (p_[j].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + p_[j].str(var) + ")";
      if (j > 0) out += "*theta" + (j > 1 ? "^" + std::to_string(j) : std::string());
    }
    return out;
  }

 private:
  std::vector<PolyQ> p_;
  std::string chart_ = "phi";
};

inline void require_same_chart(const std::string& a, const std::string& b) {
  if (a != b) throw InvalidInput("chart mismatch: '" + a + "' vs '" + b + "'");
}

/// Operator in the chart x' = 1/x. theta_x = -theta_x'.
inline ThetaOperator invert_variable(const ThetaOperator& op) {
  const int d = op.max_degree();
  std::vector<PolyQ> q;
  for (int j = 0; j <= op.order(); ++j) {
    PolyQ r = op.coeff(j).is_zero() ? PolyQ() : op.coeff(j).reversed(d);
    if (j % 2 == 1) r = -r;
    q.push_back(std::move(r));
  }
  std::string chart = op.chart();
  if (chart.size() > 4 && chart.rfind("1/(", 0) == 0 && chart.back() == ')') {
    chart = chart.substr(3, chart.size() - 4);
  } else {
    chart = "1/(" + chart + ")";
  }
  return ThetaOperator(std::move(q), chart).canonical();
}

/// Operator in the chart x' = x - x0.
inline ThetaOperator shift_variable(const ThetaOperator& op, const Rational& x0) {
  if (x0 == 0) return op.canonical();
  DOperator d = op.to_d_form();
  for (auto& c : d.coeffs) c = c.taylor_shift(x0);
  d = d.reduced();
  d.chart = "(" + op.chart() + ")-(" + x0.get_str() + ")";
  return ThetaOperator::from_d_form(d);
}

/// Operator in the chart x' with x = k x'. Coefficients p_j(x) -> p_j(k x').
inline ThetaOperator rescale_variable(const ThetaOperator& op, const Rational& k) {
  if (k == 0) throw DomainError("rescale factor must be nonzero");
  if (k == 1) return op;
  std::vector<PolyQ> q;
  for (const auto& p : op.coeffs()) q.push_back(p.scale_argument(k));
  return {std::move(q), "(" + op.chart() + ")/(" + k.get_str() + ")"};
}

}  // namespace zp
