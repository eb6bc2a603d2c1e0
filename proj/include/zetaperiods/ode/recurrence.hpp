#pragma once

#include <string>
#include <vector>

#include "zetaperiods/ode/operator.hpp"

namespace zp {

/// Coefficient recurrence of a theta-form operator acting on sum a_n x^(n+sigma):
///   sum_t q_t(n, sigma) a_{n-t} = 0,   q_t(n, sigma) = P_t(n - t + sigma),
/// where P_t(u) = sum_j [x^t] p_j(x) u^j.
class Recurrence {
 public:
  Recurrence() = default;
  explicit Recurrence(std::vector<PolyQ> taps) : taps_(std::move(taps)) {
    if (taps_.empty() || taps_[0].is_zero()) throw InvalidInput("recurrence needs a nonzero q_0");
  }

  /// Span T: the largest shift.
  [[nodiscard]] int span() const { return static_cast<int>(taps_.size()) - 1; }
  /// P_t as a polynomial in u = n - t + sigma.
  [[nodiscard]] const PolyQ& tap(int t) const { return taps_.at(t); }
  [[nodiscard]] const std::vector<PolyQ>& taps() const { return taps_; }

  [[nodiscard]] Rational q(int t, long n, const Rational& sigma) const {
    if (t < 0 || t > span()) return 0;
    return taps_[t].eval(Rational(n - t) + sigma);
  }

  /// Indicial polynomial q_0(0, sigma) = P_0(sigma).
  [[nodiscard]] const PolyQ& indicial() const { return taps_[0]; }

 private:
  std::vector<PolyQ> taps_;
};

inline Recurrence derive_recurrence(const ThetaOperator& op) {
  const int T = op.max_degree();
  std::vector<PolyQ> taps;
  for (int t = 0; t <= T; ++t) {
    std::vector<Rational> c(op.order() + 1);
    for (int j = 0; j <= op.order(); ++j) c[j] = op.coeff(j)[t];
    taps.emplace_back(std::move(c));
  }
  while (taps.size() > 1 && taps.back().is_zero()) taps.pop_back();
  return Recurrence(std::move(taps));
}

inline PolyQ indicial_polynomial(const ThetaOperator& op) {
  return derive_recurrence(op.canonical()).indicial();
}

struct MumInfo {
  bool mum = false;
  Rational rho = 0;
  PolyQ indicial;
  std::string diagnostic;
};

/// MUM test at x = 0: the indicial polynomial must be c (sigma - rho)^r.
inline MumInfo is_mum(const ThetaOperator& op) {
  MumInfo info;
  info.indicial = indicial_polynomial(op);
  const int r = op.order();
  const PolyQ& ind = info.indicial;
  if (ind.degree() == r) {
    Rational rho = -ind[r - 1] / (ind.leading() * r);
    if (PolyQ::power_of_linear(rho, r) * ind.leading() == ind) {
      info.mum = true;
      info.rho = rho;
      info.diagnostic = "indicial = c*(s - " + rho.get_str() + ")^" + std::to_string(r);
      return info;
    }
  }
  std::string d = "indicial polynomial " + ind.str("s") + " is not an r-fold power; square-free factors:";
  for (const auto& [f, m] : squarefree_decomposition(ind)) d += " (" + f.str("s") + ")^" + std::to_string(m);
  if (ind.degree() < r) d += "; degree " + std::to_string(ind.degree()) + " < order " + std::to_string(r);
  info.diagnostic = d;
  return info;
}

}  // namespace zp
