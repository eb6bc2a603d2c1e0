#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "zetaperiods/arith/complex.hpp"
#include "zetaperiods/arith/rational.hpp"

namespace zp {

/// Univariate polynomial with exact rational coefficients, ascending degree.
/// Trailing zeros are always trimmed; the zero polynomial has no coefficients.
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  PolyQ(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static PolyQ constant(const Rational& a) { return PolyQ({a}); }
  static PolyQ monomial(const Rational& a, int degree) {
    std::vector<Rational> c(static_cast<std::size_t>(degree + 1));
    c[degree] = a;
    return PolyQ(std::move(c));
  }
  /// (x - root)^m
  static PolyQ power_of_linear(const Rational& root, int m) {
    PolyQ out = constant(1);
    PolyQ lin({-root, Rational(1)});
    for (int i = 0; i < m; ++i) out = out * lin;
    return out;
  }

  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return c_; }
  [[nodiscard]] Rational operator[](int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
  }
  [[nodiscard]] const Rational& leading() const { return c_.back(); }

  /// Index of the lowest nonzero coefficient; -1 for the zero polynomial.
  [[nodiscard]] int valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] != 0) return static_cast<int>(i);
    }
    return -1;
  }

  [[nodiscard]] Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  /// Horner evaluation at a Real or Complex point.
  template <class Scalar>
  [[nodiscard]] Scalar eval_at(const Scalar& x) const {
    Scalar acc = x * Rational(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  PolyQ& operator+=(const PolyQ& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  PolyQ& operator-=(const PolyQ& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  PolyQ& operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }
  friend PolyQ operator+(PolyQ a, const PolyQ& b) { a += b; return a; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { a -= b; return a; }
  friend PolyQ operator*(PolyQ a, const Rational& s) { a *= s; return a; }
  friend PolyQ operator*(const Rational& s, PolyQ a) { a *= s; return a; }
  friend PolyQ operator-(PolyQ a) { a *= Rational(-1); return a; }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return PolyQ(std::move(c));
  }
  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }

  [[nodiscard]] PolyQ derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return PolyQ(std::move(d));
  }

  /// p(x + a).
  [[nodiscard]] PolyQ taylor_shift(const Rational& a) const {
    std::vector<Rational> c = c_;
    const int n = static_cast<int>(c.size());
    for (int i = 0; i < n; ++i) {
      for (int j = n - 2; j >= i; --j) c[j] += a * c[j + 1];
    }
    return PolyQ(std::move(c));
  }

  /// p(k x).
  [[nodiscard]] PolyQ scale_argument(const Rational& k) const {
    std::vector<Rational> c = c_;
    Rational kp = 1;
    for (auto& x : c) {
      x *= kp;
      kp *= k;
    }
    return PolyQ(std::move(c));
  }

  /// x^d p(1/x); requires d >= degree().
  [[nodiscard]] PolyQ reversed(int d) const {
    std::vector<Rational> c(static_cast<std::size_t>(d + 1));
    for (int i = 0; i <= degree(); ++i) c[d - i] = c_[i];
    return PolyQ(std::move(c));
  }

  [[nodiscard]] PolyQ shifted_up(int m) const {
    if (is_zero()) return {};
    std::vector<Rational> c(static_cast<std::size_t>(m), Rational(0));
    c.insert(c.end(), c_.begin(), c_.end());
    return PolyQ(std::move(c));
  }
  /// p / x^m; the low coefficients must vanish.
  [[nodiscard]] PolyQ shifted_down(int m) const {
    if (is_zero()) return {};
    for (int i = 0; i < m; ++i) {
      if ((*this)[i] != 0) throw DomainError("polynomial not divisible by x^" + std::to_string(m));
    }
    return PolyQ(std::vector<Rational>(c_.begin() + m, c_.end()));
  }

  [[nodiscard]] PolyQ monic() const {
    if (is_zero()) return {};
    return *this * Rational(1 / leading());
  }

  /// Euclidean division: (quotient, remainder).
  [[nodiscard]] std::pair<PolyQ, PolyQ> divmod(const PolyQ& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    PolyQ r = *this;
    std::vector<Rational> q(std::max(0, degree() - d.degree() + 1));
    while (!r.is_zero() && r.degree() >= d.degree()) {
      int shift = r.degree() - d.degree();
      Rational f = r.leading() / d.leading();
      q[shift] = f;
      r -= (d * f).shifted_up(shift);
    }
    return {PolyQ(std::move(q)), r};
  }

  friend PolyQ gcd(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
      PolyQ r = a.divmod(b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  [[nodiscard]] std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const Rational& a = c_[i];
      if (a == 0) continue;
      Rational mag = abs(a);
      if (!first) os << (a < 0 ? " - " : " + ");
      else if (a < 0) os << "-";
      bool unit = (mag == 1) && i > 0;
      if (!unit) os << mag.get_str();
      if (i > 0) {
        if (!unit) os << "*";
        os << var;
        if (i > 1) os << "^" << i;
      }
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Square-free decomposition (Yun): factors f_i with p = c * prod f_i^i.
inline std::vector<std::pair<PolyQ, int>> squarefree_decomposition(const PolyQ& p) {
  std::vector<std::pair<PolyQ, int>> out;
  if (p.degree() < 1) return out;
  PolyQ a = p.monic();
  PolyQ b = a.derivative();
  PolyQ c = gcd(a, b);
  PolyQ w = a.divmod(c).first;
  PolyQ y = b.divmod(c).first;
  int i = 1;
  while (w.degree() >= 1) {
    PolyQ z = y - w.derivative();
    PolyQ g = z.is_zero() ? w : gcd(w, z);
    if (g.degree() >= 1) out.emplace_back(g, i);
    w = w.divmod(g).first;
    y = z.is_zero() ? PolyQ() : z.divmod(g).first;
    ++i;
  }
  return out;
}

}  // namespace zp
