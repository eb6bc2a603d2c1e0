#pragma once

// Built-in operators: the Calabi-Yau-type family D2..D7 in the chart phi
// (MUM point at infinity) and the Legendre operator in lambda.

#include <string>
#include <utility>
#include <vector>

#include "zetaperiods/arith/rational.hpp"
#include "zetaperiods/ode/operator.hpp"

namespace zp::fixtures {

namespace detail {

// Rows are theta^r down to theta^0; each row is {constant, phi-coefficient}.
inline ThetaOperator from_rows(const std::vector<std::pair<long, long>>& rows, std::string chart) {
  const int r = static_cast<int>(rows.size()) - 1;
  std::vector<PolyQ> p(r + 1);
  for (int i = 0; i <= r; ++i) p[r - i] = PolyQ({Rational(rows[i].first), Rational(rows[i].second)});
  return {std::move(p), std::move(chart)};
}

}  // namespace detail

inline ThetaOperator D(int k) {
  using detail::from_rows;
  switch (k) {
    case 2: return from_rows({{4, 1}, {6, 3}, {2, 3}, {0, 1}}, "phi");
    case 3: return from_rows({{4, 1}, {10, 4}, {8, 6}, {2, 4}, {0, 1}}, "phi");
    case 4: return from_rows({{4, 1}, {14, 5}, {18, 10}, {10, 10}, {2, 5}, {0, 1}}, "phi");
    case 5: return from_rows({{4, 1}, {18, 6}, {32, 15}, {28, 20}, {12, 15}, {2, 6}, {0, 1}}, "phi");
    case 6:
      return from_rows({{4, 1}, {22, 7}, {50, 21}, {60, 35}, {40, 35}, {14, 21}, {2, 7}, {0, 1}}, "phi");
    case 7:
      return from_rows(
          {{4, 1}, {26, 8}, {72, 28}, {110, 56}, {100, 70}, {54, 56}, {16, 28}, {2, 8}, {0, 1}}, "phi");
    default: throw InvalidInput("no fixture D" + std::to_string(k) + " (available: D2..D7, DL)");
  }
}

/// Legendre family: lambda(1-lambda) D^2 + (1-2 lambda) D - 1/4, in theta-form
/// (lambda - 1) theta^2 + lambda theta + lambda/4.
inline ThetaOperator legendre() {
  return {{PolyQ({Rational(0), make_rational(1, 4)}), PolyQ({Rational(0), Rational(1)}),
           PolyQ({Rational(-1), Rational(1)})},
          "lambda"};
}

inline bool is_fixture_name(const std::string& name) {
  return name == "DL" || (name.size() == 2 && name[0] == 'D' && name[1] >= '2' && name[1] <= '7');
}

inline ThetaOperator by_name(const std::string& name) {
  if (name == "DL") return legendre();
  if (is_fixture_name(name)) return D(name[1] - '0');
  throw InvalidInput("unknown fixture '" + name + "' (available: D2..D7, DL)");
}

/// Coefficients of the seed series Pi0 for D_k:
/// Pi0(phi) = 2 sum_{n>=1} (-1)^(n-1) phi^(n-1) / (n^k binom(2n,n)), index m = n-1.
inline std::vector<Rational> pi0_coefficients(int k, int N) {
  std::vector<Rational> a;
  for (long n = 1; n <= N + 1; ++n) {
    Integer den = central_binomial(n);
    for (int i = 0; i < k; ++i) den *= n;
    Rational c(Integer(2), den);
    c.canonicalize();
    if ((n - 1) % 2 == 1) c = -c;
    a.push_back(c);
  }
  return a;
}

/// Seed for the Legendre fixture: F(1/2,1/2;1;lambda).
inline std::vector<Rational> legendre_coefficients(int N) {
  auto h = make_rational(1, 2);
  return hypergeometric_coeffs(h, h, Rational(1), N);
}

}  // namespace zp::fixtures
