#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "zetaperiods/arith/real.hpp"
#include "zetaperiods/error.hpp"

namespace zp {

/// Builds p/q in lowest terms.
inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p", "p/q" or "-p/q". Surrounding whitespace is ignored.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t\n");
  auto last = s.find_last_not_of(" \t\n");
  if (first == std::string::npos) throw InvalidInput("empty rational literal");
  s = s.substr(first, last - first + 1);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  Rational q;
  auto slash = s.find('/');
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  if (slash == std::string::npos) {
    if (!is_int(s)) throw InvalidInput("not a rational literal: '" + std::string(text) + "'");
    q = Rational(Integer(s));
  } else {
    std::string n = s.substr(0, slash);
    std::string d = s.substr(slash + 1);
    if (!is_int(n) || !is_int(d) || d[0] == '-') {
      throw InvalidInput("not a rational literal: '" + std::string(text) + "'");
    }
    Integer den(d);
    if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    q = Rational(Integer(n), den);
    q.canonicalize();
  }
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Exact harmonic number H_r = 1 + 1/2 + ... + 1/r, H_0 = 0.
inline Rational harmonic(long r) {
  if (r < 0) throw DomainError("harmonic number of negative index");
  Rational h = 0;
  for (long k = 1; k <= r; ++k) h += Rational(1, k);
  return h;
}

/// All of H_0..H_r in one pass.
inline std::vector<Rational> harmonic_table(long r) {
  std::vector<Rational> h(static_cast<std::size_t>(r + 1));
  h[0] = 0;
  for (long k = 1; k <= r; ++k) h[k] = h[k - 1] + Rational(1, k);
  return h;
}

/// binom(2n, n).
inline Integer central_binomial(long n) {
  if (n < 0) throw DomainError("central binomial of negative index");
  Integer z;
  mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(2 * n), static_cast<unsigned long>(n));
  return z;
}

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer z;
  mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return z;
}

inline Integer factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  Integer z;
  mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
  return z;
}

inline Rational pow(const Rational& q, long e) {
  Rational base = q;
  Rational r = 1;
  bool neg = e < 0;
  unsigned long k = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  while (k > 0) {
    if (k & 1UL) r *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  if (neg) {
    if (r == 0) throw DomainError("zero to a negative power");
    r = 1 / r;
  }
  return r;
}

/// Taylor coefficients 0..N of the Gauss hypergeometric series F(a,b;c;x).
inline std::vector<Rational> hypergeometric_coeffs(const Rational& a, const Rational& b, const Rational& c, long N) {
  if (N < 0) throw DomainError("negative truncation order");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(N + 1));
  out.emplace_back(1);
  for (long n = 1; n <= N; ++n) {
    Rational cn = c + (n - 1);
    if (cn == 0) {
      throw DomainError("Pochhammer (c)_n vanishes at n = " + std::to_string(n));
    }
    Rational t = out.back() * (a + (n - 1)) * (b + (n - 1));
    t /= cn * n;
    out.push_back(t);
  }
  return out;
}

}  // namespace zp
