#pragma once

// Bases of exact constants: monomials in pi, log 2 and odd zeta values.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "zetaperiods/arith/constants.hpp"

namespace zp {

/// A generator of the constant ring: base^power, e.g. pi^2 or zeta3.
struct Generator {
  std::string base;  // "pi", "log2", "zeta3", "zeta5", ...
  int power = 1;
  int weight = 1;

  [[nodiscard]] std::string label() const { return power == 1 ? base : base + "^" + std::to_string(power); }
};

struct ConstantValue {
  std::string label;
  int weight = 0;
  Real value;
  std::map<std::string, int> exponents;  // base -> exponent
};

enum class Grading { homogeneous, graded };

struct ConstantBasis {
  std::vector<ConstantValue> entries;
  int max_weight = 0;
  Grading grading = Grading::homogeneous;

  [[nodiscard]] std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (const auto& e : entries) out.push_back(e.label);
    return out;
  }
};

/// Weight of a base constant: pi and log 2 have weight 1, zeta(k) weight k.
inline int base_weight(const std::string& base) {
  if (base == "pi" || base == "log2") return 1;
  if (base.rfind("zeta", 0) == 0) {
    int k = std::stoi(base.substr(4));
    if (k < 2) throw InvalidInput("zeta generator needs k >= 2: " + base);
    return k;
  }
  throw InvalidInput("unknown constant '" + base + "' (known: pi, pi^2, log2, zetaK)");
}

/// Parses "pi", "pi^2", "log2", "zeta3", ...
inline Generator parse_generator(const std::string& text) {
  Generator g;
  auto caret = text.find('^');
  g.base = text.substr(0, caret);
  g.power = caret == std::string::npos ? 1 : std::stoi(text.substr(caret + 1));
  if (g.power < 1) throw InvalidInput("generator power must be positive: " + text);
  if (g.base.rfind("zeta", 0) == 0 && std::stoi(g.base.substr(4)) % 2 == 0) {
    throw InvalidInput("even zeta values are powers of pi; use pi^2 instead of " + g.base);
  }
  g.weight = base_weight(g.base) * g.power;
  return g;
}

inline std::vector<Generator> tau_generators() {
  return {parse_generator("pi^2"), parse_generator("zeta3"), parse_generator("zeta5"), parse_generator("zeta7")};
}

inline std::vector<Generator> identity_generators() {
  return {parse_generator("pi^2"), parse_generator("log2"), parse_generator("zeta3"), parse_generator("zeta5"),
          parse_generator("zeta7")};
}

inline Real base_value(const std::string& base, Precision p) {
  if (base == "pi") return const_pi(p);
  if (base == "log2") return const_log2(p);
  return zeta(std::stoi(base.substr(4)), p);
}

namespace detail {

inline int base_rank(const std::string& b) {
  if (b == "pi") return 0;
  if (b == "log2") return 1;
  return 2 + std::stoi(b.substr(4));
}

inline std::string monomial_label(const std::map<std::string, int>& ex) {
  std::vector<std::pair<std::string, int>> v(ex.begin(), ex.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return base_rank(a.first) < base_rank(b.first); });
  std::string s;
  for (const auto& [b, e] : v) {
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += b;
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

}  // namespace detail

inline ConstantValue monomial_value(const std::map<std::string, int>& ex, Precision p) {
  ConstantValue c;
  c.exponents = ex;
  c.label = detail::monomial_label(ex);
  c.value = Real(1, p.with_guard());
  for (const auto& [b, e] : ex) {
    if (e == 0) continue;
    c.weight += base_weight(b) * e;
    c.value *= pow(base_value(b, p.with_guard()), static_cast<long>(e));
  }
  c.value = c.value.at(p);
  return c;
}

/// All monomials in the generators of total weight w (homogeneous) or <= w (graded),
/// ordered by weight, then label.
inline ConstantBasis build_basis(int w, const std::vector<Generator>& gens, Grading grading, Precision p) {
  if (w < 0) throw DomainError("basis weight must be non-negative");
  std::set<std::map<std::string, int>> seen;
  std::vector<std::map<std::string, int>> monos;
  std::map<std::string, int> cur;
  // depth-first enumeration of exponent vectors
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i == gens.size()) {
      if (grading == Grading::graded || remaining == 0) {
        std::map<std::string, int> clean;
        for (const auto& [b, e] : cur) {
          if (e > 0) clean[b] = e;
        }
        if (seen.insert(clean).second) monos.push_back(clean);
      }
      return;
    }
    const Generator& g = gens[i];
    for (int e = 0; e * g.weight <= remaining; ++e) {
      cur[g.base] += e * g.power;
      self(self, i + 1, remaining - e * g.weight);
      cur[g.base] -= e * g.power;
    }
  };
  rec(rec, 0, w);
  ConstantBasis basis;
  basis.max_weight = w;
  basis.grading = grading;
  for (const auto& m : monos) basis.entries.push_back(monomial_value(m, p));
  std::stable_sort(basis.entries.begin(), basis.entries.end(), [](const auto& a, const auto& b) {
    return a.weight != b.weight ? a.weight < b.weight : a.label < b.label;
  });
  return basis;
}

/// Same labels evaluated at a different precision.
inline ConstantBasis at_precision(const ConstantBasis& b, Precision p) {
  ConstantBasis out = b;
  for (auto& e : out.entries) e = monomial_value(e.exponents, p);
  return out;
}

}  // namespace zp
