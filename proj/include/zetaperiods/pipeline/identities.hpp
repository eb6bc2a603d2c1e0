#pragma once

// Series identities obtained by evaluating the tau expansion of Pi0 at phi = 4
// and phi = -4, where every series involved sits on its circle of convergence.
//
// Atoms, for s = +1 or -1:
//   LP_k(s) = 2 sum s^(n-1) 4^(n-1) / (n^k binom(2n,n))        (Pi0 at phi = 4s)
//   B_m(s)  = sum s^n binom(2n,n) / (4^n n^m)
//   C_k(s)  = sum s^n binom(2n,n) / (4^n n^k) (k + 2n (H_{n-1} - H_{2n-1}))

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "zetaperiods/continuation/boundary.hpp"
#include "zetaperiods/pipeline/tau.hpp"
#include "zetaperiods/recognize/basis.hpp"

namespace zp {

struct IdentityReport {
  std::string id;
  std::string description;
  Real left;
  Real right;
  Real difference;
  Real tolerance;
  Real achieved;  // accuracy estimate of the boundary sums involved
  bool pass = false;
};

enum class Atom { LP, B, C };

struct AtomRef {
  Atom kind;
  int index;  // k or m
  int sign;
};

/// Linear combination of atoms, atom * monomial products and constant monomials.
struct SideSpec {
  struct Term {
    Rational coeff;
    std::string monomial;  // "1", "log2", "pi^2*log2", ...
    std::optional<AtomRef> atom;
  };
  std::vector<Term> terms;
};

namespace detail {

inline std::map<std::string, int> parse_monomial(const std::string& label) {
  std::map<std::string, int> ex;
  if (label == "1") return ex;
  std::stringstream ss(label);
  std::string f;
  while (std::getline(ss, f, '*')) {
    Generator g = parse_generator(f);
    ex[g.base] += g.power;
  }
  return ex;
}

inline BoundarySum atom_value(const AtomRef& a, BoundaryOptions opt) {
  BoundarySeries s;
  s.sign = a.sign;
  switch (a.kind) {
    case Atom::LP: {
      // 2 sum s^(n-1) 4^(n-1)/(n^k binom) = (s/2) sum s^n 4^n/(n^k binom)
      s.weight = BoundarySeries::Weight::inverse;
      s.power = a.index;
      BoundarySum r = boundary_sum(s, opt);
      r.value *= make_rational(a.sign, 2);
      r.error *= make_rational(1, 2);
      return r;
    }
    case Atom::B:
      s.power = a.index;
      return boundary_sum(s, opt);
    case Atom::C:
      s.power = a.index;
      s.harmonic = true;
      s.shift = a.index;
      return boundary_sum(s, opt);
  }
  throw InvalidInput("unknown atom");
}

inline std::string atom_name(const AtomRef& a) {
  std::string n = a.kind == Atom::LP ? "LP" : a.kind == Atom::B ? "B" : "C";
  return n + std::to_string(a.index) + (a.sign > 0 ? "(+1)" : "(-1)");
}

/// Constant part written as "c1:mono1, c2:mono2, ...".
inline std::vector<SideSpec::Term> constants(std::initializer_list<std::pair<const char*, const char*>> list) {
  std::vector<SideSpec::Term> out;
  for (const auto& [c, m] : list) out.push_back({parse_rational(c), m, std::nullopt});
  return out;
}

struct IdentitySpec {
  std::string id;
  SideSpec left;
  SideSpec right;
};

inline SideSpec::Term atom_term(const char* c, AtomRef a, const char* mono = "1") {
  return {parse_rational(c), mono, a};
}

inline SideSpec side(std::vector<SideSpec::Term> consts, std::vector<SideSpec::Term> atoms = {}) {
  SideSpec s;
  s.terms = std::move(consts);
  for (auto& t : atoms) s.terms.push_back(std::move(t));
  return s;
}

/// The three identities for one k: "+" from phi = 4, "a" and "b" from the
/// real and imaginary parts at phi = -4.
inline std::vector<IdentitySpec> identity_specs(int k) {
  const AtomRef LPm{Atom::LP, k, -1}, LPp{Atom::LP, k, 1};
  const AtomRef Cm{Atom::C, k, -1}, Cp{Atom::C, k, 1};
  const AtomRef Bm{Atom::B, k - 1, -1}, Bp{Atom::B, k - 1, 1};
  auto lhs = [](AtomRef a) { return side({}, {atom_term("1", a)}); };
  auto K = [k](const char* t) { return "k" + std::to_string(k) + t; };
  switch (k) {
    case 2:
      return {{K("+"), lhs(LPm), side(constants({{"1", "log2^2"}}), {atom_term("-1", Bm, "log2"), atom_term("-1/2", Cm)})},
              {K("a"), lhs(LPp), side(constants({{"1/4", "pi^2"}, {"1", "log2^2"}}), {atom_term("1/2", Cp)})},
              {K("b"), lhs(Bp), side(constants({{"2", "log2"}}))}};
    case 3:
      return {{K("+"), lhs(LPm),
               side(constants({{"1", "zeta3"}, {"2/3", "log2^3"}}), {atom_term("1", Bm, "log2"), atom_term("1/2", Cm)})},
              {K("a"), lhs(LPp),
               side(constants({{"-1", "zeta3"}, {"1/3", "pi^2*log2"}, {"4/3", "log2^3"}}), {atom_term("-1/2", Cp)})},
              {K("b"), lhs(Bp), side(constants({{"1/6", "pi^2"}, {"-2", "log2^2"}}))}};
    case 4:
      return {{K("+"), lhs(LPm),
               side(constants({{"-1/60", "pi^4"}, {"2", "zeta3*log2"}, {"1/3", "log2^4"}}),
                    {atom_term("-1", Bm, "log2"), atom_term("-1/2", Cm)})},
              {K("a"), lhs(LPp),
               side(constants({{"-1/240", "pi^4"}, {"1/6", "pi^2*log2^2"}, {"1", "log2^4"}}), {atom_term("1/2", Cp)})},
              {K("b"), lhs(Bp), side(constants({{"2", "zeta3"}, {"-1/3", "pi^2*log2"}, {"4/3", "log2^3"}}))}};
    case 5:
      return {{K("+"), lhs(LPm),
               side(constants({{"3", "zeta5"}, {"-1/30", "pi^4*log2"}, {"2", "zeta3*log2^2"}, {"2/15", "log2^5"}}),
                    {atom_term("1", Bm, "log2"), atom_term("1/2", Cm)})},
              {K("a"), lhs(LPp),
               side(constants({{"-3", "zeta5"},
                               {"-1/30", "pi^4*log2"},
                               {"2", "zeta3*log2^2"},
                               {"1/2", "pi^2*zeta3"},
                               {"8/15", "log2^5"}}),
                    {atom_term("-1/2", Cp)})},
              {K("b"), lhs(Bp),
               side(constants({{"1/40", "pi^4"}, {"-4", "zeta3*log2"}, {"1/3", "pi^2*log2^2"}, {"-2/3", "log2^4"}}))}};
    case 6:
      return {{K("+"), lhs(LPm),
               side(constants({{"-1/189", "pi^6"},
                               {"6", "zeta5*log2"},
                               {"-1/30", "pi^4*log2^2"},
                               {"1", "zeta3^2"},
                               {"4/3", "zeta3*log2^3"},
                               {"2/45", "log2^6"}}),
                    {atom_term("-1", Bm, "log2"), atom_term("-1/2", Cm)})},
              {K("a"), lhs(LPp),
               side(constants({{"-71/30240", "pi^6"},
                               {"-7/120", "pi^4*log2^2"},
                               {"-1", "zeta3^2"},
                               {"2/3", "pi^2*log2*zeta3"},
                               {"8/3", "zeta3*log2^3"},
                               {"-1/18", "pi^2*log2^4"},
                               {"2/9", "log2^6"}}),
                    {atom_term("1/2", Cp)})},
              {K("b"), lhs(Bp),
               side(constants({{"6", "zeta5"},
                               {"-1/20", "pi^4*log2"},
                               {"-1/3", "pi^2*zeta3"},
                               {"4", "zeta3*log2^2"},
                               {"-2/9", "pi^2*log2^3"},
                               {"4/15", "log2^5"}}))}};
    case 7:
      return {{K("+"), lhs(LPm),
               side(constants({{"9", "zeta7"},
                               {"-2/189", "pi^6*log2"},
                               {"6", "zeta5*log2^2"},
                               {"-1/45", "pi^4*log2^3"},
                               {"-1/30", "pi^4*zeta3"},
                               {"2/3", "zeta3*log2^4"},
                               {"2", "zeta3^2*log2"},
                               {"4/315", "log2^7"}}),
                    {atom_term("1", Bm, "log2"), atom_term("1/2", Cm)})},
              {K("a"), lhs(LPp),
               side(constants({{"-9", "zeta7"},
                               {"-5/504", "pi^6*log2"},
                               {"3/2", "pi^2*zeta5"},
                               {"6", "zeta5*log2^2"},
                               {"-1/18", "pi^4*log2^3"},
                               {"-1/120", "pi^4*zeta3"},
                               {"1/3", "pi^2*log2^2*zeta3"},
                               {"2", "zeta3*log2^4"},
                               {"-2/45", "pi^2*log2^5"},
                               {"8/105", "log2^7"}}),
                    {atom_term("-1/2", Cp)})},
              {K("b"), lhs(Bp),
               side(constants({{"79/15120", "pi^6"},
                               {"-12", "zeta5*log2"},
                               {"1/20", "pi^4*log2^2"},
                               {"-2", "zeta3^2"},
                               {"2/3", "pi^2*log2*zeta3"},
                               {"-8/3", "zeta3*log2^3"},
                               {"1/9", "pi^2*log2^4"},
                               {"-4/45", "log2^6"}}))}};
  }
  throw InvalidInput("identities exist for k = 2..7, got " + std::to_string(k));
}

class AtomCache {
 public:
  explicit AtomCache(BoundaryOptions opt) : opt_(opt) {}
  const BoundarySum& get(const AtomRef& a) {
    std::string key = atom_name(a);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, atom_value(a, opt_)).first;
    return it->second;
  }

 private:
  BoundaryOptions opt_;
  std::map<std::string, BoundarySum> cache_;
};

inline std::pair<Real, Real> evaluate_side(const SideSpec& s, AtomCache& atoms, Precision p) {
  Real v(0, p), err(0, p);
  for (const auto& t : s.terms) {
    Real m = monomial_value(parse_monomial(t.monomial), p).value * t.coeff;
    if (t.atom) {
      const BoundarySum& a = atoms.get(*t.atom);
      err += abs(m) * a.error;
      m *= a.value;
    }
    v += m;
  }
  return {v, err};
}

inline std::string describe(const SideSpec& s) {
  std::string out;
  for (const auto& t : s.terms) {
    if (!out.empty()) out += " + ";
    out += "(" + t.coeff.get_str() + ")";
    if (t.monomial != "1") out += "*" + t.monomial;
    if (t.atom) out += "*" + atom_name(*t.atom);
  }
  return out.empty() ? "0" : out;
}

}  // namespace detail

/// Checks every displayed sum identity for D_k at the given tolerance.
inline std::vector<IdentityReport> identity_suite(int k, const Real& tolerance, BoundaryOptions opt = {}) {
  Precision p(opt.digits);
  detail::AtomCache atoms(opt);
  std::vector<IdentityReport> out;
  for (const auto& spec : detail::identity_specs(k)) {
    IdentityReport r;
    r.id = spec.id;
    r.description = detail::describe(spec.left) + " = " + detail::describe(spec.right);
    auto [l, le] = detail::evaluate_side(spec.left, atoms, p);
    auto [rv, re] = detail::evaluate_side(spec.right, atoms, p);
    r.left = l;
    r.right = rv;
    r.difference = abs(l - rv);
    r.achieved = le + re;
    r.tolerance = tolerance.at(p);
    r.pass = r.difference < r.tolerance;
    out.push_back(std::move(r));
  }
  return out;
}

/// Evaluates both sides of Pi0(phi) = sum_j tau_j varpi_j(1/phi) at phi = 4 sign
/// for the fixture D_k. The basis elements are assembled from their closed forms:
/// h_0 = x, h_1 .. h_{k-2} = 0, and h_{k-1}, h_k are B and C atoms at x = 1/(4 sign).
/// At x = -1/4 the logarithm is log(1/4) + i pi.
inline IdentityReport verify_expansion_at_boundary(int k, const std::vector<Complex>& tau, int sign,
                                                   const Real& tolerance, BoundaryOptions opt = {}) {
  if (k < 2 || k > 7) throw InvalidInput("boundary check is available for D2..D7");
  if (static_cast<int>(tau.size()) != k + 1) throw InvalidInput("tau must have k + 1 entries");
  if (sign != 1 && sign != -1) throw InvalidInput("phi must be 4 or -4");
  Precision p(opt.digits);
  Precision w = p.with_guard();
  detail::AtomCache atoms(opt);
  Real x = Real(make_rational(sign, 4), w);
  Complex L(log(Real(make_rational(1, 4), w)), sign < 0 ? const_pi(w) : Real(0, w));
  // (-x)^n = s^n with s = -sign; the extra factor x carries the offset rho = 1
  const int s = -sign;
  std::vector<Complex> h(k + 1, Complex(Rational(0), w));
  h[0] = Complex(x);
  Real fk1(factorial(k - 1), w), fk(factorial(k), w);
  h[k - 1] = Complex(x * fk1 * atoms.get({Atom::B, k - 1, s}).value);
  h[k] = Complex(x * fk * atoms.get({Atom::C, k, s}).value * -1);
  Complex rhs(Rational(0), w);
  for (int j = 0; j <= k; ++j) {
    Complex vj(Rational(0), w);
    for (int i = 0; i <= j; ++i) {
      if (h[i].is_zero()) continue;
      vj += h[i] * pow(L, static_cast<long>(j - i)) * Complex(Rational(binomial(j, i)), w);
    }
    rhs += Complex(tau[j].re.at(w), tau[j].im.at(w)) * vj;
  }
  // Pi0(4) is the alternating sum
  const BoundarySum& lp = atoms.get({Atom::LP, k, -sign});
  IdentityReport r;
  r.id = "D" + std::to_string(k) + (sign > 0 ? "@phi=4" : "@phi=-4");
  r.description = "Pi0(" + std::string(sign > 0 ? "4" : "-4") + ") = sum_j tau_j varpi_j(" +
                  (sign > 0 ? "1/4" : "-1/4") + ")";
  r.left = lp.value.at(p);
  r.right = rhs.re.at(p);
  Real diff = abs(Complex(lp.value.at(w)) - rhs);
  r.difference = diff.at(p);
  Real err = lp.error + atoms.get({Atom::B, k - 1, s}).error * fk1 + atoms.get({Atom::C, k, s}).error * fk;
  r.achieved = err.at(p);
  r.tolerance = tolerance.at(p);
  r.pass = r.difference < r.tolerance;
  return r;
}

/// tau values of the exact expansions as complex numbers.
inline std::vector<Complex> tau_values(const TauReport& rep, Precision p) {
  std::vector<Complex> out;
  for (const auto& t : rep.tau) out.push_back(Complex(t.value.re.at(p), t.value.im.at(p)));
  return out;
}

}  // namespace zp
