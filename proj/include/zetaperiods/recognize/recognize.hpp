#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "zetaperiods/recognize/basis.hpp"
#include "zetaperiods/recognize/pslq.hpp"

namespace zp {

enum class RecognitionStatus { found, zero, not_found, insufficient_precision };

inline std::string to_string(RecognitionStatus s) {
  switch (s) {
    case RecognitionStatus::found: return "found";
    case RecognitionStatus::zero: return "consistent with 0";
    case RecognitionStatus::not_found: return "not_found";
    case RecognitionStatus::insufficient_precision: return "insufficient precision";
  }
  return "?";
}

struct RecognitionResult {
  RecognitionStatus status = RecognitionStatus::not_found;
  std::vector<std::string> labels;
  std::vector<Rational> coefficients;  // aligned with labels
  Real residual;
  int verified_digits = 0;
  bool confirmed = false;

  [[nodiscard]] bool ok() const {
    return status == RecognitionStatus::found || status == RecognitionStatus::zero;
  }

  /// Nonzero coefficients keyed by basis label.
  [[nodiscard]] std::map<std::string, Rational> terms() const {
    std::map<std::string, Rational> out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (coefficients[i] != 0) out[labels[i]] = coefficients[i];
    }
    return out;
  }

  [[nodiscard]] std::string expression() const {
    if (status == RecognitionStatus::zero) return "0";
    if (status != RecognitionStatus::found) return "";
    std::string s;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const Rational& c = coefficients[i];
      if (c == 0) continue;
      Rational mag = abs(c);
      if (s.empty()) {
        if (c < 0) s += "-";
      } else {
        s += c < 0 ? " - " : " + ";
      }
      if (labels[i] == "1") {
        s += mag.get_str();
      } else {
        if (mag.get_den() != 1) {
          s += "(" + mag.get_str() + ")*";
        } else if (mag != 1) {
          s += mag.get_str() + "*";
        }
        s += labels[i];
      }
    }
    return s.empty() ? "0" : s;
  }
};

struct RecognizeOptions {
  int detection_digits = 0;  // 0: half of the value's precision
  Integer height_bound = 1000000;
};

inline int digits_of(const Real& x) { return Precision::bits_to_digits(x.bits()); }

/// Sum of coefficients times basis values.
inline Real combine(const std::vector<Rational>& coeffs, const ConstantBasis& basis, Precision p) {
  Real acc(0, p);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) acc += basis.entries[i].value.at(p) * coeffs[i];
  }
  return acc;
}

/// Verified digits of a claimed form: -log10 |x - form|, capped at the precision of x.
inline int verified_digits_of(const Real& x, const std::vector<Rational>& coeffs, const ConstantBasis& basis) {
  Precision p(digits_of(x));
  Real r = abs(x - combine(coeffs, basis, p));
  if (r.is_zero()) return p.digits();
  return std::min(p.digits(), static_cast<int>(std::floor(-r.log10_abs())));
}

inline RecognitionResult recognize(const Real& x, const ConstantBasis& basis, RecognizeOptions opt = {}) {
  RecognitionResult res;
  res.labels = basis.labels();
  res.coefficients.assign(basis.entries.size(), Rational(0));
  Precision p(digits_of(x));
  const int detection = opt.detection_digits > 0 ? opt.detection_digits : p.digits() / 2;
  if (abs(x) < Real::pow10(-detection, p)) {
    res.status = RecognitionStatus::zero;
    res.residual = abs(x);
    res.verified_digits = verified_digits_of(x, res.coefficients, basis);
    return res;
  }
  if (basis.entries.empty()) return res;
  std::vector<Real> vals{x};
  for (const auto& e : basis.entries) vals.push_back(e.value.at(p));
  RelationOptions ro;
  ro.detection_digits = detection;
  ro.height_bound = opt.height_bound;
  RelationResult rel = integer_relation(vals, ro);
  if (rel.status == RelationStatus::insufficient_precision) {
    res.status = RecognitionStatus::insufficient_precision;
    return res;
  }
  if (rel.status != RelationStatus::found || rel.relation[0] == 0) return res;
  Integer v0 = rel.relation[0];
  for (std::size_t i = 0; i < basis.entries.size(); ++i) {
    Rational c(-rel.relation[i + 1], v0);
    c.canonicalize();
    res.coefficients[i] = c;
  }
  res.status = RecognitionStatus::found;
  res.residual = abs(x - combine(res.coefficients, basis, p));
  res.verified_digits = verified_digits_of(x, res.coefficients, basis);
  return res;
}

/// Re-checks a result against a value recomputed at higher precision. The
/// claim is confirmed when it holds to at least `required_digits`.
inline RecognitionResult confirm(RecognitionResult r, const Real& x_hi, const ConstantBasis& basis_hi,
                                 int required_digits) {
  if (!r.ok()) return r;
  Precision p(digits_of(x_hi));
  r.residual = abs(x_hi - combine(r.coefficients, basis_hi, p));
  r.verified_digits = verified_digits_of(x_hi, r.coefficients, basis_hi);
  r.confirmed = r.verified_digits >= required_digits;
  if (!r.confirmed) {
    r.status = RecognitionStatus::not_found;
  }
  return r;
}

}  // namespace zp
