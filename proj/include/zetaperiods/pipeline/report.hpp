#pragma once

// JSON and plain-text renderings of pipeline results. Reals are decimal
// strings tagged with the number of digits that were verified; exact forms are
// maps from basis label to a rational string.

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "zetaperiods/pipeline/growth.hpp"
#include "zetaperiods/pipeline/identities.hpp"
#include "zetaperiods/pipeline/tau.hpp"

namespace zp {

struct ReportOptions {
  bool timings = false;  // off by default so reports are reproducible byte for byte
};

inline nlohmann::json real_json(const Real& x, int verified_digits) {
  return {{"value", x.str(std::max(verified_digits, 1))}, {"digits", verified_digits}};
}

inline nlohmann::json exact_json(const RecognitionResult& r) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [label, c] : r.terms()) j[label] = c.get_str();
  return j;
}

inline nlohmann::json recognition_json(const RecognitionResult& r, const Real& x, int digits) {
  nlohmann::json j;
  j["status"] = to_string(r.status);
  j["raw"] = real_json(x, digits);
  if (r.ok()) {
    j["exact"] = exact_json(r);
    j["expression"] = r.expression();
    j["confirmed"] = r.confirmed || r.status == RecognitionStatus::zero;
    j["verified_digits"] = r.verified_digits;
    j["residual"] = r.residual.is_zero() ? std::string("0") : r.residual.str(6);
  }
  return j;
}

inline nlohmann::json to_json(const TauReport& rep, ReportOptions opt = {}) {
  nlohmann::json j;
  j["kind"] = "tau";
  j["job"] = rep.job;
  j["normalization"] = to_string(rep.normalization);
  j["recognized"] = rep.recognized();
  j["confirmed"] = rep.confirmed();
  j["held_out"] = {{"residual", rep.held_out_residual.str(6)},
                   {"threshold", "1e-" + std::to_string(rep.digits / 2)},
                   {"pass", rep.held_out_ok()}};
  nlohmann::json tau = nlohmann::json::array();
  for (const auto& t : rep.tau) {
    nlohmann::json e;
    e["index"] = t.index;
    e["weight"] = t.weight;
    e["verified_digits"] = t.verified_digits;
    e["re"] = recognition_json(t.re, t.value.re, t.verified_digits);
    e["im"] = recognition_json(t.im, t.value.im, t.verified_digits);
    tau.push_back(e);
  }
  j["tau"] = tau;
  nlohmann::json prov;
  prov["digits"] = rep.digits;
  prov["working_digits"] = rep.working_digits;
  prov["confirm_digits"] = rep.confirm_digits;
  prov["terms"] = rep.terms;
  prov["seed_terms"] = rep.seed_terms;
  prov["chart"] = rep.chart;
  prov["basepoint"] = rep.basepoint.get_str();
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& s : rep.samples) samples.push_back(s.get_str());
  prov["samples"] = samples;
  prov["path"] = "straight segments from the basepoint through the samples by increasing distance";
  prov["transport_steps"] = rep.transport.steps;
  prov["lost_digits"] = rep.transport.lost_digits;
  prov["condition"] = rep.condition.str(6);
  if (opt.timings) prov["seconds"] = rep.seconds;
  j["provenance"] = prov;
  return j;
}

inline std::string to_text(const TauReport& rep, ReportOptions opt = {}) {
  std::ostringstream os;
  os << "job " << rep.job << " (" << to_string(rep.normalization) << " normalization, " << rep.digits
     << " digits, N = " << rep.terms << ")\n";
  for (const auto& t : rep.tau) {
    os << "tau_" << t.index << " = ";
    std::string re = t.re.ok() ? t.re.expression() : t.value.re.str(30) + "... [" + to_string(t.re.status) + "]";
    std::string im = t.im.ok() ? t.im.expression() : t.value.im.str(30) + "... [" + to_string(t.im.status) + "]";
    if (t.im.status == RecognitionStatus::zero) {
      os << re;
      if (t.re.status == RecognitionStatus::zero) os << "  (consistent with 0)";
    } else if (t.re.status == RecognitionStatus::zero) {
      os << "i*(" << im << ")";
    } else {
      os << re << " + i*(" << im << ")";
    }
    os << "   [" << t.verified_digits << " digits verified";
    bool confirmed = (t.re.status == RecognitionStatus::zero || t.re.confirmed) &&
                     (t.im.status == RecognitionStatus::zero || t.im.confirmed);
    if (rep.confirm_digits > 0) os << (confirmed ? ", confirmed at " + std::to_string(rep.confirm_digits) : ", NOT confirmed");
    os << "]\n";
  }
  os << "held-out residual " << rep.held_out_residual.str(6) << (rep.held_out_ok() ? " (ok)" : " (FAIL)") << "\n";
  os << "condition " << rep.condition.str(6) << ", " << rep.transport.steps << " transport steps, basepoint "
     << rep.basepoint.get_str() << "\n";
  if (opt.timings) os << "time " << rep.seconds << " s\n";
  return os.str();
}

inline nlohmann::json to_json(const IdentityReport& r) {
  return {{"id", r.id},
          {"identity", r.description},
          {"left", r.left.str(30)},
          {"right", r.right.str(30)},
          {"difference", r.difference.str(6)},
          {"tolerance", r.tolerance.str(3)},
          {"achieved", r.achieved.str(3)},
          {"pass", r.pass}};
}

inline nlohmann::json to_json(const std::vector<IdentityReport>& rs) {
  nlohmann::json j;
  j["kind"] = "identities";
  nlohmann::json arr = nlohmann::json::array();
  bool all = true;
  for (const auto& r : rs) {
    arr.push_back(to_json(r));
    all = all && r.pass;
  }
  j["identities"] = arr;
  j["pass"] = all;
  return j;
}

inline std::string to_text(const std::vector<IdentityReport>& rs) {
  std::ostringstream os;
  for (const auto& r : rs) {
    os << (r.pass ? "PASS " : "FAIL ") << r.id << "  |diff| = " << r.difference.str(4) << " (tol "
       << r.tolerance.str(2) << ", sums accurate to " << r.achieved.str(2) << ")\n    " << r.description << "\n";
  }
  return os.str();
}

inline nlohmann::json to_json(const GrowthReport& g) {
  nlohmann::json j;
  j["kind"] = "growth";
  j["terms"] = g.terms;
  j["sup_coefficient_root"] = g.sup_coefficient_root;
  j["sup_denominator_root"] = g.sup_denominator_root;
  j["radius_estimate"] = g.radius_estimate;
  j["coefficient_trend"] = g.coefficient_trend;
  j["denominator_trend"] = g.denominator_trend;
  nlohmann::json s = nlohmann::json::array();
  for (const auto& x : g.samples) {
    s.push_back({{"n", x.n}, {"coefficient_root", x.coefficient_root}, {"denominator_root", x.denominator_root}});
  }
  j["samples"] = s;
  return j;
}

inline std::string to_text(const GrowthReport& g) {
  std::ostringstream os;
  os << "n        |a_n|^(1/n)      lcm(den)^(1/n)\n";
  for (const auto& x : g.samples) {
    os << x.n << "\t " << x.coefficient_root << "\t " << x.denominator_root << "\n";
  }
  os << "sup over [N/2, N]: coefficients " << g.sup_coefficient_root << " (" << g.coefficient_trend
     << "), denominators " << g.sup_denominator_root << " (" << g.denominator_trend << ")\n";
  os << "radius estimate " << g.radius_estimate << "\n";
  return os.str();
}

}  // namespace zp
