#pragma once

// Job description for the tau pipeline and its JSON form.
//
//   {
//     "fixture": "D3",                      // or "operator": [[...], ...]
//     "operator": [["0","1"], ["2","4"]],   // theta power, then phi degree
//     "mum_transform": "invert",            // "none" or {"shift": "p/q"}
//     "rescale": "1",
//     "seed": "Pi0_k3",                     // "recurrence" or ["1", "-1/24", ...]
//     "digits": 120,
//     "samples": ["1/2", "1/3", "1/4", "1/5", "1/6"],
//     "basepoint": "1/20",
//     "normalization": "plain",
//     "terms": 300,
//     "basis": {"weight": 3, "generators": ["pi^2", "zeta3"], "grading": "homogeneous"},
//     "height_bound": "1000000"
//   }

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "zetaperiods/frobenius/basis.hpp"
#include "zetaperiods/pipeline/fixtures.hpp"
#include "zetaperiods/recognize/basis.hpp"

namespace zp {

enum class MumTransform { invert, shift, none };

struct JobSpec {
  std::string name = "job";
  ThetaOperator op;
  MumTransform transform = MumTransform::invert;
  Rational shift_point = 0;
  Rational rescale = 1;
  std::vector<Rational> seed;  // leading coefficients; the rest follow from the recurrence
  std::string seed_label = "recurrence";
  int digits = 120;
  std::vector<Rational> samples;  // in the operator's own chart; the last one is held out
  Rational basepoint = make_rational(1, 20);
  Normalization normalization = Normalization::plain;
  std::optional<int> terms;
  std::optional<int> weight;  // weight of tau_0; default order - 1
  std::vector<Generator> generators = tau_generators();
  Grading grading = Grading::homogeneous;
  Integer height_bound = 1000000;
  bool confirm = true;

  [[nodiscard]] int order() const { return op.order(); }

  [[nodiscard]] std::vector<Rational> effective_samples() const {
    if (!samples.empty()) return samples;
    std::vector<Rational> s;
    for (int i = 0; i <= order(); ++i) s.push_back(make_rational(1, i + 2));
    return s;
  }

  void validate() const {
    auto s = effective_samples();
    if (static_cast<int>(s.size()) < order() + 1) {
      throw InvalidInput("need at least order + 1 = " + std::to_string(order() + 1) +
                         " sample points (the last one is held out)");
    }
    if (digits < Precision::kMinDigits) throw InvalidInput("digits must be at least 30");
    if (rescale == 0) throw DomainError("rescale factor must be nonzero");
    if (basepoint <= 0) throw InvalidInput("basepoint must be positive");
  }
};

/// Job for a built-in fixture with the conventions used throughout the tests.
inline JobSpec fixture_job(const std::string& name) {
  JobSpec job;
  job.name = name;
  job.op = fixtures::by_name(name);
  if (name == "DL") {
    throw InvalidInput("fixture DL has no MUM point at infinity; use it with 'continue' or 'frobenius'");
  }
  const int k = name[1] - '0';
  job.seed = {Rational(1)};
  job.seed_label = "Pi0_k" + std::to_string(k);
  job.weight = k;
  return job;
}

namespace detail {

inline Rational json_rational(const nlohmann::json& j, const std::string& what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.get<long>()));
  throw InvalidInput(what + ": expected a rational as a \"p/q\" string or an integer");
}

}  // namespace detail

inline JobSpec parse_job(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInput("job must be a JSON object");
  JobSpec job;
  try {
    if (j.contains("fixture")) {
      job = fixture_job(j.at("fixture").get<std::string>());
    } else if (j.contains("operator")) {
      const auto& rows = j.at("operator");
      if (!rows.is_array()) throw InvalidInput("operator must be a list of lists");
      std::vector<PolyQ> coeffs;
      for (const auto& row : rows) {
        if (!row.is_array()) throw InvalidInput("operator must be a list of lists");
        std::vector<Rational> c;
        for (const auto& x : row) c.push_back(detail::json_rational(x, "operator"));
        coeffs.emplace_back(std::move(c));
      }
      job.op = ThetaOperator(std::move(coeffs), j.value("chart", std::string("phi")));
      job.seed = {Rational(1)};
    } else {
      throw InvalidInput("job needs either \"fixture\" or \"operator\"");
    }
    job.name = j.value("name", j.contains("fixture") ? j.at("fixture").get<std::string>() : std::string("job"));
    if (j.contains("mum_transform")) {
      const auto& t = j.at("mum_transform");
      if (t.is_string()) {
        std::string s = t.get<std::string>();
        if (s == "invert") job.transform = MumTransform::invert;
        else if (s == "none") job.transform = MumTransform::none;
        else throw InvalidInput("mum_transform must be invert, none or {\"shift\": \"p/q\"}");
      } else if (t.is_object() && t.contains("shift")) {
        job.transform = MumTransform::shift;
        job.shift_point = detail::json_rational(t.at("shift"), "shift");
      } else {
        throw InvalidInput("mum_transform must be invert, none or {\"shift\": \"p/q\"}");
      }
    }
    if (j.contains("rescale")) job.rescale = detail::json_rational(j.at("rescale"), "rescale");
    if (j.contains("seed")) {
      const auto& s = j.at("seed");
      if (s.is_string()) {
        std::string name = s.get<std::string>();
        if (name == "recurrence") {
          job.seed = {Rational(1)};
        } else if (name.rfind("Pi0_k", 0) == 0) {
          int k = std::stoi(name.substr(5));
          job.seed = fixtures::pi0_coefficients(k, 8);
        } else if (name == "legendre") {
          job.seed = fixtures::legendre_coefficients(8);
        } else {
          throw InvalidInput("unknown seed '" + name + "'");
        }
        job.seed_label = name;
      } else if (s.is_array()) {
        job.seed.clear();
        for (const auto& x : s) job.seed.push_back(detail::json_rational(x, "seed"));
        if (job.seed.empty()) throw InvalidInput("seed list is empty");
        job.seed_label = "explicit";
      } else {
        throw InvalidInput("seed must be a name or a list of rationals");
      }
    }
    if (j.contains("digits")) job.digits = j.at("digits").get<int>();
    if (j.contains("samples")) {
      job.samples.clear();
      for (const auto& x : j.at("samples")) job.samples.push_back(detail::json_rational(x, "samples"));
    }
    if (j.contains("basepoint")) job.basepoint = detail::json_rational(j.at("basepoint"), "basepoint");
    if (j.contains("normalization")) job.normalization = parse_normalization(j.at("normalization").get<std::string>());
    if (j.contains("terms") && !j.at("terms").is_null()) job.terms = j.at("terms").get<int>();
    if (j.contains("basis")) {
      const auto& b = j.at("basis");
      if (b.contains("weight")) job.weight = b.at("weight").get<int>();
      if (b.contains("generators")) {
        job.generators.clear();
        for (const auto& g : b.at("generators")) job.generators.push_back(parse_generator(g.get<std::string>()));
      }
      if (b.contains("grading")) {
        std::string g = b.at("grading").get<std::string>();
        if (g == "homogeneous") job.grading = Grading::homogeneous;
        else if (g == "graded") job.grading = Grading::graded;
        else throw InvalidInput("grading must be homogeneous or graded");
      }
    }
    if (j.contains("height_bound")) {
      job.height_bound = Integer(j.at("height_bound").is_string() ? j.at("height_bound").get<std::string>()
                                                                  : std::to_string(j.at("height_bound").get<long>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed job: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(std::string("malformed job: ") + e.what());
  }
  job.validate();
  return job;
}

inline JobSpec load_job(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open job file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("job file '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_job(j);
}

}  // namespace zp
