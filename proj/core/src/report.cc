// Copyright 2026 The steadydim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "steadydim/report.h"

#include <stdexcept>

namespace steadydim {
namespace {

Json VectorJson(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(ToString(q));
  return a;
}

Json OptionalVectorJson(const std::optional<RationalVector>& v) {
  return v ? VectorJson(*v) : Json(nullptr);
}

Json MatrixJson(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& q = m(i, j);
      if (q.get_den() == 1 && q.get_num().fits_slong_p()) {
        row.push_back(q.get_num().get_si());
      } else {
        row.push_back(ToString(q));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::optional<RationalVector> VectorFromJson(const Json& j) {
  if (j.is_null()) return std::nullopt;
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
  RationalVector v;
  for (const auto& e : j) v.push_back(ParseRational(e.get<std::string>()));
  return v;
}

Json VerdictJson(const GenericRankVerdict& v, bool with_h) {
  Json j;
  j["status"] = ToString(v.status);
  j["target_rank"] = v.target_rank;
  j["witness_u"] = OptionalVectorJson(v.witness_u);
  if (with_h) j["witness_h"] = OptionalVectorJson(v.witness_h);
  j["witness_w"] = OptionalVectorJson(v.witness_w);
  j["certificate"] = v.certificate ? Json(*v.certificate) : Json(nullptr);
  j["samples_tried"] = v.samples_tried;
  return j;
}

GenericRankVerdict VerdictFromJson(const Json& j) {
  GenericRankVerdict v;
  const std::string status = j.at("status").get<std::string>();
  if (status == "NondegenerateExists") {
    v.status = GenericRankVerdict::Status::NondegenerateExists;
  } else if (status == "AllDegenerate") {
    v.status = GenericRankVerdict::Status::AllDegenerate;
  } else {
    throw std::invalid_argument("unknown verdict status '" + status + "'");
  }
  v.target_rank = j.at("target_rank").get<std::size_t>();
  v.witness_u = VectorFromJson(j.at("witness_u"));
  if (j.contains("witness_h")) v.witness_h = VectorFromJson(j.at("witness_h"));
  v.witness_w = VectorFromJson(j.at("witness_w"));
  if (!j.at("certificate").is_null()) {
    v.certificate = j.at("certificate").get<std::vector<std::string>>();
  }
  v.samples_tried = j.at("samples_tried").get<std::size_t>();
  return v;
}

template <typename Enum>
Enum EnumFromString(const std::string& s, std::initializer_list<Enum> values) {
  for (Enum e : values) {
    if (ToString(e) == s) return e;
  }
  throw std::invalid_argument("unknown conclusion '" + s + "'");
}

std::string Plural(std::size_t n, const char* word) {
  return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

void AppendVerdict(std::string& out, const char* name, const GenericRankVerdict& v) {
  out += std::string(name) + ": " + ToString(v.status) + " (target rank " +
         std::to_string(v.target_rank) + ", " + Plural(v.samples_tried, "sample") +
         ")\n";
  if (v.witness_u) out += "  witness_u = " + ToString(*v.witness_u) + "\n";
  if (v.witness_h) out += "  witness_h = " + ToString(*v.witness_h) + "\n";
  if (v.witness_w) out += "  witness_w = " + ToString(*v.witness_w) + "\n";
  if (v.certificate) {
    for (const auto& line : *v.certificate) out += "  certificate: " + line + "\n";
  }
}

std::string IntegerMatrixText(const char* name, const RatMatrix& m) {
  std::string out = std::string(name) + " (" + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + "):\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += " ";
    for (std::size_t j = 0; j < m.cols(); ++j) out += " " + ToString(m(i, j));
    out += "\n";
  }
  return out;
}

}  // namespace

Json ToJson(const AnalysisReport& rep) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["network"] = {{"n", rep.n},
                  {"r", rep.r},
                  {"s", rep.s},
                  {"d", rep.d},
                  {"species", rep.species},
                  {"reactions", rep.reactions}};
  j["cone"] = {{"exists", rep.cone.exists()},
               {"witness", OptionalVectorJson(rep.cone.witness)}};
  j["f_test"] = VerdictJson(rep.f_verdict, false);
  j["F_test"] = VerdictJson(rep.F_verdict, true);
  j["conclusions"] = {{"steady_state_variety", ToString(rep.conclusion_f)},
                      {"compatibility_classes", ToString(rep.conclusion_F)}};
  j["notes"] = rep.notes;
  return j;
}

AnalysisReport ReportFromJson(const Json& j) {
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion) {
      throw std::invalid_argument("unsupported schema_version");
    }
    AnalysisReport rep;
    const Json& net = j.at("network");
    rep.n = net.at("n").get<std::size_t>();
    rep.r = net.at("r").get<std::size_t>();
    rep.s = net.at("s").get<std::size_t>();
    rep.d = net.at("d").get<std::size_t>();
    rep.species = net.at("species").get<std::vector<std::string>>();
    rep.reactions = net.at("reactions").get<std::vector<std::string>>();
    const Json& cone = j.at("cone");
    rep.cone.status = cone.at("exists").get<bool>() ? ConeResult::Status::PositiveVectorExists
                                                   : ConeResult::Status::Empty;
    rep.cone.witness = VectorFromJson(cone.at("witness"));
    rep.f_verdict = VerdictFromJson(j.at("f_test"));
    rep.F_verdict = VerdictFromJson(j.at("F_test"));
    const Json& concl = j.at("conclusions");
    rep.conclusion_f = EnumFromString(
        concl.at("steady_state_variety").get<std::string>(),
        {DimensionConclusion::GenericDimensionNminusS,
         DimensionConclusion::EmptyOrHigherDimensional,
         DimensionConclusion::NoPositiveSteadyStates});
    rep.conclusion_F = EnumFromString(
        concl.at("compatibility_classes").get<std::string>(),
        {FinitenessConclusion::GenericallyFinite,
         FinitenessConclusion::GenericallyEmptyOrInfinite,
         FinitenessConclusion::NoPositiveSteadyStates});
    rep.notes = j.at("notes").get<std::vector<std::string>>();
    return rep;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report JSON: ") + e.what());
  }
}

Json ToJson(const SteadyStateCheck& c) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kappa"] = VectorJson(c.kappa);
  j["x"] = VectorJson(c.x);
  j["residual"] = VectorJson(c.residual);
  j["steady_state"] = c.residual_zero;
  j["jacobian"] = Json::array();
  for (std::size_t i = 0; i < c.jacobian.rows(); ++i) {
    j["jacobian"].push_back(VectorJson(RationalVector(c.jacobian.row(i).begin(),
                                                      c.jacobian.row(i).end())));
  }
  j["stacked_rank"] = c.stacked_rank;
  j["n"] = c.n;
  j["degenerate"] = c.degenerate;
  j["warnings"] = Json::array();
  if (!c.residual_zero) {
    j["warnings"].push_back("point is not a steady state; degeneracy is informational");
  }
  return j;
}

Json ToJson(const NetworkMatrices& m) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = m.n;
  j["r"] = m.r;
  j["s"] = m.s;
  j["d"] = m.d;
  j["gamma"] = MatrixJson(m.gamma);
  j["B"] = MatrixJson(m.b);
  j["N"] = MatrixJson(m.n_mat);
  j["W"] = MatrixJson(m.w_mat);
  return j;
}

std::string DescribeConclusion(DimensionConclusion c, std::size_t expected_dim) {
  switch (c) {
    case DimensionConclusion::GenericDimensionNminusS:
      return "generic dimension n-s = " + std::to_string(expected_dim);
    case DimensionConclusion::EmptyOrHigherDimensional:
      return "empty or higher-dimensional for almost all rate constants";
    case DimensionConclusion::NoPositiveSteadyStates:
      return "no positive steady states";
  }
  return "";
}

std::string DescribeConclusion(FinitenessConclusion c) {
  switch (c) {
    case FinitenessConclusion::GenericallyFinite:
      return "generically finite";
    case FinitenessConclusion::GenericallyEmptyOrInfinite:
      return "generically empty or infinite";
    case FinitenessConclusion::NoPositiveSteadyStates:
      return "no positive steady states";
  }
  return "";
}

std::string RenderText(const AnalysisReport& rep) {
  std::string out = "network: n=" + std::to_string(rep.n) + " r=" + std::to_string(rep.r) +
                    " s=" + std::to_string(rep.s) + " d=" + std::to_string(rep.d) + "\n";
  if (!rep.species.empty()) {
    out += "species:";
    for (const auto& s : rep.species) out += " " + s;
    out += "\n";
  }
  if (rep.cone.exists()) {
    out += "cone: positive kernel vector exists\n";
    out += "  witness w = " + ToString(*rep.cone.witness) + "\n";
  } else {
    out += "cone: empty (no strictly positive kernel vector)\n";
  }
  AppendVerdict(out, "f_test", rep.f_verdict);
  AppendVerdict(out, "F_test", rep.F_verdict);
  out += "conclusion_f: " + DescribeConclusion(rep.conclusion_f, rep.n - rep.s) + "\n";
  out += "conclusion_F: " + DescribeConclusion(rep.conclusion_F) + "\n";
  for (const auto& note : rep.notes) out += "note: " + note + "\n";
  return out;
}

std::string RenderText(const SteadyStateCheck& c) {
  std::string out = std::string("steady state: ") + (c.residual_zero ? "yes" : "no") +
                    "; degenerate: " + (c.degenerate ? "yes" : "no") + "\n";
  out += "kappa = " + ToString(c.kappa) + "\n";
  out += "x = " + ToString(c.x) + "\n";
  out += "residual = " + ToString(c.residual) + "\n";
  out += "stacked rank = " + std::to_string(c.stacked_rank) + " (n = " +
         std::to_string(c.n) + ")\n";
  out += "jacobian:\n";
  for (std::size_t i = 0; i < c.jacobian.rows(); ++i) {
    out += "  " + ToString(c.jacobian.row(i)) + "\n";
  }
  if (!c.residual_zero) {
    out += "warning: point is not a steady state; degeneracy is informational\n";
  }
  return out;
}

std::string RenderText(const NetworkMatrices& m) {
  std::string out = "n=" + std::to_string(m.n) + " r=" + std::to_string(m.r) +
                    " s=" + std::to_string(m.s) + " d=" + std::to_string(m.d) + "\n";
  out += IntegerMatrixText("Gamma", m.gamma);
  out += IntegerMatrixText("B", m.b);
  out += IntegerMatrixText("N", m.n_mat);
  out += IntegerMatrixText("W", m.w_mat);
  return out;
}

}  // namespace steadydim
