// Copyright 2026 The modmet authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "modmet/report_io.hpp"

#include <cstdio>

namespace modmet {

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::Identity: return "identity";
    case Axiom::Symmetry: return "symmetry";
    case Axiom::LambdaMonotone: return "lambda_monotone";
    case Axiom::Triangle: return "triangle";
    case Axiom::ConvexTriangle: return "convex_triangle";
    case Axiom::Strictness: return "strictness";
  }
  return "unknown";
}

std::string_view verdict_name(AxiomVerdict v) {
  switch (v) {
    case AxiomVerdict::Pass: return "pass";
    case AxiomVerdict::Fail: return "fail";
    case AxiomVerdict::Vacuous: return "vacuous";
  }
  return "unknown";
}

std::string_view solve_verdict_name(SolveVerdict v) {
  switch (v) {
    case SolveVerdict::Converged: return "converged";
    case SolveVerdict::MaxIter: return "max_iter";
    case SolveVerdict::Diverged: return "diverged";
  }
  return "unknown";
}

nlohmann::json ext_real_json(ExtReal v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

namespace {

nlohmann::json violation_json(const AxiomViolation& v) {
  nlohmann::json j{{"axiom", axiom_name(v.axiom)},
                   {"lambda", v.lambda},
                   {"lhs", ext_real_json(v.lhs)},
                   {"rhs", ext_real_json(v.rhs)}};
  if (v.x != AxiomViolation::kNone) j["x"] = v.x;
  if (v.y != AxiomViolation::kNone) j["y"] = v.y;
  if (v.z != AxiomViolation::kNone) j["z"] = v.z;
  if (v.mu != 0.0) j["mu"] = v.mu;
  return j;
}

}  // namespace

nlohmann::json axiom_report_json(const AxiomReport& rep) {
  nlohmann::json verdicts = nlohmann::json::object();
  for (const auto& [axiom, v] : rep.verdicts) {
    verdicts[std::string(axiom_name(axiom))] = verdict_name(v);
  }
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : rep.violations) violations.push_back(violation_json(v));
  return nlohmann::json{{"schema", 1},
                        {"checked", rep.checked},
                        {"passed", rep.passed()},
                        {"verdicts", verdicts},
                        {"violations", violations}};
}

std::string axiom_report_csv(const AxiomReport& rep) {
  std::string out = "axiom,verdict\n";
  for (const auto& [axiom, v] : rep.verdicts) {
    out += std::string(axiom_name(axiom)) + "," +
           std::string(verdict_name(v)) + "\n";
  }
  if (!rep.violations.empty()) {
    out += "violation_axiom,x,y,z,lambda,mu,lhs,rhs\n";
    char buf[192];
    for (const auto& v : rep.violations) {
      auto idx = [](std::size_t i) {
        return i == AxiomViolation::kNone ? std::string("-")
                                          : std::to_string(i);
      };
      auto val = [](ExtReal e) {
        if (e.is_infinite()) return std::string("inf");
        char b[32];
        std::snprintf(b, sizeof b, "%.12g", e.value());
        return std::string(b);
      };
      std::snprintf(buf, sizeof buf, "%s,%s,%s,%s,%.12g,%.12g,%s,%s\n",
                    std::string(axiom_name(v.axiom)).c_str(),
                    idx(v.x).c_str(), idx(v.y).c_str(), idx(v.z).c_str(),
                    v.lambda, v.mu, val(v.lhs).c_str(), val(v.rhs).c_str());
      out += buf;
    }
  }
  return out;
}

nlohmann::json trace_summary_json(const TraceSummary& tr) {
  nlohmann::json iterations = nlohmann::json::array();
  for (std::size_t i = 0; i < tr.gaps.size(); ++i) {
    iterations.push_back(nlohmann::json{
        {"i", i}, {"gap", tr.gaps[i]}, {"apriori", tr.apriori[i]}});
  }
  return nlohmann::json{{"iterations", iterations},
                        {"C", tr.C},
                        {"lambda1", tr.lambda1},
                        {"apriori_budget", tr.apriori_budget},
                        {"verdict", solve_verdict_name(tr.verdict)},
                        {"final_residual", tr.final_residual}};
}

}  // namespace modmet
