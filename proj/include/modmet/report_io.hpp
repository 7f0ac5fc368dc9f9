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

#pragma once

#include <string>

#include <json.hpp>

#include "modmet/axioms.hpp"
#include "modmet/ext_real.hpp"
#include "modmet/fixed_point.hpp"

namespace modmet {

/// JSON value for an extended real: a number when finite, the string "inf"
/// otherwise (JSON has no infinity literal).
nlohmann::json ext_real_json(ExtReal v);

/// {"schema":1, "checked":..., "verdicts":{...}, "violations":[...]}.
nlohmann::json axiom_report_json(const AxiomReport& rep);

/// CSV: verdict rows "axiom,verdict" followed by violation rows.
std::string axiom_report_csv(const AxiomReport& rep);

/// {"iterations":[{"i":..,"gap":..,"apriori":..}...], "verdict":..., ...}.
nlohmann::json trace_summary_json(const TraceSummary& tr);

}  // namespace modmet
