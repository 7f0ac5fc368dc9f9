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

#include "modmet/sequences.hpp"

#include <cstdio>

namespace modmet {

namespace {

std::string format_value(ExtReal v) {
  if (v.is_infinite()) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v.value());
  return buf;
}

}  // namespace

bool LambdaProfile::column_tends_to_zero(std::size_t col, double eps,
                                         std::size_t tail) const {
  if (rows.empty() || col >= lambdas.size()) return false;
  if (tail == 0 || tail > rows.size()) tail = rows.size();
  const std::size_t start = rows.size() - tail;
  if (!(rows.back()[col] <= ExtReal(eps))) return false;
  for (std::size_t i = start; i + 1 < rows.size(); ++i) {
    if (!le_with_slack(rows[i + 1][col], rows[i][col], 1e-12)) return false;
  }
  return true;
}

std::string LambdaProfile::to_csv() const {
  std::string out = "n";
  for (double l : lambdas) out += "," + format_value(ExtReal(l));
  out += "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += std::to_string(i);
    for (const ExtReal& v : rows[i]) out += "," + format_value(v);
    out += "\n";
  }
  return out;
}

}  // namespace modmet
