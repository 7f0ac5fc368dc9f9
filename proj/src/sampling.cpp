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

#include "modmet/sampling.hpp"

#include <cmath>

namespace modmet {

double euclidean(const Point3& x, const Point3& y) {
  const double dx = x[0] - y[0];
  const double dy = x[1] - y[1];
  const double dz = x[2] - y[2];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

std::vector<Point3> random_points3(Rng& rng, std::size_t count, double lo,
                                   double hi) {
  std::vector<Point3> pts(count);
  for (auto& p : pts) {
    p = {rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi)};
  }
  return pts;
}

}  // namespace modmet
