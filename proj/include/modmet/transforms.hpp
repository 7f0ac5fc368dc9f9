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

#include <algorithm>
#include <stdexcept>

#include "modmet/modular.hpp"

namespace modmet {

/// v_lambda = w_lambda / lambda. The result is always a convex modular, and
/// its d_v* metric coincides with the d_w metric of the original: both come
/// from the same predicate w_lambda <= lambda.
template <typename Point>
Modular<Point> convexify(const Modular<Point>& m) {
  ModularFlags flags = m.flags();
  flags.claims_convex = true;
  return Modular<Point>(
      [inner = m](double lambda, const Point& x, const Point& y) {
        return inner(lambda, x, y).divided_by(lambda);
      },
      m.base_point(), flags);
}

/// The inverse rescaling lambda * w_lambda of a convex modular. It satisfies
/// the plain modular axioms but is generally not convex itself (for the
/// velocity kind it collapses back to the constant kind), so the convexity
/// claim is dropped.
template <typename Point>
Modular<Point> hat(const Modular<Point>& m) {
  if (!m.flags().claims_convex) {
    throw std::invalid_argument("hat: input modular must be convex");
  }
  ModularFlags flags = m.flags();
  flags.claims_convex = false;
  return Modular<Point>(
      [inner = m](double lambda, const Point& x, const Point& y) {
        return inner(lambda, x, y).scaled_by(lambda);
      },
      m.base_point(), flags);
}

enum class RegularizationSide { Left, Right };

/// Finite-delta proxy for the one-sided limits in lambda: the right
/// regularization evaluates at lambda + delta, the left at lambda - delta
/// (clamped to lambda / 2 so the argument stays positive). Monotonicity in
/// lambda gives the sandwich  right <= w <= left  pointwise.
template <typename Point>
Modular<Point> regularize(const Modular<Point>& m, RegularizationSide side,
                          double delta) {
  if (!(delta > 0.0)) {
    throw std::invalid_argument("regularize: delta must be positive");
  }
  return Modular<Point>(
      [inner = m, side, delta](double lambda, const Point& x, const Point& y) {
        const double shifted = side == RegularizationSide::Right
                                   ? lambda + delta
                                   : std::max(lambda - delta, 0.5 * lambda);
        return inner(shifted, x, y);
      },
      m.base_point(), m.flags());
}

}  // namespace modmet
