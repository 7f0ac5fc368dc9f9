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

#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>

#include "modmet/ext_real.hpp"

namespace modmet {

/// Structural claims attached to a modular. They are assertions by the
/// constructor, not certified facts; check_axioms exists to audit them.
struct ModularFlags {
  bool claims_convex = false;
  bool claims_strict = false;
  bool claims_finite = false;
};

/// A one-parameter family of distances w_lambda(x, y) on a point universe,
/// nonincreasing in lambda and valued in [0, +inf]. Immutable after
/// construction; copies share nothing mutable, so evaluation is safe to
/// run concurrently.
template <typename Point>
class Modular {
 public:
  using Eval = std::function<ExtReal(double, const Point&, const Point&)>;

  Modular(Eval eval, Point base_point, ModularFlags flags)
      : eval_(std::move(eval)),
        base_(std::move(base_point)),
        flags_(flags) {
    if (!eval_) throw std::invalid_argument("Modular: empty evaluator");
  }

  /// Evaluate w_lambda(x, y). lambda must be positive and finite.
  ExtReal operator()(double lambda, const Point& x, const Point& y) const {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
      throw std::invalid_argument("Modular: lambda must be positive finite");
    }
    return eval_(lambda, x, y);
  }

  const Point& base_point() const noexcept { return base_; }
  const ModularFlags& flags() const noexcept { return flags_; }

 private:
  Eval eval_;
  Point base_;
  ModularFlags flags_;
};

/// The three canonical ways a metric induces a modular.
enum class CanonicalKind {
  Constant,   // w_lambda = d(x, y), ignores lambda
  Velocity,   // w_lambda = d(x, y) / lambda, "distance per time"
  Threshold,  // w_lambda = +inf when lambda <= d(x, y), else 0
};

/// Lift a metric to a modular of the requested kind.
///
/// Flags record what each kind genuinely satisfies: the velocity kind is a
/// strict convex finite modular; the constant kind is a modular that fails
/// the convex inequality whenever the metric has three spread-out points;
/// the threshold kind is convex but not strict (it vanishes for every
/// lambda > d even when x != y) and takes infinite values.
template <typename Point>
Modular<Point> canonical_modular(
    std::function<double(const Point&, const Point&)> metric,
    CanonicalKind kind, Point base_point) {
  if (!metric) throw std::invalid_argument("canonical_modular: empty metric");
  ModularFlags flags;
  typename Modular<Point>::Eval eval;
  switch (kind) {
    case CanonicalKind::Constant:
      flags = {.claims_convex = false, .claims_strict = true,
               .claims_finite = true};
      eval = [metric](double, const Point& x, const Point& y) {
        return ExtReal(metric(x, y));
      };
      break;
    case CanonicalKind::Velocity:
      flags = {.claims_convex = true, .claims_strict = true,
               .claims_finite = true};
      eval = [metric](double lambda, const Point& x, const Point& y) {
        return ExtReal(metric(x, y) / lambda);
      };
      break;
    case CanonicalKind::Threshold:
      flags = {.claims_convex = true, .claims_strict = false,
               .claims_finite = false};
      eval = [metric](double lambda, const Point& x, const Point& y) {
        return lambda <= metric(x, y) ? ExtReal::infinity() : ExtReal(0.0);
      };
      break;
  }
  return Modular<Point>(std::move(eval), std::move(base_point), flags);
}

}  // namespace modmet
