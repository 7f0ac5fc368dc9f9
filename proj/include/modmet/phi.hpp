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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace modmet {

/// A growth gauge on [0, inf): continuous, nondecreasing, unbounded, zero
/// exactly at zero. The built-in families are convex (hence superadditive
/// with a subadditive inverse) and come with exact closed-form inverses,
/// which the derived-metric bisections and the displacement bound rely on.
class PhiFunction {
 public:
  /// u^p for p >= 1.
  static PhiFunction power(double p);
  /// e^u - 1, the classical exponential gauge.
  static PhiFunction exp_minus_one();
  /// The identity gauge, an alias for power(1).
  static PhiFunction linear();

  /// Evaluate at u >= 0. Saturates to +inf on overflow.
  double operator()(double u) const;
  /// Exact inverse: v^(1/p) for the power family, log(1 + v) for the
  /// exponential one.
  double inverse(double v) const;

  std::string_view name() const { return name_; }

 private:
  enum class Family { Power, ExpMinusOne };
  PhiFunction(Family family, double p);

  Family family_;
  double p_;
  std::string name_;
};

/// Outcome of a growth-condition check with an optional refuting point.
struct GrowthVerdict {
  bool pass = false;
  std::optional<double> witness_u;
};

/// Does phi(2u) <= K * phi(u) hold for every grid point u >= u0? Sampled
/// check: a pass certifies the grid, not the whole tail.
GrowthVerdict check_delta2_at_infinity(const PhiFunction& phi, double K,
                                       double u0, std::span<const double> grid);

struct OrliczVerdict {
  bool pass = false;
  // Engineering rule, recorded so callers can see how the verdict was made:
  // the ratio phi(u)/u must be strictly increasing from knee_index to the end
  // of the grid and exceed `threshold` at the last point.
  std::size_t knee_index = 0;
  double ratio_at_umax = 0.0;
  double threshold = 0.0;
};

/// Sampled test of superlinear growth, phi(u)/u -> inf. The grid must be
/// ascending; ratios that saturate to +inf count as growth.
OrliczVerdict check_orlicz_condition(const PhiFunction& phi,
                                     std::span<const double> grid,
                                     double threshold = 100.0);

/// omega_phi(u) = u * phi^{-1}(1/u) for u > 0, extended by 0 at u = 0. For
/// convex phi this is a subadditive modulus of continuity.
double omega_phi(const PhiFunction& phi, double u);

struct JensenGap {
  double lhs = 0.0;  // phi(mean of samples)
  double rhs = 0.0;  // mean of phi(samples)
};

/// Both sides of Jensen's inequality on a finite sample; lhs <= rhs for the
/// convex built-in families.
JensenGap jensen_gap(const PhiFunction& phi, std::span<const double> samples);

/// n points log-spaced over [lo, hi], ascending.
std::vector<double> log_grid(double lo, double hi, std::size_t n);

}  // namespace modmet
