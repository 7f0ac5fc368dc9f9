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
#include <optional>

#include "modmet/errors.hpp"
#include "modmet/ext_real.hpp"
#include "modmet/modular.hpp"

namespace modmet {

struct BisectOptions {
  double tol = 1e-9;
  double lambda_cap = 1e9;
};

namespace detail {

// Infimum of { lambda > 0 : pred(lambda) } for a monotone predicate whose
// truth set is an upward ray. The bracket starts at [tol, 1] and the upper
// end doubles until the predicate holds; bisection then shrinks the bracket
// to width tol. Returns a value within tol of the infimum.
template <typename Pred>
double infimum_over_lambda(Pred pred, const BisectOptions& opt) {
  if (!(opt.tol > 0.0) || !(opt.lambda_cap > opt.tol)) {
    throw std::invalid_argument("infimum_over_lambda: bad options");
  }
  double lo = opt.tol;
  if (pred(lo)) return 0.0;  // infimum sits in [0, tol]
  double hi = std::max(1.0, 2.0 * lo);
  while (!pred(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > opt.lambda_cap) {
      if (pred(opt.lambda_cap)) {
        hi = opt.lambda_cap;
        break;
      }
      throw CapExceeded("infimum_over_lambda: predicate false up to cap");
    }
  }
  while (hi - lo > opt.tol) {
    const double mid = 0.5 * (lo + hi);
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

/// d_w(x, y) = inf { lambda > 0 : w_lambda(x, y) <= lambda }.
///
/// The predicate is monotone because w is nonincreasing in lambda while the
/// right side grows, so the truth set is an upward ray and bisection applies.
/// Throws CapExceeded when no lambda up to the cap satisfies the predicate.
template <typename Point>
double metric_dw(const Modular<Point>& m, const Point& x, const Point& y,
                 BisectOptions opt = {}) {
  if (x == y) return 0.0;
  return detail::infimum_over_lambda(
      [&](double l) { return m(l, x, y) <= ExtReal(l); }, opt);
}

/// d_w*(x, y) = inf { lambda > 0 : w_lambda(x, y) <= 1 }.
///
/// This is the metric that makes convex modulars behave like norms; on a
/// nonconvex modular the value is still computed but carries no triangle
/// inequality guarantee.
template <typename Point>
double metric_dw_star(const Modular<Point>& m, const Point& x, const Point& y,
                      BisectOptions opt = {}) {
  if (x == y) return 0.0;
  return detail::infimum_over_lambda(
      [&](double l) { return m(l, x, y) <= ExtReal(1.0); }, opt);
}

/// d_kappa(x, y) = inf { lambda > 0 : w_lambda(x, y) <= kappa(lambda) } for a
/// superadditive gauge with kappa(0+) = 0 and kappa(u) > 0 for u > 0.
///
/// Superadditivity (which implies monotonicity, keeping the predicate a ray)
/// and positivity are spot checked on a fixed geometric grid; a violation
/// raises InvalidGauge with the offending pair in the message.
template <typename Point>
double metric_kappa(const Modular<Point>& m,
                    const std::function<double(double)>& kappa, const Point& x,
                    const Point& y, BisectOptions opt = {}) {
  if (!kappa) throw std::invalid_argument("metric_kappa: empty gauge");
  for (double u = 1e-6; u <= 1e6; u *= 8.0) {
    const double ku = kappa(u);
    if (!(ku > 0.0)) {
      throw InvalidGauge("metric_kappa: gauge not positive at u=" +
                         std::to_string(u));
    }
    for (double v = u; v <= 1e6; v *= 8.0) {
      if (kappa(u) + kappa(v) > kappa(u + v) * (1.0 + 1e-12) + 1e-15) {
        throw InvalidGauge("metric_kappa: gauge not superadditive at (" +
                           std::to_string(u) + ", " + std::to_string(v) + ")");
      }
    }
  }
  if (x == y) return 0.0;
  return detail::infimum_over_lambda(
      [&](double l) {
        const double kl = kappa(l);
        if (!(kl >= 0.0)) {
          throw InvalidGauge("metric_kappa: gauge negative at lambda");
        }
        return m(l, x, y) <= ExtReal(kl);
      },
      opt);
}

enum class SpaceVariant {
  XwStar,  // some lambda gives a finite value against the base point
  Xw,      // values against the base point decay to zero as lambda grows
};

struct MembershipResult {
  bool member = false;
  std::optional<double> witness_lambda;
};

/// Semi-decision of membership in the modular space around m.base_point().
///
/// XwStar scans the dyadic grid lambda = 2^k (k >= -20) up to lambda_cap and
/// reports the first finite evaluation as witness. Xw additionally requires
/// the value at lambda_cap to fall below tol; this is a finite-resolution
/// proxy for decay to zero, so a negative answer means "not observable at
/// this cap", not a proof of non-membership.
template <typename Point>
MembershipResult in_modular_space(const Modular<Point>& m, const Point& x,
                                  SpaceVariant variant,
                                  double lambda_cap = 1e9, double tol = 1e-6) {
  std::optional<double> witness;
  for (double l = std::ldexp(1.0, -20); l <= lambda_cap; l *= 2.0) {
    if (m(l, x, m.base_point()).is_finite()) {
      witness = l;
      break;
    }
  }
  if (variant == SpaceVariant::XwStar) {
    return {witness.has_value(), witness};
  }
  if (!witness.has_value()) return {false, std::nullopt};
  if (m(lambda_cap, x, m.base_point()) <= ExtReal(tol)) {
    return {true, lambda_cap};
  }
  return {false, std::nullopt};
}

}  // namespace modmet
