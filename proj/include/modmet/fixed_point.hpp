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
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modmet/errors.hpp"
#include "modmet/ext_real.hpp"
#include "modmet/metrics.hpp"
#include "modmet/modular.hpp"
#include "modmet/transforms.hpp"

namespace modmet {

template <typename Point>
using SelfMap = std::function<Point(const Point&)>;

/// Contraction parameters: w_{k lambda}(Tx, Ty) <= w_lambda(x, y) is asked
/// for 0 < lambda <= lambda0.
struct ContractionSpec {
  double k;
  double lambda0;

  ContractionSpec(double k_, double lambda0_) : k(k_), lambda0(lambda0_) {
    if (!(k > 0.0) || !(k < 1.0)) {
      throw std::invalid_argument("ContractionSpec: k must lie in (0, 1)");
    }
    if (!(lambda0 > 0.0) || !std::isfinite(lambda0)) {
      throw std::invalid_argument("ContractionSpec: lambda0 must be positive");
    }
  }
};

struct ContractionWitness {
  std::size_t pair_index = 0;
  double lambda = 0.0;
  ExtReal lhs{};
  ExtReal rhs{};
};

struct ContractionVerdict {
  bool pass = true;
  std::size_t checked = 0;
  std::vector<ContractionWitness> witnesses;
};

namespace detail {

template <typename Point>
ContractionVerdict check_contraction_impl(
    const Modular<Point>& m, const SelfMap<Point>& T,
    std::span<const std::pair<Point, Point>> pairs, const ContractionSpec& spec,
    std::span<const double> lambda_grid, bool strong, double slack) {
  if (pairs.empty()) throw EmptySample("contraction check: no pairs");
  if (lambda_grid.empty()) throw EmptySample("contraction check: no lambdas");
  for (double l : lambda_grid) {
    if (!(l > 0.0) || l > spec.lambda0 * (1.0 + 1e-12)) {
      throw std::invalid_argument(
          "contraction check: lambda grid must lie in (0, lambda0]");
    }
  }
  ContractionVerdict verdict;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Point tx = T(pairs[i].first);
    const Point ty = T(pairs[i].second);
    for (double l : lambda_grid) {
      const ExtReal lhs = m(spec.k * l, tx, ty);
      ExtReal rhs = m(l, pairs[i].first, pairs[i].second);
      if (strong) {
        rhs = rhs.is_infinite() ? rhs : rhs.scaled_by(spec.k);
      }
      ++verdict.checked;
      if (!le_with_slack(lhs, rhs, slack, slack)) {
        verdict.pass = false;
        verdict.witnesses.push_back(
            {.pair_index = i, .lambda = l, .lhs = lhs, .rhs = rhs});
      }
    }
  }
  return verdict;
}

}  // namespace detail

/// Sampled check of w_{k lambda}(Tx, Ty) <= w_lambda(x, y) over the given
/// pairs and lambda grid (grid must lie in (0, lambda0]). Infinite values
/// compare by the extended order, so inf <= inf holds.
template <typename Point>
ContractionVerdict check_modular_contraction(
    const Modular<Point>& m, const SelfMap<Point>& T,
    std::span<const std::pair<Point, Point>> pairs, const ContractionSpec& spec,
    std::span<const double> lambda_grid, double slack = 1e-12) {
  return detail::check_contraction_impl(m, T, pairs, spec, lambda_grid, false,
                                        slack);
}

/// Stronger variant with the extra factor: w_{k lambda}(Tx, Ty) <=
/// k * w_lambda(x, y). Implies the plain form on the same samples.
template <typename Point>
ContractionVerdict check_strong_contraction(
    const Modular<Point>& m, const SelfMap<Point>& T,
    std::span<const std::pair<Point, Point>> pairs, const ContractionSpec& spec,
    std::span<const double> lambda_grid, double slack = 1e-12) {
  return detail::check_contraction_impl(m, T, pairs, spec, lambda_grid, true,
                                        slack);
}

/// Estimate limsup over lambda -> 0+ of
///   sup over pairs of w_{h lambda}(Tx, Ty) / w_lambda(x, y)
/// on a decreasing lambda schedule, taking the max over the trailing
/// `tail_window` schedule entries. Ratio conventions: inf/inf = 1,
/// finite/inf = 0, positive/0 = inf, 0/0 = 1. A value <= 1 is evidence for
/// a contraction with dilation h.
template <typename Point>
double limsup_ratio_probe(const Modular<Point>& m, const SelfMap<Point>& T,
                          std::span<const std::pair<Point, Point>> pairs,
                          double h, std::span<const double> lambda_schedule,
                          std::size_t tail_window = 3) {
  if (pairs.empty()) throw EmptySample("limsup_ratio_probe: no pairs");
  if (lambda_schedule.empty()) {
    throw EmptySample("limsup_ratio_probe: empty schedule");
  }
  if (!(h > 0.0)) {
    throw std::invalid_argument("limsup_ratio_probe: h must be positive");
  }
  for (std::size_t i = 0; i + 1 < lambda_schedule.size(); ++i) {
    if (!(lambda_schedule[i + 1] < lambda_schedule[i])) {
      throw std::invalid_argument(
          "limsup_ratio_probe: schedule must decrease");
    }
  }
  auto ratio = [](ExtReal a, ExtReal b) {
    if (b.is_infinite()) return a.is_infinite() ? 1.0 : 0.0;
    if (b.value() == 0.0) {
      return a.value() == 0.0 ? 1.0
                              : std::numeric_limits<double>::infinity();
    }
    return a.value() / b.value();
  };
  std::vector<std::pair<Point, Point>> images;
  images.reserve(pairs.size());
  for (const auto& [x, y] : pairs) images.emplace_back(T(x), T(y));

  if (tail_window == 0 || tail_window > lambda_schedule.size()) {
    tail_window = lambda_schedule.size();
  }
  double estimate = 0.0;
  const std::size_t start = lambda_schedule.size() - tail_window;
  for (std::size_t s = start; s < lambda_schedule.size(); ++s) {
    const double l = lambda_schedule[s];
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const ExtReal num = m(h * l, images[i].first, images[i].second);
      const ExtReal den = m(l, pairs[i].first, pairs[i].second);
      estimate = std::max(estimate, ratio(num, den));
    }
  }
  return estimate;
}

struct LipschitzEquivalence {
  bool lipschitz_holds = true;  // d_w*(Tx, Ty) <= k d_w*(x, y) + 2 tol
  bool modular_condition_holds = true;  // unit sublevels map into unit
                                        // sublevels at dilated lambda
  std::optional<std::size_t> lipschitz_witness;
  std::optional<std::size_t> modular_witness;

  [[nodiscard]] bool agree() const {
    return lipschitz_holds == modular_condition_holds;
  }
};

/// Sampled audit of the two equivalent forms of "T is k-Lipschitz for d_w*"
/// on a convex modular: the metric inequality itself, and the modular form
/// "w_lambda(x, y) <= 1 implies w_{k lambda + 0}(Tx, Ty) <= 1" evaluated
/// through a right regularization with step delta. The two verdicts should
/// agree pair by pair; the report says whether they did.
template <typename Point>
LipschitzEquivalence lipschitz_equivalence_check(
    const Modular<Point>& m, const SelfMap<Point>& T,
    std::span<const std::pair<Point, Point>> pairs, double k,
    std::span<const double> lambdas, double tol = 1e-9, double delta = 1e-9) {
  if (pairs.empty()) throw EmptySample("lipschitz_equivalence_check: no pairs");
  if (!(k > 0.0)) {
    throw std::invalid_argument("lipschitz_equivalence_check: k must be > 0");
  }
  if (!m.flags().claims_convex) {
    throw std::invalid_argument(
        "lipschitz_equivalence_check: modular must be convex");
  }
  const Modular<Point> right = regularize(m, RegularizationSide::Right, delta);
  const BisectOptions opt{.tol = tol, .lambda_cap = 1e9};
  LipschitzEquivalence rep;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [x, y] = pairs[i];
    const Point tx = T(x);
    const Point ty = T(y);
    const double dxy = metric_dw_star(m, x, y, opt);
    const double dtxty = metric_dw_star(m, tx, ty, opt);
    if (dtxty > k * dxy + 2.0 * tol + 1e-12) {
      rep.lipschitz_holds = false;
      if (!rep.lipschitz_witness) rep.lipschitz_witness = i;
    }
    for (double l : lambdas) {
      if (!(m(l, x, y) <= ExtReal(1.0))) continue;
      if (!le_with_slack(right(k * l, tx, ty), ExtReal(1.0), 1e-12)) {
        rep.modular_condition_holds = false;
        if (!rep.modular_witness) rep.modular_witness = i;
        break;
      }
    }
  }
  return rep;
}

enum class SolveVerdict { Converged, MaxIter, Diverged };

std::string_view solve_verdict_name(SolveVerdict v);

/// Full record of a Picard iteration. gaps[m] = w_{lambda0}(x_m, x_{m+1})
/// with x_0 the seed; apriori[m] = k^m * C where C = w_{(1-k) lambda0}(seed,
/// T seed). For a convex modular satisfying the contraction inequality the
/// recorded gaps never exceed the a-priori envelope.
template <typename Point>
struct FixedPointTrace {
  std::vector<Point> iterates;  // x_0 = seed, x_1 = T seed, ...
  std::vector<double> gaps;
  std::vector<double> apriori;
  double C = 0.0;
  double lambda1 = 0.0;            // (1 - k) * lambda0
  std::size_t apriori_budget = 0;  // iterations the envelope needs to reach eps
  SolveVerdict verdict = SolveVerdict::MaxIter;
  std::optional<Point> fixed_point;
  double final_residual = 0.0;  // w_{lambda0}(p, Tp) at the returned point
};

/// Numeric part of a trace, independent of the point type; this is what
/// gets serialized.
struct TraceSummary {
  std::vector<double> gaps;
  std::vector<double> apriori;
  double C = 0.0;
  double lambda1 = 0.0;
  std::size_t apriori_budget = 0;
  SolveVerdict verdict = SolveVerdict::MaxIter;
  double final_residual = 0.0;
};

template <typename Point>
TraceSummary summarize(const FixedPointTrace<Point>& tr) {
  return {.gaps = tr.gaps,
          .apriori = tr.apriori,
          .C = tr.C,
          .lambda1 = tr.lambda1,
          .apriori_budget = tr.apriori_budget,
          .verdict = tr.verdict,
          .final_residual = tr.final_residual};
}

/// Iterate x_{n+1} = T x_n from the seed until the step gap or the a-priori
/// envelope k^n C falls below eps, the iteration budget runs out, or the
/// gaps grow (more than doubling over five consecutive increasing steps),
/// which is reported as divergence.
///
/// Throws InfiniteSeed when C is infinite (the theorem's reach condition
/// fails at this seed) and InfiniteGap when a later gap is infinite.
template <typename Point>
FixedPointTrace<Point> picard_solve(const Modular<Point>& m,
                                    const SelfMap<Point>& T, const Point& seed,
                                    const ContractionSpec& spec, double eps,
                                    std::size_t max_iter) {
  if (!(eps > 0.0)) {
    throw std::invalid_argument("picard_solve: eps must be positive");
  }
  if (max_iter == 0) {
    throw std::invalid_argument("picard_solve: max_iter must be >= 1");
  }
  FixedPointTrace<Point> tr;
  tr.lambda1 = (1.0 - spec.k) * spec.lambda0;
  Point first = T(seed);
  const ExtReal c = m(tr.lambda1, seed, first);
  if (c.is_infinite()) {
    throw InfiniteSeed("picard_solve: infinite gap at the seed");
  }
  tr.C = c.value();
  tr.apriori_budget =
      tr.C <= eps ? 0
                  : static_cast<std::size_t>(
                        std::ceil(std::log(eps / tr.C) / std::log(spec.k)));
  tr.iterates.push_back(seed);
  tr.iterates.push_back(std::move(first));

  double k_pow = 1.0;
  for (std::size_t n = 0; n < max_iter; ++n) {
    const Point& prev = tr.iterates[tr.iterates.size() - 2];
    const Point& cur = tr.iterates.back();
    const ExtReal gap = m(spec.lambda0, prev, cur);
    if (gap.is_infinite()) {
      throw InfiniteGap("picard_solve: infinite gap at step " +
                        std::to_string(n));
    }
    tr.gaps.push_back(gap.value());
    tr.apriori.push_back(k_pow * tr.C);
    k_pow *= spec.k;

    if (tr.gaps.back() <= eps || tr.apriori.back() <= eps) {
      tr.verdict = SolveVerdict::Converged;
      tr.fixed_point = cur;
      const Point next = T(cur);
      const ExtReal res = m(spec.lambda0, cur, next);
      if (res.is_infinite()) {
        throw InfiniteGap("picard_solve: infinite residual at the solution");
      }
      tr.final_residual = res.value();
      return tr;
    }
    if (tr.gaps.size() >= 6) {
      const std::size_t e = tr.gaps.size() - 1;
      bool growing = true;
      for (std::size_t i = e - 4; i <= e; ++i) {
        growing = growing && tr.gaps[i] > tr.gaps[i - 1];
      }
      if (growing && tr.gaps[e] > 2.0 * tr.gaps[e - 5]) {
        tr.verdict = SolveVerdict::Diverged;
        return tr;
      }
    }
    tr.iterates.push_back(T(cur));
  }
  tr.verdict = SolveVerdict::MaxIter;
  return tr;
}

}  // namespace modmet
