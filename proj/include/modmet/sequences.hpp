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
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "modmet/errors.hpp"
#include "modmet/ext_real.hpp"
#include "modmet/metrics.hpp"
#include "modmet/modular.hpp"

namespace modmet {

/// Matrix of modular values w_lambda(x_n, x): one row per sequence member,
/// one column per lambda.
struct LambdaProfile {
  std::vector<double> lambdas;
  std::vector<std::vector<ExtReal>> rows;

  /// "Column tends to zero" in the finite-sample sense used throughout this
  /// header: the last entry is <= eps and the column is nonincreasing over
  /// the trailing `tail` rows (infinite entries fail the first clause).
  [[nodiscard]] bool column_tends_to_zero(std::size_t col, double eps,
                                          std::size_t tail) const;

  /// CSV with header "n,<lambda>,..." and one row per member; infinite
  /// entries print as "inf".
  [[nodiscard]] std::string to_csv() const;
};

/// Evaluate w_lambda(x_n, x) over the whole sequence and lambda grid.
template <typename Point>
LambdaProfile lambda_profile(const Modular<Point>& m,
                             std::span<const Point> seq, const Point& x,
                             std::span<const double> lambdas) {
  if (seq.empty()) throw EmptySample("lambda_profile: empty sequence");
  if (lambdas.empty()) throw EmptySample("lambda_profile: empty lambda grid");
  LambdaProfile p;
  p.lambdas.assign(lambdas.begin(), lambdas.end());
  p.rows.reserve(seq.size());
  for (const Point& xn : seq) {
    std::vector<ExtReal> row;
    row.reserve(lambdas.size());
    for (double l : lambdas) row.push_back(m(l, xn, x));
    p.rows.push_back(std::move(row));
  }
  return p;
}

struct CauchyVerdict {
  bool pass = false;
  ExtReal max_gap;          // largest pairwise value over the tail
  std::size_t witness_n = 0;  // pair attaining the maximum
  std::size_t witness_m = 0;
};

/// Is the tail of the sequence modular Cauchy at this lambda? Checks all
/// pairs among the last `tail` members against eps.
template <typename Point>
CauchyVerdict modular_cauchy_verdict(const Modular<Point>& m,
                                     std::span<const Point> seq, double lambda,
                                     double eps, std::size_t tail) {
  if (seq.empty()) throw EmptySample("modular_cauchy_verdict: empty sequence");
  if (tail == 0 || tail > seq.size()) tail = seq.size();
  const std::size_t start = seq.size() - tail;
  CauchyVerdict v;
  v.max_gap = ExtReal(0.0);
  for (std::size_t i = start; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      const ExtReal g = m(lambda, seq[i], seq[j]);
      if (g > v.max_gap) {
        v.max_gap = g;
        v.witness_n = i;
        v.witness_m = j;
      }
    }
  }
  v.pass = v.max_gap <= ExtReal(eps);
  return v;
}

struct Delta2Probe {
  bool premise_holds = false;     // tail converges to x at lambda0
  bool conclusion_holds = false;  // tail converges to x at lambda0 / 2
};

/// One instance of the parameter-halving condition: convergence observed at
/// lambda0 should persist at lambda0 / 2. A true premise with a false
/// conclusion exhibits a sequence that converges in the modular sense but
/// not at every rate, i.e. a failure of the halving condition.
template <typename Point>
Delta2Probe delta2_probe(const Modular<Point>& m, std::span<const Point> seq,
                         const Point& x, double lambda0, double eps,
                         std::size_t tail) {
  if (seq.empty()) throw EmptySample("delta2_probe: empty sequence");
  if (tail == 0 || tail > seq.size()) tail = seq.size();
  const double grid[2] = {lambda0 / 2.0, lambda0};
  LambdaProfile p = lambda_profile(m, seq, x, std::span<const double>(grid, 2));
  return {.premise_holds = p.column_tends_to_zero(1, eps, tail),
          .conclusion_holds = p.column_tends_to_zero(0, eps, tail)};
}

struct ConvergenceComparison {
  bool metric_converges = false;      // d_w* of the tail tends to zero
  bool modular_converges = false;     // some lambda column tends to zero
  bool all_lambda_converges = false;  // every sampled column tends to zero
  std::vector<double> dw_star_tail;   // d_w*(x_n, x) over the tail
  LambdaProfile profile;
};

/// Compare metric convergence (through d_w*) with modular convergence on a
/// sampled lambda grid. For convex modulars, metric convergence should
/// match convergence at every lambda; plain modular convergence is the
/// weaker one-lambda statement.
template <typename Point>
ConvergenceComparison metric_vs_modular_convergence(
    const Modular<Point>& m, std::span<const Point> seq, const Point& x,
    std::span<const double> lambdas, double tol, std::size_t tail = 4) {
  if (seq.empty()) {
    throw EmptySample("metric_vs_modular_convergence: empty sequence");
  }
  if (tail == 0 || tail > seq.size()) tail = seq.size();
  ConvergenceComparison c;
  c.profile = lambda_profile(m, seq, x, lambdas);

  bool some = false, all = true;
  for (std::size_t col = 0; col < c.profile.lambdas.size(); ++col) {
    const bool zero = c.profile.column_tends_to_zero(col, tol, tail);
    some = some || zero;
    all = all && zero;
  }
  c.modular_converges = some;
  c.all_lambda_converges = all;

  const std::size_t start = seq.size() - tail;
  for (std::size_t i = start; i < seq.size(); ++i) {
    c.dw_star_tail.push_back(metric_dw_star(m, seq[i], x));
  }
  bool metric = c.dw_star_tail.back() <= tol;
  for (std::size_t i = 0; i + 1 < c.dw_star_tail.size(); ++i) {
    metric = metric && c.dw_star_tail[i + 1] <= c.dw_star_tail[i] + 1e-12;
  }
  c.metric_converges = metric;
  return c;
}

}  // namespace modmet
