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

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modmet/ac_function.hpp"
#include "modmet/fixed_point.hpp"
#include "modmet/phi.hpp"

namespace modmet {

/// Initial value problem x'(t) = f(t, x(t)), x(a) = x0, with a right-hand
/// side that is Lipschitz in the state with constant L on the given state
/// box, measured in the variation modular built from phi. y0 is the state
/// at which integrability of t |-> f(t, y0) is certified (usually x0).
struct CaratheodoryProblem {
  std::function<double(double, double)> f;
  double lipschitz_L = 0.0;
  PhiFunction phi = PhiFunction::exp_minus_one();
  double a = 0.0;
  double b = 1.0;
  double x0 = 0.0;
  double y0 = 0.0;
  std::pair<double, double> state_box = {-10.0, 10.0};
};

/// Certificate that t |-> f(t, y0) lies in the Orlicz class of phi: a
/// lambda2 with a finite value c2 of the variation integral of f(., y0)/
/// lambda2 over [a, b].
struct C1Certificate {
  double lambda2 = 0.0;
  double c2 = 0.0;
};

/// Spot-check the declared Lipschitz constant on a (t, x, y) sample from
/// [a, b] x state_box (hard error on failure) and certify integrability of
/// the right-hand side along y0 by geometric search over lambda2.
/// Throws LipschitzCheckFailed or, when no lambda2 up to the cap gives a
/// finite integral, CapExceeded.
C1Certificate validate_problem(const CaratheodoryProblem& p,
                               std::size_t grid = 2048,
                               double lambda_cap = 1e9);

/// One Picard step: (Tx)(t) = x0 + integral of f(s, x(s)) from a to t.
/// The derivative samples of the result are f at the cell midpoints, with
/// x reconstructed by cumulative quadrature; the result also carries the
/// callable t |-> f(t, x(t)) so variation integrals of iterates can refine.
/// Throws NonFiniteRhs when f evaluates non-finite, and invalid_argument
/// when x does not live on the problem's interval/anchor.
ACFunction integral_operator(const CaratheodoryProblem& p, const ACFunction& x);

/// Sampled check of the contraction estimate for the Picard operator: for
/// each pair and each lambda in the grid,
///   w_{L (b-a) lambda}(Tx, Ty) <= w_lambda(x, y)
/// up to a relative quadrature slack. For L = 0 the operator collapses all
/// inputs to one function and the check degenerates to Tx = Ty.
ContractionVerdict verify_contraction_factor(
    const CaratheodoryProblem& p,
    std::span<const std::pair<ACFunction, ACFunction>> pairs,
    std::span<const double> lambda_grid, double rel_slack = 1e-6);

struct Segment {
  double a = 0.0;
  double b = 0.0;
  double k = 0.0;  // contraction factor used on this segment
  ACFunction solution;
  FixedPointTrace<ACFunction> trace;
};

struct SegmentedSolution {
  std::vector<Segment> segments;
  std::vector<double> knots;  // segment boundaries, including a and b
  double max_residual = 0.0;  // node-wise |x - Tx| over all segments

  /// Global node times and values, deduplicating interior knots.
  [[nodiscard]] std::vector<double> times() const;
  [[nodiscard]] std::vector<double> values() const;
};

/// Solve the problem by segmented Picard iteration. The interval is split
/// into ceil(L (b-a) / safety) segments (one segment when L = 0) so each
/// carries a contraction factor L * len <= safety < 1; segments are solved
/// left to right with lambda0 = 1 and a constant seed at the incoming knot
/// value, each on its own n-cell grid.
/// Throws SegmentSolveError if any segment fails to converge.
SegmentedSolution solve_ivp(const CaratheodoryProblem& p, double eps,
                            std::size_t n_per_segment, double safety = 0.5);

/// Named example problems on [0, t_end]: "decay" (x' = -x, x0 = 1),
/// "constant" (x' = 1, x0 = 0), "cosine" (x' = cos t, x0 = 0) and
/// "logistic" (x' = x (1 - x), x0 = 1/2, state box [0, 1]).
const std::vector<std::string>& registry_names();
CaratheodoryProblem make_registry_problem(std::string_view name, double t_end);
/// Closed-form solution of a registry problem, for error measurement.
std::function<double(double)> registry_exact_solution(std::string_view name);

/// CSV rows "t,x" for the assembled solution.
std::string solution_to_csv(const SegmentedSolution& sol);

}  // namespace modmet
