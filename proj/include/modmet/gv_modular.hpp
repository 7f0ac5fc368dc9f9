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

#include "modmet/ac_function.hpp"
#include "modmet/ext_real.hpp"
#include "modmet/modular.hpp"
#include "modmet/phi.hpp"

namespace modmet {

/// The phi-variation modular between two grid functions on the same grid:
///
///   w_lambda(x, y) = integral over [a, b] of phi(|x' - y'| / lambda).
///
/// The integral is a midpoint sum over the stored samples (midpoints never
/// touch the endpoints, where the families of interest are singular). When
/// a derivative callable is available, the two endpoint cells are refined by
/// dyadic shells that halve toward the endpoint; the shell sums double as a
/// divergence probe: shell sums of an integrable endpoint singularity decay
/// geometrically, while a non-integrable one keeps them level or growing, in
/// which case the result is exactly infinity. Functions without callables
/// are piecewise data and always integrate to a finite sum.
///
/// Within about 1% of a critical index the probe reads a barely-integrable
/// tail as divergent, so results are biased toward infinity there; threshold
/// searches over lambda inherit at most that overestimate.
///
/// Throws IncompatibleGrids unless x.comparable_with(y).
ExtReal gv_integral(const PhiFunction& phi, double lambda, const ACFunction& x,
                    const ACFunction& y);

/// Riesz-style variation sum over dyadic partitions of [a, b] up to the
/// given depth (level j splits the interval into 2^j cells):
///
///   sum over cells of phi(|increment of (x - y)| / (lambda * dt)) * dt,
///
/// maximized over levels 0..depth. Increments use exact node values, so the
/// grid size must be divisible by 2^depth. For convex phi the sums increase
/// under refinement and approach gv_integral from below.
double gv_partition(const PhiFunction& phi, double lambda, const ACFunction& x,
                    const ACFunction& y, unsigned depth);

/// Bound on |(x - y)(t) - (x - y)(s)| implied by a finite variation value:
/// lambda * |t - s| * phi^{-1}( w_lambda(x, y) / |t - s| ).
/// Throws InfiniteModular when the modular evaluates to infinity.
double displacement_bound(const PhiFunction& phi, double lambda,
                          const ACFunction& x, const ACFunction& y, double t,
                          double s);

/// Same bound from an already-computed modular value; linear in lambda.
double displacement_bound_given(const PhiFunction& phi, double lambda,
                                double w_value, double t, double s);

/// Wrap the variation integral as a Modular over grid functions anchored at
/// base_point (a strict convex modular with infinite values allowed).
Modular<ACFunction> make_gv_modular(PhiFunction phi, ACFunction base_point);

/// Worked family on [0, 1]: x_alpha(t) = alpha * t * (1 - log t), anchored at
/// zero, with derivative -alpha * log t. Against the zero function and the
/// exponential gauge its variation modular has the closed form below.
ACFunction example_x_alpha(double alpha, std::size_t n);

/// inf for lambda <= alpha, else alpha / (lambda - alpha).
ExtReal closed_w_alpha(double alpha, double lambda);

/// Perturbed family on [0, 1]: derivative -log(t + beta) for beta in [0, 1];
/// beta = 0 gives the limit curve that the family approaches pointwise. With
/// the exponential gauge, the variation of x_beta against the limit curve is
/// infinite for every lambda <= 1 and finite above.
ACFunction example_x_beta(double beta, std::size_t n);

struct BetaBounds {
  double ii1 = 0.0;  // 2^(1/lambda) * lambda * beta / (lambda - 1)
  double ii2 = 0.0;  // (1 - beta) - beta * log(beta)
};

/// Majorants for the two pieces of the variation of x_beta against the limit
/// curve; the modular value is bounded by ii1 + ii2 - 1. Requires lambda > 1
/// and 0 < beta <= 1.
BetaBounds closed_w_beta_bound(double beta, double lambda);

}  // namespace modmet
