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
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "modmet/errors.hpp"
#include "modmet/ext_real.hpp"
#include "modmet/modular.hpp"

namespace modmet {

enum class Axiom {
  Identity,        // w_lambda(x, x) = 0
  Symmetry,        // w_lambda(x, y) = w_lambda(y, x)
  LambdaMonotone,  // lambda |-> w_lambda(x, y) nonincreasing
  Triangle,        // w_{l+m}(x, y) <= w_l(x, z) + w_m(y, z)
  ConvexTriangle,  // same with weights l/(l+m), m/(l+m) on the right
  Strictness,      // w_lambda(x, y) = 0 for some lambda forces x = y
};

enum class AxiomVerdict { Pass, Fail, Vacuous };

/// What to audit. Strict includes the triangle inequality; Convex swaps the
/// plain triangle for its weighted variant.
enum class AxiomMode { Pseudomodular, Modular, Strict, Convex };

/// One failed instance, stored as indices into the sample so that it can be
/// replayed against the same modular later.
struct AxiomViolation {
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  Axiom axiom{};
  std::size_t x = kNone;
  std::size_t y = kNone;
  std::size_t z = kNone;
  double lambda = 0.0;
  double mu = 0.0;  // unused except for the triangle variants and monotone
  ExtReal lhs{};
  ExtReal rhs{};
};

struct AxiomReport {
  std::size_t checked = 0;  // number of instances evaluated
  std::map<Axiom, AxiomVerdict> verdicts;
  std::vector<AxiomViolation> violations;

  [[nodiscard]] bool passed() const {
    for (const auto& [axiom, v] : verdicts) {
      if (v == AxiomVerdict::Fail) return false;
    }
    return true;
  }
};

std::string_view axiom_name(Axiom a);
std::string_view verdict_name(AxiomVerdict v);

namespace detail {

// Evaluates one axiom instance; returns true when it is violated and fills
// lhs/rhs with the two sides that were compared. Shared between the sweep in
// check_axioms and replay_violation so a stored witness always reproduces.
template <typename Point>
bool axiom_instance_violated(const Modular<Point>& m,
                             std::span<const Point> pts,
                             const AxiomViolation& inst, double slack,
                             ExtReal& lhs, ExtReal& rhs) {
  switch (inst.axiom) {
    case Axiom::Identity:
      lhs = m(inst.lambda, pts[inst.x], pts[inst.x]);
      rhs = ExtReal(0.0);
      return lhs != rhs;
    case Axiom::Symmetry:
      lhs = m(inst.lambda, pts[inst.x], pts[inst.y]);
      rhs = m(inst.lambda, pts[inst.y], pts[inst.x]);
      return lhs != rhs;
    case Axiom::LambdaMonotone:
      // mu > lambda; the value at the larger parameter must not exceed the
      // value at the smaller one.
      lhs = m(inst.mu, pts[inst.x], pts[inst.y]);
      rhs = m(inst.lambda, pts[inst.x], pts[inst.y]);
      return !le_with_slack(lhs, rhs, slack);
    case Axiom::Triangle:
      lhs = m(inst.lambda + inst.mu, pts[inst.x], pts[inst.y]);
      rhs = m(inst.lambda, pts[inst.x], pts[inst.z]) +
            m(inst.mu, pts[inst.y], pts[inst.z]);
      return !le_with_slack(lhs, rhs, slack);
    case Axiom::ConvexTriangle: {
      const double total = inst.lambda + inst.mu;
      lhs = m(total, pts[inst.x], pts[inst.y]);
      rhs = m(inst.lambda, pts[inst.x], pts[inst.z])
                .scaled_by(inst.lambda / total) +
            m(inst.mu, pts[inst.y], pts[inst.z]).scaled_by(inst.mu / total);
      return !le_with_slack(lhs, rhs, slack);
    }
    case Axiom::Strictness:
      lhs = m(inst.lambda, pts[inst.x], pts[inst.y]);
      rhs = ExtReal(0.0);
      return lhs == rhs;  // zero at distinct points refutes strictness
  }
  return false;
}

}  // namespace detail

/// Audit the modular axioms on a finite sample of points and lambdas.
///
/// The lambda grid must be sorted ascending. Strictness is refutation only:
/// a pass on a finite sample is evidence, not proof. Distinct indices that
/// hold equal points are skipped for strictness.
template <typename Point>
AxiomReport check_axioms(const Modular<Point>& m, std::span<const Point> points,
                         std::span<const double> lambdas, AxiomMode mode,
                         double slack = 1e-12) {
  if (points.empty()) throw EmptySample("check_axioms: no sample points");
  if (lambdas.empty()) throw EmptySample("check_axioms: no lambda grid");
  for (std::size_t i = 0; i + 1 < lambdas.size(); ++i) {
    if (!(lambdas[i] < lambdas[i + 1])) {
      throw std::invalid_argument("check_axioms: lambdas must be ascending");
    }
  }

  AxiomReport rep;
  std::map<Axiom, std::size_t> applicable;
  auto run = [&](const AxiomViolation& inst) {
    ExtReal lhs, rhs;
    ++rep.checked;
    ++applicable[inst.axiom];
    if (detail::axiom_instance_violated(m, points, inst, slack, lhs, rhs)) {
      AxiomViolation v = inst;
      v.lhs = lhs;
      v.rhs = rhs;
      rep.violations.push_back(v);
    }
  };

  const std::size_t n = points.size();
  std::vector<Axiom> wanted = {Axiom::Identity, Axiom::Symmetry,
                               Axiom::LambdaMonotone};
  if (mode == AxiomMode::Modular || mode == AxiomMode::Strict) {
    wanted.push_back(Axiom::Triangle);
  }
  if (mode == AxiomMode::Convex) wanted.push_back(Axiom::ConvexTriangle);
  if (mode == AxiomMode::Strict) wanted.push_back(Axiom::Strictness);

  for (Axiom axiom : wanted) {
    applicable[axiom];  // records the axiom even if no instance applies
    switch (axiom) {
      case Axiom::Identity:
        for (std::size_t i = 0; i < n; ++i) {
          for (double l : lambdas) {
            run({.axiom = axiom, .x = i, .lambda = l});
          }
        }
        break;
      case Axiom::Symmetry:
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = i + 1; j < n; ++j) {
            for (double l : lambdas) {
              run({.axiom = axiom, .x = i, .y = j, .lambda = l});
            }
          }
        }
        break;
      case Axiom::LambdaMonotone:
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t t = 0; t + 1 < lambdas.size(); ++t) {
              run({.axiom = axiom, .x = i, .y = j,
                   .lambda = lambdas[t], .mu = lambdas[t + 1]});
            }
          }
        }
        break;
      case Axiom::Triangle:
      case Axiom::ConvexTriangle:
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
              for (double l : lambdas) {
                for (double mu : lambdas) {
                  run({.axiom = axiom, .x = i, .y = j, .z = k,
                       .lambda = l, .mu = mu});
                }
              }
            }
          }
        }
        break;
      case Axiom::Strictness:
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = i + 1; j < n; ++j) {
            if (points[i] == points[j]) continue;
            for (double l : lambdas) {
              run({.axiom = axiom, .x = i, .y = j, .lambda = l});
            }
          }
        }
        break;
    }
  }

  for (const auto& [axiom, count] : applicable) {
    rep.verdicts[axiom] =
        count == 0 ? AxiomVerdict::Vacuous : AxiomVerdict::Pass;
  }
  for (const auto& v : rep.violations) {
    rep.verdicts[v.axiom] = AxiomVerdict::Fail;
  }
  return rep;
}

/// Re-run a stored witness against the modular it came from.
template <typename Point>
bool replay_violation(const Modular<Point>& m, std::span<const Point> points,
                      const AxiomViolation& v, double slack = 1e-12) {
  ExtReal lhs, rhs;
  return detail::axiom_instance_violated(m, points, v, slack, lhs, rhs);
}

}  // namespace modmet
