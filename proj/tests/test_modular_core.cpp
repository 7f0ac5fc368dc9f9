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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "modmet/axioms.hpp"
#include "modmet/errors.hpp"
#include "modmet/metrics.hpp"
#include "modmet/modular.hpp"
#include "modmet/sampling.hpp"
#include "modmet/transforms.hpp"
#include "property_suites.hpp"

using namespace modmet;

namespace {

Modular<double> line_modular(CanonicalKind kind) {
  return canonical_modular<double>(
      [](const double& a, const double& b) { return std::abs(a - b); }, kind,
      0.0);
}

// Three collinear indices: d(0,2) = 2, the other distances 1. The middle
// point makes the convex triangle fail for the constant kind.
Modular<int> spread_modular(CanonicalKind kind) {
  return canonical_modular<int>(
      [](const int& a, const int& b) {
        return static_cast<double>(std::abs(a - b));
      },
      kind, 0);
}

}  // namespace

TEST_CASE("velocity kind recovers the square root and identity laws") {
  const auto m = line_modular(CanonicalKind::Velocity);
  CHECK(m(2.0, 0.0, 4.0) == ExtReal(2.0));
  CHECK(metric_dw(m, 0.0, 4.0) == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(metric_dw_star(m, 0.0, 4.0) == doctest::Approx(4.0).epsilon(1e-8));
  CHECK(metric_dw(m, 1.5, 1.5) == 0.0);
  CHECK(metric_dw_star(m, 1.5, 1.5) == 0.0);
}

TEST_CASE("threshold kind jumps exactly at the metric value") {
  const auto m = line_modular(CanonicalKind::Threshold);
  CHECK(m(4.0, 0.0, 4.0).is_infinite());
  CHECK(m(4.0001, 0.0, 4.0) == ExtReal(0.0));
  CHECK(metric_dw(m, 0.0, 4.0) == doctest::Approx(4.0).epsilon(1e-8));
}

TEST_CASE("constant kind ignores lambda and pins both derived metrics") {
  const auto m = line_modular(CanonicalKind::Constant);
  CHECK(m(0.01, 0.0, 4.0) == ExtReal(4.0));
  CHECK(m(100.0, 0.0, 4.0) == ExtReal(4.0));
  CHECK(metric_dw(m, 0.0, 4.0) == doctest::Approx(4.0).epsilon(1e-8));
  // Below one the unit sublevel is hit immediately, above one never.
  CHECK(metric_dw_star(m, 0.0, 0.5) == 0.0);
  CHECK_THROWS_AS(metric_dw_star(m, 0.0, 4.0), CapExceeded);
}

TEST_CASE("lambda validation") {
  const auto m = line_modular(CanonicalKind::Velocity);
  CHECK_THROWS_AS(m(0.0, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(m(-1.0, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(m(std::numeric_limits<double>::infinity(), 0.0, 1.0),
                  std::invalid_argument);
}

TEST_CASE("velocity passes the convex audit on random samples") {
  Rng rng(11);
  const auto pts = random_points3(rng, 5, -1.0, 1.0);
  const auto m = props::space_modular(CanonicalKind::Velocity);
  const std::vector<double> lambdas{0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0};
  const auto rep =
      check_axioms<Point3>(m, pts, lambdas, AxiomMode::Convex);
  CHECK(rep.passed());
  CHECK(rep.verdicts.at(Axiom::ConvexTriangle) == AxiomVerdict::Pass);
  CHECK(rep.violations.empty());
  CHECK(rep.checked > 0);
}

TEST_CASE("constant kind fails the convex triangle with a replayable witness") {
  const auto m = spread_modular(CanonicalKind::Constant);
  const std::vector<int> pts{0, 1, 2};
  const std::vector<double> lambdas{0.5, 1.0, 2.0};

  const auto strict = check_axioms<int>(m, pts, lambdas, AxiomMode::Strict);
  CHECK(strict.passed());

  const auto convex = check_axioms<int>(m, pts, lambdas, AxiomMode::Convex);
  CHECK_FALSE(convex.passed());
  CHECK(convex.verdicts.at(Axiom::ConvexTriangle) == AxiomVerdict::Fail);
  REQUIRE_FALSE(convex.violations.empty());
  for (const auto& v : convex.violations) {
    CHECK(v.axiom == Axiom::ConvexTriangle);
    CHECK(v.lhs > v.rhs);
    CHECK(replay_violation<int>(m, pts, v));
  }
  // The endpoints through the middle point are among the witnesses: the
  // weighted right side can never exceed max(d(x,z), d(z,y)) = 1 < 2.
  bool found = false;
  for (const auto& v : convex.violations) {
    found = found || (pts[v.x] == 0 && pts[v.y] == 2 && pts[v.z] == 1);
  }
  CHECK(found);
}

TEST_CASE("threshold kind passes the plain triangle exhaustively") {
  Rng rng(3);
  const auto pts = random_points3(rng, 4, -1.0, 1.0);
  const auto m = props::space_modular(CanonicalKind::Threshold);
  const std::vector<double> lambdas{0.25, 0.5, 1.0, 2.0, 4.0};
  const auto rep = check_axioms<Point3>(m, pts, lambdas, AxiomMode::Modular);
  CHECK(rep.passed());
  CHECK(rep.verdicts.at(Axiom::Triangle) == AxiomVerdict::Pass);
}

TEST_CASE("threshold kind is refuted as strict") {
  const auto m = spread_modular(CanonicalKind::Threshold);
  const std::vector<int> pts{0, 1};
  const std::vector<double> lambdas{2.0, 4.0};  // both above d(0,1) = 1
  const auto rep = check_axioms<int>(m, pts, lambdas, AxiomMode::Strict);
  CHECK_FALSE(rep.passed());
  CHECK(rep.verdicts.at(Axiom::Strictness) == AxiomVerdict::Fail);
}

TEST_CASE("pair axioms go vacuous on a single point") {
  const auto m = line_modular(CanonicalKind::Velocity);
  const std::vector<double> pts{1.0};
  const std::vector<double> lambdas{1.0, 2.0};
  const auto rep = check_axioms<double>(m, pts, lambdas, AxiomMode::Strict);
  CHECK(rep.passed());
  CHECK(rep.verdicts.at(Axiom::Symmetry) == AxiomVerdict::Vacuous);
  CHECK(rep.verdicts.at(Axiom::LambdaMonotone) == AxiomVerdict::Vacuous);
  CHECK(rep.verdicts.at(Axiom::Strictness) == AxiomVerdict::Vacuous);
  CHECK(rep.verdicts.at(Axiom::Identity) == AxiomVerdict::Pass);
}

TEST_CASE("axiom audit input validation") {
  const auto m = line_modular(CanonicalKind::Velocity);
  const std::vector<double> pts{0.0, 1.0};
  const std::vector<double> empty;
  const std::vector<double> descending{2.0, 1.0};
  CHECK_THROWS_AS(
      check_axioms<double>(m, empty, descending, AxiomMode::Modular),
      EmptySample);
  CHECK_THROWS_AS(check_axioms<double>(m, pts, empty, AxiomMode::Modular),
                  EmptySample);
  CHECK_THROWS_AS(
      check_axioms<double>(m, pts, descending, AxiomMode::Modular),
      std::invalid_argument);
}

TEST_CASE("metric_kappa honours the gauge and rejects bad ones") {
  const auto m = line_modular(CanonicalKind::Velocity);
  // w_lambda = 8 / lambda <= lambda^2 exactly from lambda = 2 on.
  CHECK(metric_kappa<double>(m, [](double l) { return l * l; }, 0.0, 8.0) ==
        doctest::Approx(2.0).epsilon(1e-8));
  CHECK(metric_kappa<double>(m, [](double l) { return l * l; }, 3.0, 3.0) ==
        0.0);
  // sqrt is subadditive, not superadditive.
  CHECK_THROWS_AS(metric_kappa<double>(
                      m, [](double l) { return std::sqrt(l); }, 0.0, 8.0),
                  InvalidGauge);
  CHECK_THROWS_AS(metric_kappa<double>(m, [](double) { return 0.0; }, 0.0,
                                       8.0),
                  InvalidGauge);
}

TEST_CASE("membership is decided against the base point") {
  const auto velocity = props::space_modular(CanonicalKind::Velocity);
  const auto constant = props::space_modular(CanonicalKind::Constant);
  const auto threshold = props::space_modular(CanonicalKind::Threshold);
  const Point3 x{1.0, 2.0, -2.0};

  auto r = in_modular_space(velocity, x, SpaceVariant::Xw);
  CHECK(r.member);
  r = in_modular_space(velocity, x, SpaceVariant::XwStar);
  CHECK(r.member);

  // The constant kind never decays, so only the finiteness variant holds.
  r = in_modular_space(constant, x, SpaceVariant::XwStar);
  CHECK(r.member);
  r = in_modular_space(constant, x, SpaceVariant::Xw);
  CHECK_FALSE(r.member);

  // d(x, base) = 3: the dyadic scan first goes finite at lambda = 4.
  r = in_modular_space(threshold, Point3{3.0, 0.0, 0.0}, SpaceVariant::XwStar);
  CHECK(r.member);
  CHECK(r.witness_lambda == 4.0);
  r = in_modular_space(threshold, Point3{3.0, 0.0, 0.0}, SpaceVariant::Xw);
  CHECK(r.member);
}

TEST_CASE("hat of the velocity kind collapses to the constant kind") {
  const auto m = line_modular(CanonicalKind::Velocity);
  const auto h = hat(m);
  CHECK(h(2.0, 0.0, 4.0) == ExtReal(4.0));
  CHECK(h(5.0, 0.0, 4.0) == ExtReal(4.0));
  CHECK(h(3.0, 1.0, 1.0) == ExtReal(0.0));
  CHECK_FALSE(h.flags().claims_convex);
  CHECK_THROWS_AS(hat(line_modular(CanonicalKind::Constant)),
                  std::invalid_argument);
}

TEST_CASE("convexify of the constant kind is the velocity kind") {
  const auto v = convexify(line_modular(CanonicalKind::Constant));
  const auto vel = line_modular(CanonicalKind::Velocity);
  CHECK(v.flags().claims_convex);
  for (double l : {0.25, 1.0, 3.0}) {
    CHECK(v(l, 0.0, 4.0) == vel(l, 0.0, 4.0));
  }
  CHECK(convexify(line_modular(CanonicalKind::Threshold))(1.0, 0.0, 4.0)
            .is_infinite());
}

TEST_CASE("regularization brackets the jump of the threshold kind") {
  const auto m = line_modular(CanonicalKind::Threshold);
  const auto left = regularize(m, RegularizationSide::Left, 1e-6);
  const auto right = regularize(m, RegularizationSide::Right, 1e-6);
  CHECK(left(1.0, 0.0, 1.0).is_infinite());
  CHECK(right(1.0, 0.0, 1.0) == ExtReal(0.0));

  const auto vel = line_modular(CanonicalKind::Velocity);
  const auto vleft = regularize(vel, RegularizationSide::Left, 1e-6);
  const auto vright = regularize(vel, RegularizationSide::Right, 1e-6);
  const double w = vel(2.0, 0.0, 4.0).value();
  CHECK(vleft(2.0, 0.0, 4.0).value() == doctest::Approx(w).epsilon(1e-5));
  CHECK(vright(2.0, 0.0, 4.0).value() == doctest::Approx(w).epsilon(1e-5));

  CHECK_THROWS_AS(regularize(vel, RegularizationSide::Left, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(regularize(vel, RegularizationSide::Left, -1.0),
                  std::invalid_argument);
}

TEST_CASE("property: lambda monotonicity") {
  const auto s = props::monotonicity(101, 1200);
  CHECK(s.samples >= 1000);
  CHECK(s.violations == 0);
}

TEST_CASE("property: regularization sandwich") {
  const auto s = props::sandwich(102, 1200);
  CHECK(s.samples >= 1000);
  CHECK(s.violations == 0);
}

TEST_CASE("property: convexified identity") {
  const auto s = props::convexify_identity(103, 1200);
  CHECK(s.samples >= 1000);
  CHECK(s.violations == 0);
}

TEST_CASE("property: metric relation table") {
  const auto s = props::relation_table(104, 1200);
  CHECK(s.samples >= 1000);
  CHECK(s.violations == 0);
}

TEST_CASE("property: chain inequality up to four links") {
  const auto s = props::chain_inequality(105, 1200);
  CHECK(s.samples >= 1000);
  CHECK(s.violations == 0);
}

TEST_CASE("property: convex scaling") {
  const auto s = props::convex_scaling(106, 1200);
  CHECK(s.samples >= 1000);
  CHECK(s.violations == 0);
}
