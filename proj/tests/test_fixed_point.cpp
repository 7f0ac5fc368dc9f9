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
#include <doctest.h>

#include <cmath>
#include <utility>
#include <vector>

#include "modmet/errors.hpp"
#include "modmet/fixed_point.hpp"
#include "modmet/modular.hpp"
#include "modmet/sampling.hpp"

using namespace modmet;

namespace {

double line_dist(const double& a, const double& b) { return std::abs(a - b); }

Modular<double> line_modular(CanonicalKind kind) {
  return canonical_modular<double>(line_dist, kind, 0.0);
}

std::vector<std::pair<double, double>> line_pairs(unsigned seed, int n) {
  Rng rng(seed);
  std::vector<std::pair<double, double>> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    out.emplace_back(rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0));
  }
  return out;
}

}  // namespace

TEST_CASE("contraction parameters are validated") {
  CHECK_THROWS_AS(ContractionSpec(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ContractionSpec(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ContractionSpec(-0.2, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ContractionSpec(0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ContractionSpec(0.5, INFINITY), std::invalid_argument);
  CHECK_NOTHROW(ContractionSpec(0.5, 2.0));
}

TEST_CASE("halving map contracts on the velocity line with equality") {
  const Modular<double> m = line_modular(CanonicalKind::Velocity);
  const SelfMap<double> half = [](const double& x) { return x / 2.0; };
  const auto pairs = line_pairs(11, 20);
  const ContractionSpec spec(0.5, 4.0);
  const std::vector<double> grid = {0.5, 1.0, 2.0, 4.0};
  const auto v = check_modular_contraction(
      m, half, std::span<const std::pair<double, double>>(pairs), spec,
      std::span<const double>(grid));
  CHECK(v.pass);
  CHECK(v.checked == pairs.size() * grid.size());
  CHECK(v.witnesses.empty());
}

TEST_CASE("identity map is refuted with replayable witnesses") {
  const Modular<double> m = line_modular(CanonicalKind::Velocity);
  const SelfMap<double> id = [](const double& x) { return x; };
  const auto pairs = line_pairs(12, 6);
  const ContractionSpec spec(0.5, 2.0);
  const std::vector<double> grid = {1.0, 2.0};
  const auto v = check_modular_contraction(
      m, id, std::span<const std::pair<double, double>>(pairs), spec,
      std::span<const double>(grid));
  CHECK_FALSE(v.pass);
  REQUIRE_FALSE(v.witnesses.empty());
  for (const auto& w : v.witnesses) {
    const auto& [x, y] = pairs[w.pair_index];
    CHECK(w.lhs == m(spec.k * w.lambda, id(x), id(y)));
    CHECK(w.rhs == m(w.lambda, x, y));
    CHECK(w.lhs > w.rhs);
  }
}

TEST_CASE("the strong form implies the plain form on the same sample") {
  const Modular<double> m = line_modular(CanonicalKind::Velocity);
  // x/4 shrinks distances by k^2, exactly what the strong form asks at
  // k = 1/2; the plain form then holds with room to spare.
  const SelfMap<double> quarter = [](const double& x) { return x / 4.0; };
  const auto pairs = line_pairs(13, 12);
  const ContractionSpec spec(0.5, 2.0);
  const std::vector<double> grid = {0.25, 1.0, 2.0};
  const auto span_pairs = std::span<const std::pair<double, double>>(pairs);
  const auto span_grid = std::span<const double>(grid);
  CHECK(check_strong_contraction(m, quarter, span_pairs, spec, span_grid).pass);
  CHECK(check_modular_contraction(m, quarter, span_pairs, spec, span_grid)
            .pass);
  // The halving map satisfies only the plain form.
  const SelfMap<double> half = [](const double& x) { return x / 2.0; };
  CHECK(check_modular_contraction(m, half, span_pairs, spec, span_grid).pass);
  CHECK_FALSE(check_strong_contraction(m, half, span_pairs, spec, span_grid)
                  .pass);
}

TEST_CASE("contraction checks validate their inputs") {
  const Modular<double> m = line_modular(CanonicalKind::Velocity);
  const SelfMap<double> half = [](const double& x) { return x / 2.0; };
  const auto pairs = line_pairs(14, 3);
  const ContractionSpec spec(0.5, 1.0);
  const std::vector<double> above = {0.5, 2.0};  // 2.0 exceeds lambda0
  CHECK_THROWS_AS(
      check_modular_contraction(
          m, half, std::span<const std::pair<double, double>>(pairs), spec,
          std::span<const double>(above)),
      std::invalid_argument);
  const std::vector<double> grid = {0.5};
  CHECK_THROWS_AS(check_modular_contraction(
                      m, half, std::span<const std::pair<double, double>>(),
                      spec, std::span<const double>(grid)),
                  EmptySample);
}

TEST_CASE("ratio probe estimates the dilation limit") {
  const auto pairs = line_pairs(15, 8);
  const auto span_pairs = std::span<const std::pair<double, double>>(pairs);
  const std::vector<double> sched = {1.0, 0.5, 0.25, 0.125, 0.0625};
  const auto span_sched = std::span<const double>(sched);
  const Modular<double> vel = line_modular(CanonicalKind::Velocity);
  const SelfMap<double> half = [](const double& x) { return x / 2.0; };
  const SelfMap<double> id = [](const double& x) { return x; };
  // w_{h lambda}(x/2, y/2) / w_lambda(x, y) = 1 identically at h = 1/2.
  CHECK(limsup_ratio_probe(vel, half, span_pairs, 0.5, span_sched) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(limsup_ratio_probe(vel, id, span_pairs, 0.5, span_sched) ==
        doctest::Approx(2.0).epsilon(1e-12));

  SUBCASE("extended-value conventions") {
    const Modular<double> thr = line_modular(CanonicalKind::Threshold);
    const std::vector<std::pair<double, double>> unit = {{0.0, 1.0}};
    const auto span_unit = std::span<const std::pair<double, double>>(unit);
    // Small rates: both sides infinite, read as ratio one.
    const std::vector<double> low = {0.5, 0.25};
    CHECK(limsup_ratio_probe(thr, half, span_unit, 0.5,
                             std::span<const double>(low)) == 1.0);
    // An expanding map turns a zero denominator into an infinite estimate.
    const SelfMap<double> triple = [](const double& x) { return 3.0 * x; };
    const std::vector<double> high = {2.0, 1.8};
    CHECK(std::isinf(limsup_ratio_probe(thr, triple, span_unit, 0.5,
                                        std::span<const double>(high))));
  }

  SUBCASE("validation") {
    CHECK_THROWS_AS(limsup_ratio_probe(vel, half, span_pairs, 0.0, span_sched),
                    std::invalid_argument);
    const std::vector<double> rising = {0.5, 1.0};
    CHECK_THROWS_AS(limsup_ratio_probe(vel, half, span_pairs, 0.5,
                                       std::span<const double>(rising)),
                    std::invalid_argument);
  }
}

TEST_CASE("metric and modular forms of the Lipschitz bound agree") {
  const Modular<double> m = line_modular(CanonicalKind::Velocity);
  const auto pairs = line_pairs(16, 10);
  const auto span_pairs = std::span<const std::pair<double, double>>(pairs);
  const std::vector<double> lambdas = {0.5, 1.0, 2.0, 8.0};
  const auto span_l = std::span<const double>(lambdas);

  const SelfMap<double> half = [](const double& x) { return x / 2.0; };
  const auto good = lipschitz_equivalence_check(m, half, span_pairs, 0.5,
                                                span_l);
  CHECK(good.lipschitz_holds);
  CHECK(good.modular_condition_holds);
  CHECK(good.agree());
  CHECK_FALSE(good.lipschitz_witness.has_value());

  const SelfMap<double> dbl = [](const double& x) { return 2.0 * x; };
  const auto bad = lipschitz_equivalence_check(m, dbl, span_pairs, 0.5,
                                               span_l);
  CHECK_FALSE(bad.lipschitz_holds);
  CHECK_FALSE(bad.modular_condition_holds);
  CHECK(bad.agree());
  CHECK(bad.lipschitz_witness.has_value());
  CHECK(bad.modular_witness.has_value());

  const Modular<double> nonconvex = line_modular(CanonicalKind::Constant);
  CHECK_THROWS_AS(
      lipschitz_equivalence_check(nonconvex, half, span_pairs, 0.5, span_l),
      std::invalid_argument);
}

TEST_CASE("picard iteration on the velocity line") {
  const Modular<double> m = line_modular(CanonicalKind::Velocity);
  const SelfMap<double> half = [](const double& x) { return x / 2.0; };
  const ContractionSpec spec(0.5, 2.0);
  const auto tr = picard_solve(m, half, 1.0, spec, 1e-6, 200);

  CHECK(tr.verdict == SolveVerdict::Converged);
  CHECK(tr.lambda1 == doctest::Approx(1.0));
  CHECK(tr.C == doctest::Approx(0.5));  // w_1(1, 1/2)
  REQUIRE(tr.fixed_point.has_value());
  CHECK(std::abs(*tr.fixed_point) <= 1e-5);
  CHECK(tr.final_residual <= 1e-6);
  REQUIRE(!tr.gaps.empty());
  CHECK(tr.gaps.size() <= tr.apriori_budget + 1);
  for (std::size_t i = 0; i < tr.gaps.size(); ++i) {
    CHECK(tr.gaps[i] <= tr.apriori[i] + 1e-12);
    CHECK(tr.apriori[i] ==
          doctest::Approx(tr.C * std::pow(spec.k, double(i))));
    if (i > 0) {
      CHECK(tr.gaps[i] / tr.gaps[i - 1] == doctest::Approx(0.5));
    }
  }

  SUBCASE("two seeds land on the same point") {
    const auto other = picard_solve(m, half, -3.0, spec, 1e-6, 200);
    REQUIRE(other.fixed_point.has_value());
    CHECK(std::abs(*tr.fixed_point - *other.fixed_point) <= 1e-4);
  }

  SUBCASE("a tight budget reports max-iter without a point") {
    const auto cut = picard_solve(m, half, 1.0, spec, 1e-9, 5);
    CHECK(cut.verdict == SolveVerdict::MaxIter);
    CHECK_FALSE(cut.fixed_point.has_value());
    CHECK(cut.gaps.size() == 5);
  }

  SUBCASE("a doubling map is flagged as divergent") {
    const SelfMap<double> dbl = [](const double& x) { return 2.0 * x; };
    const auto bad = picard_solve(m, dbl, 1.0, spec, 1e-9, 64);
    CHECK(bad.verdict == SolveVerdict::Diverged);
    CHECK_FALSE(bad.fixed_point.has_value());
    CHECK(bad.gaps.size() >= 6);   // five growing steps plus the base
    CHECK(bad.gaps.size() <= 16);  // flagged long before the budget
  }

  SUBCASE("argument validation") {
    CHECK_THROWS_AS(picard_solve(m, half, 1.0, spec, 0.0, 10),
                    std::invalid_argument);
    CHECK_THROWS_AS(picard_solve(m, half, 1.0, spec, 1e-6, 0),
                    std::invalid_argument);
  }
}

TEST_CASE("infinite values interrupt the iteration by exception") {
  const ContractionSpec spec(0.5, 2.0);
  const SelfMap<double> half = [](const double& x) { return x / 2.0; };
  // Threshold values blow up at the seed when the first step is too long.
  const Modular<double> thr = line_modular(CanonicalKind::Threshold);
  CHECK_THROWS_AS(picard_solve(thr, half, 4.0, spec, 1e-6, 50), InfiniteSeed);

  // A modular that is finite near the seed but infinite past a cutoff
  // raises once the doubling map pushes an iterate across it.
  const Modular<double> capped(
      [](double lambda, const double& x, const double& y) {
        const double d = std::abs(x - y);
        return d < 1.5 ? ExtReal(d / lambda) : ExtReal::infinity();
      },
      0.0, ModularFlags{.claims_convex = true, .claims_strict = true,
                        .claims_finite = false});
  const SelfMap<double> dbl = [](const double& x) { return 2.0 * x; };
  CHECK_THROWS_AS(picard_solve(capped, dbl, 0.5, spec, 1e-9, 50), InfiniteGap);
}

TEST_CASE("picard iteration in three dimensions") {
  const Modular<Point3> m = canonical_modular<Point3>(
      euclidean, CanonicalKind::Velocity, Point3{0.0, 0.0, 0.0});
  // Affine contraction toward (1, 2, 3) with factor 0.4 < k.
  const Point3 target{1.0, 2.0, 3.0};
  const SelfMap<Point3> toward = [&](const Point3& p) {
    Point3 q;
    for (int i = 0; i < 3; ++i) q[i] = target[i] + 0.4 * (p[i] - target[i]);
    return q;
  };
  const auto tr = picard_solve(m, toward, Point3{-4.0, 7.0, 0.5},
                               ContractionSpec(0.4, 1.0), 1e-8, 100);
  CHECK(tr.verdict == SolveVerdict::Converged);
  REQUIRE(tr.fixed_point.has_value());
  CHECK(euclidean(*tr.fixed_point, target) <= 1e-7);
  for (std::size_t i = 0; i < tr.gaps.size(); ++i) {
    CHECK(tr.gaps[i] <= tr.apriori[i] + 1e-12);
  }
}
