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
#include <vector>

#include "modmet/errors.hpp"
#include "modmet/gv_modular.hpp"
#include "modmet/modular.hpp"
#include "modmet/phi.hpp"
#include "modmet/sequences.hpp"

using namespace modmet;

namespace {

Modular<double> velocity_line() {
  return canonical_modular<double>(
      [](const double& a, const double& b) { return std::abs(a - b); },
      CanonicalKind::Velocity, 0.0);
}

std::vector<double> halving(double start, std::size_t count) {
  std::vector<double> s(count);
  for (std::size_t i = 0; i < count; ++i) s[i] = start * std::ldexp(1.0, -int(i));
  return s;
}

}  // namespace

TEST_CASE("lambda profile tabulates w over members and rates") {
  const Modular<double> m = velocity_line();
  const std::vector<double> seq = halving(1.0, 5);
  const std::vector<double> lambdas = {0.5, 2.0};
  const LambdaProfile p = lambda_profile(
      m, std::span<const double>(seq), 0.0, std::span<const double>(lambdas));
  REQUIRE(p.rows.size() == 5);
  REQUIRE(p.lambdas == lambdas);
  for (std::size_t i = 0; i < 5; ++i) {
    const double xn = seq[i];
    CHECK(p.rows[i][0].value() == doctest::Approx(xn / 0.5));
    CHECK(p.rows[i][1].value() == doctest::Approx(xn / 2.0));
  }

  SUBCASE("column verdicts respect the eps bound and the monotone tail") {
    CHECK(p.column_tends_to_zero(1, 0.05, 3));       // last entry 1/32
    CHECK_FALSE(p.column_tends_to_zero(1, 0.02, 3));  // eps below last entry
    CHECK_FALSE(p.column_tends_to_zero(7, 1.0, 3));   // out-of-range column
  }

  SUBCASE("a non-monotone tail fails even when the last entry is small") {
    LambdaProfile q = p;
    q.rows[3][1] = ExtReal(1e-9);  // dip followed by a rise
    CHECK_FALSE(q.column_tends_to_zero(1, 0.05, 3));
  }

  SUBCASE("csv rows are zero-indexed and spell out infinities") {
    LambdaProfile q = p;
    q.rows[0][0] = ExtReal::infinity();
    const std::string csv = q.to_csv();
    CHECK(csv.rfind("n,0.5,2\n0,inf,0.5\n", 0) == 0);
    CHECK(csv.find("\n4,0.125,0.03125\n") != std::string::npos);
  }
}

TEST_CASE("cauchy verdict over the tail with replayable witnesses") {
  const Modular<double> m = velocity_line();
  const std::vector<double> seq = halving(1.0, 8);
  const auto good =
      modular_cauchy_verdict(m, std::span<const double>(seq), 2.0, 0.05, 3);
  CHECK(good.pass);
  // Largest tail gap: |2^-5 - 2^-7| / 2 between the first and last kept.
  CHECK(good.max_gap.value() == doctest::Approx((0.03125 - 0.0078125) / 2.0));
  CHECK(good.witness_n == 5);
  CHECK(good.witness_m == 7);

  const auto bad =
      modular_cauchy_verdict(m, std::span<const double>(seq), 2.0, 1e-4, 3);
  CHECK_FALSE(bad.pass);
  CHECK(bad.max_gap > ExtReal(1e-4));

  CHECK_THROWS_AS(modular_cauchy_verdict(m, std::span<const double>(), 1.0,
                                         0.1, 2),
                  EmptySample);
}

TEST_CASE("halving probe holds on the velocity line") {
  const Modular<double> m = velocity_line();
  const std::vector<double> seq = halving(1.0, 12);
  const Delta2Probe probe =
      delta2_probe(m, std::span<const double>(seq), 0.0, 2.0, 1e-3, 3);
  CHECK(probe.premise_holds);
  CHECK(probe.conclusion_holds);  // w scales linearly in 1/lambda here
}

TEST_CASE("halving probe fails on the perturbed logarithmic family") {
  // Members approach the limit curve at rate lambda = 2 while every value
  // at lambda <= 1 stays infinite, so halving the rate kills convergence.
  const PhiFunction phi = PhiFunction::exp_minus_one();
  const std::size_t grid = 1024;
  const ACFunction limit = example_x_beta(0.0, grid);
  const Modular<ACFunction> m = make_gv_modular(phi, limit);
  std::vector<ACFunction> seq;
  for (std::size_t i = 0; i < 15; ++i) {
    seq.push_back(example_x_beta(0.5 * std::ldexp(1.0, -int(i)), grid));
  }
  const Delta2Probe probe = delta2_probe(m, std::span<const ACFunction>(seq),
                                         limit, 2.0, 1e-3, 3);
  CHECK(probe.premise_holds);
  CHECK_FALSE(probe.conclusion_holds);
}

TEST_CASE("metric and modular convergence agree on the velocity line") {
  const Modular<double> m = velocity_line();
  const std::vector<double> seq = halving(1.0, 10);
  const std::vector<double> lambdas = {0.5, 1.0, 2.0, 4.0};
  const auto c = metric_vs_modular_convergence(
      m, std::span<const double>(seq), 0.0, std::span<const double>(lambdas),
      1e-2, 3);
  CHECK(c.metric_converges);
  CHECK(c.modular_converges);
  CHECK(c.all_lambda_converges);
  REQUIRE(c.dw_star_tail.size() == 3);
  // d* on the velocity line is the plain distance.
  CHECK(c.dw_star_tail.back() == doctest::Approx(seq.back()).epsilon(1e-6));
}

TEST_CASE("modular convergence without metric convergence") {
  const PhiFunction phi = PhiFunction::exp_minus_one();
  const std::size_t grid = 1024;
  const ACFunction limit = example_x_beta(0.0, grid);
  const Modular<ACFunction> m = make_gv_modular(phi, limit);
  std::vector<ACFunction> seq;
  for (std::size_t i = 0; i < 15; ++i) {
    seq.push_back(example_x_beta(0.5 * std::ldexp(1.0, -int(i)), grid));
  }
  const std::vector<double> lambdas = {1.0, 2.0, 4.0};
  const auto c = metric_vs_modular_convergence(
      m, std::span<const ACFunction>(seq), limit,
      std::span<const double>(lambdas), 1e-3, 3);
  CHECK(c.modular_converges);        // the lambda = 2 column drains
  CHECK_FALSE(c.all_lambda_converges);  // lambda = 1 stays infinite
  CHECK_FALSE(c.metric_converges);      // d* is pinned at one
  for (double d : c.dw_star_tail) CHECK(d >= 1.0 - 1e-3);
}

TEST_CASE("profile construction rejects empty input") {
  const Modular<double> m = velocity_line();
  const std::vector<double> seq = halving(1.0, 3);
  const std::vector<double> lambdas = {1.0};
  CHECK_THROWS_AS(lambda_profile(m, std::span<const double>(), 0.0,
                                 std::span<const double>(lambdas)),
                  EmptySample);
  CHECK_THROWS_AS(lambda_profile(m, std::span<const double>(seq), 0.0,
                                 std::span<const double>()),
                  EmptySample);
}
