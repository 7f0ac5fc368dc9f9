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

#include "modmet/phi.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "modmet/errors.hpp"

namespace modmet {

PhiFunction::PhiFunction(Family family, double p) : family_(family), p_(p) {
  if (family_ == Family::Power) {
    if (!(p >= 1.0) || !std::isfinite(p)) {
      throw std::invalid_argument("PhiFunction::power: exponent must be >= 1");
    }
    name_ = p == 1.0 ? std::string("linear")
                     : "power(" + std::to_string(p) + ")";
  } else {
    name_ = "exp_minus_one";
  }
}

PhiFunction PhiFunction::power(double p) { return {Family::Power, p}; }

PhiFunction PhiFunction::exp_minus_one() { return {Family::ExpMinusOne, 1.0}; }

PhiFunction PhiFunction::linear() { return power(1.0); }

double PhiFunction::operator()(double u) const {
  if (!(u >= 0.0)) {
    throw std::invalid_argument("PhiFunction: argument must be >= 0");
  }
  switch (family_) {
    case Family::Power:
      if (p_ == 1.0) return u;
      if (p_ == 2.0) return u * u;
      return std::pow(u, p_);
    case Family::ExpMinusOne:
      return std::expm1(u);
  }
  return 0.0;
}

double PhiFunction::inverse(double v) const {
  if (!(v >= 0.0)) {
    throw std::invalid_argument("PhiFunction::inverse: argument must be >= 0");
  }
  switch (family_) {
    case Family::Power:
      if (p_ == 1.0) return v;
      if (p_ == 2.0) return std::sqrt(v);
      return std::pow(v, 1.0 / p_);
    case Family::ExpMinusOne:
      return std::log1p(v);
  }
  return 0.0;
}

GrowthVerdict check_delta2_at_infinity(const PhiFunction& phi, double K,
                                       double u0,
                                       std::span<const double> grid) {
  if (grid.empty()) throw EmptySample("check_delta2_at_infinity: empty grid");
  if (!(K > 0.0)) {
    throw std::invalid_argument("check_delta2_at_infinity: K must be > 0");
  }
  for (double u : grid) {
    if (u < u0) continue;
    const double doubled = phi(2.0 * u);
    const double bound = K * phi(u);
    if (doubled > bound * (1.0 + 1e-12)) {
      return {.pass = false, .witness_u = u};
    }
  }
  return {.pass = true, .witness_u = std::nullopt};
}

OrliczVerdict check_orlicz_condition(const PhiFunction& phi,
                                     std::span<const double> grid,
                                     double threshold) {
  if (grid.size() < 2) {
    throw EmptySample("check_orlicz_condition: need at least two grid points");
  }
  std::vector<double> ratio(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0) || (i > 0 && !(grid[i] > grid[i - 1]))) {
      throw std::invalid_argument(
          "check_orlicz_condition: grid must be positive ascending");
    }
    ratio[i] = phi(grid[i]) / grid[i];
  }

  // Knee detection: smallest index after which the ratio grows strictly all
  // the way to the end. A ratio that has saturated to +inf counts as growth.
  const double inf = std::numeric_limits<double>::infinity();
  std::size_t knee = grid.size();  // sentinel: no growing tail at all
  for (std::size_t i = grid.size(); i-- > 1;) {
    const bool grows = ratio[i] > ratio[i - 1] || ratio[i] == inf;
    if (!grows) break;
    knee = i - 1;
  }

  OrliczVerdict v;
  v.threshold = threshold;
  v.ratio_at_umax = ratio.back();
  v.knee_index = knee == grid.size() ? grid.size() - 1 : knee;
  v.pass = knee < grid.size() && ratio.back() > threshold;
  return v;
}

double omega_phi(const PhiFunction& phi, double u) {
  if (!(u >= 0.0)) {
    throw std::invalid_argument("omega_phi: argument must be >= 0");
  }
  if (u == 0.0) return 0.0;
  return u * phi.inverse(1.0 / u);
}

JensenGap jensen_gap(const PhiFunction& phi, std::span<const double> samples) {
  if (samples.empty()) throw EmptySample("jensen_gap: no samples");
  double mean = 0.0;
  for (double s : samples) mean += s;
  mean /= static_cast<double>(samples.size());
  double mean_phi = 0.0;
  for (double s : samples) mean_phi += phi(s);
  mean_phi /= static_cast<double>(samples.size());
  return {.lhs = phi(mean), .rhs = mean_phi};
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !(hi > lo) || n < 2) {
    throw std::invalid_argument("log_grid: need 0 < lo < hi and n >= 2");
  }
  std::vector<double> g(n);
  const double step = (std::log(hi) - std::log(lo)) /
                      static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    g[i] = std::exp(std::log(lo) + step * static_cast<double>(i));
  }
  g.front() = lo;
  g.back() = hi;
  return g;
}

}  // namespace modmet
