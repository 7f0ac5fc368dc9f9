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
#include <functional>
#include <vector>

#include <json.hpp>

namespace modmet {

/// An absolutely continuous real function on [a, b], represented by its
/// value at a plus derivative samples at the midpoints of a uniform grid of
/// N cells. Node values are the cumulative midpoint quadrature of the
/// samples and are cached as prefix sums at construction; the object is
/// immutable afterwards.
///
/// A derivative callable may accompany the samples. When present it lets
/// quadrature refine beyond the stored grid (endpoint cells, divergence
/// probes); it is ignored by equality and serialization, which see only the
/// sampled representation. Resampling is always explicit, never implicit.
class ACFunction {
 public:
  using DerivFn = std::function<double(double)>;

  /// Samples are the derivative at midpoints a + (i + 1/2) h, h = (b-a)/N.
  ACFunction(double a, double b, double x0, std::vector<double> deriv,
             DerivFn deriv_fn = {});

  /// Sample a derivative callable on an n-cell grid, keeping the callable.
  static ACFunction from_derivative(double a, double b, double x0,
                                    std::size_t n, DerivFn deriv_fn);

  /// The constant function t |-> value.
  static ACFunction constant(double a, double b, double value, std::size_t n);

  /// Explicit change of grid resolution. Uses the callable when the source
  /// has one, otherwise the piecewise-constant extension of its samples.
  static ACFunction resampled(const ACFunction& src, std::size_t n);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double x0() const noexcept { return x0_; }
  std::size_t grid_size() const noexcept { return deriv_.size(); }
  double step() const noexcept { return h_; }
  const std::vector<double>& deriv() const noexcept { return deriv_; }

  bool has_deriv_fn() const noexcept { return static_cast<bool>(fn_); }

  /// Derivative at an interior time: the callable when available, else the
  /// piecewise-constant extension of the samples.
  double deriv_at(double t) const;

  double node(std::size_t i) const { return a_ + h_ * static_cast<double>(i); }
  double midpoint(std::size_t i) const {
    return a_ + h_ * (static_cast<double>(i) + 0.5);
  }

  /// x(t_i) for node index i in [0, N].
  double value_at_node(std::size_t i) const {
    return x0_ + h_ * prefix_[i];
  }
  /// x at the midpoint of cell i, exact for the sampled representation.
  double value_at_midpoint(std::size_t i) const {
    return x0_ + h_ * (prefix_[i] + 0.5 * deriv_[i]);
  }
  /// Piecewise-linear reconstruction at any t in [a, b].
  double value_at(double t) const;

  std::vector<double> node_values() const;

  /// Two functions can enter a common variation integral iff they share the
  /// interval, the grid size and the anchor value.
  bool comparable_with(const ACFunction& other) const noexcept;

  /// Equality of the sampled representation; callables are not compared.
  friend bool operator==(const ACFunction& x, const ACFunction& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.x0_ == y.x0_ &&
           x.deriv_ == y.deriv_;
  }

 private:
  double a_, b_, x0_, h_;
  std::vector<double> deriv_;
  std::vector<double> prefix_;  // prefix_[i] = sum of deriv_[0..i)
  DerivFn fn_;
};

/// Serialized form: {"a":..., "b":..., "x0":..., "deriv":[...]}.
void to_json(nlohmann::json& j, const ACFunction& f);
ACFunction ac_function_from_json(const nlohmann::json& j);

}  // namespace modmet
