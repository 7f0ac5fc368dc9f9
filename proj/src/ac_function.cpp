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

#include "modmet/ac_function.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "modmet/errors.hpp"

namespace modmet {

ACFunction::ACFunction(double a, double b, double x0,
                       std::vector<double> deriv, DerivFn deriv_fn)
    : a_(a),
      b_(b),
      x0_(x0),
      h_((b - a) / static_cast<double>(deriv.empty() ? 1 : deriv.size())),
      deriv_(std::move(deriv)),
      fn_(std::move(deriv_fn)) {
  if (!(b > a) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("ACFunction: need finite a < b");
  }
  if (!std::isfinite(x0)) {
    throw std::invalid_argument("ACFunction: anchor value must be finite");
  }
  if (deriv_.empty()) {
    throw std::invalid_argument("ACFunction: need at least one cell");
  }
  prefix_.resize(deriv_.size() + 1);
  prefix_[0] = 0.0;
  for (std::size_t i = 0; i < deriv_.size(); ++i) {
    if (!std::isfinite(deriv_[i])) {
      throw std::invalid_argument("ACFunction: derivative sample not finite");
    }
    prefix_[i + 1] = prefix_[i] + deriv_[i];
  }
}

ACFunction ACFunction::from_derivative(double a, double b, double x0,
                                       std::size_t n, DerivFn deriv_fn) {
  if (!deriv_fn) {
    throw std::invalid_argument("ACFunction::from_derivative: empty callable");
  }
  if (n == 0) {
    throw std::invalid_argument("ACFunction::from_derivative: n must be >= 1");
  }
  const double h = (b - a) / static_cast<double>(n);
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = deriv_fn(a + h * (static_cast<double>(i) + 0.5));
  }
  return ACFunction(a, b, x0, std::move(d), std::move(deriv_fn));
}

ACFunction ACFunction::constant(double a, double b, double value,
                                std::size_t n) {
  return ACFunction(a, b, value, std::vector<double>(n, 0.0),
                    [](double) { return 0.0; });
}

ACFunction ACFunction::resampled(const ACFunction& src, std::size_t n) {
  if (src.has_deriv_fn()) {
    return from_derivative(src.a_, src.b_, src.x0_, n, src.fn_);
  }
  const double h = (src.b_ - src.a_) / static_cast<double>(n);
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = src.deriv_at(src.a_ + h * (static_cast<double>(i) + 0.5));
  }
  return ACFunction(src.a_, src.b_, src.x0_, std::move(d));
}

double ACFunction::deriv_at(double t) const {
  if (fn_) return fn_(t);
  auto cell = static_cast<std::ptrdiff_t>(std::floor((t - a_) / h_));
  if (cell < 0) cell = 0;
  const auto last = static_cast<std::ptrdiff_t>(deriv_.size()) - 1;
  if (cell > last) cell = last;
  return deriv_[static_cast<std::size_t>(cell)];
}

double ACFunction::value_at(double t) const {
  auto cell = static_cast<std::ptrdiff_t>(std::floor((t - a_) / h_));
  if (cell < 0) cell = 0;
  const auto last = static_cast<std::ptrdiff_t>(deriv_.size()) - 1;
  if (cell > last) cell = last;
  const auto i = static_cast<std::size_t>(cell);
  return value_at_node(i) + (t - node(i)) * deriv_[i];
}

std::vector<double> ACFunction::node_values() const {
  std::vector<double> v(prefix_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = value_at_node(i);
  return v;
}

bool ACFunction::comparable_with(const ACFunction& other) const noexcept {
  return a_ == other.a_ && b_ == other.b_ && x0_ == other.x0_ &&
         deriv_.size() == other.deriv_.size();
}

void to_json(nlohmann::json& j, const ACFunction& f) {
  j = nlohmann::json{
      {"a", f.a()}, {"b", f.b()}, {"x0", f.x0()}, {"deriv", f.deriv()}};
}

ACFunction ac_function_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b") ||
      !j.contains("x0") || !j.contains("deriv")) {
    throw std::invalid_argument(
        "ac_function_from_json: need keys a, b, x0, deriv");
  }
  return ACFunction(j.at("a").get<double>(), j.at("b").get<double>(),
                    j.at("x0").get<double>(),
                    j.at("deriv").get<std::vector<double>>());
}

}  // namespace modmet
