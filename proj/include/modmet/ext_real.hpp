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

#include <compare>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace modmet {

/// A value in [0, +inf] under the total order of the extended half line.
///
/// Infinity is the genuine IEEE infinity, kept distinct from every finite
/// value; it is never approximated by a large float. Addition saturates
/// (inf + x = inf) and scaling by a positive finite factor preserves
/// infinity. Subtraction is deliberately absent: differences of extended
/// values are meaningless here and would invite inf - inf.
class ExtReal {
 public:
  constexpr ExtReal() noexcept = default;

  /// Checked construction; rejects NaN and negatives. +inf is allowed.
  ExtReal(double v) : v_(v) {
    if (!(v >= 0.0)) {
      throw std::invalid_argument("ExtReal: value must lie in [0, +inf]");
    }
  }

  static constexpr ExtReal infinity() noexcept {
    return ExtReal(kInf, Unchecked{});
  }

  [[nodiscard]] constexpr bool is_infinite() const noexcept {
    return v_ == kInf;
  }
  [[nodiscard]] constexpr bool is_finite() const noexcept {
    return v_ != kInf;
  }

  /// Underlying double; +inf when infinite.
  [[nodiscard]] constexpr double value() const noexcept { return v_; }

  friend constexpr ExtReal operator+(ExtReal a, ExtReal b) noexcept {
    return ExtReal(a.v_ + b.v_, Unchecked{});
  }
  ExtReal& operator+=(ExtReal o) noexcept {
    v_ += o.v_;
    return *this;
  }

  /// Multiply by a positive finite scalar. Overflow saturates to infinity.
  [[nodiscard]] ExtReal scaled_by(double s) const {
    require_positive_finite(s);
    return ExtReal(s * v_, Unchecked{});
  }

  /// Divide by a positive finite scalar.
  [[nodiscard]] ExtReal divided_by(double s) const {
    require_positive_finite(s);
    return ExtReal(v_ / s, Unchecked{});
  }

  friend constexpr auto operator<=>(ExtReal a, ExtReal b) noexcept {
    return a.v_ <=> b.v_;
  }
  friend constexpr bool operator==(ExtReal a, ExtReal b) noexcept = default;

  friend std::ostream& operator<<(std::ostream& os, ExtReal v) {
    if (v.is_infinite()) return os << "inf";
    return os << v.v_;
  }

 private:
  struct Unchecked {};
  constexpr ExtReal(double v, Unchecked) noexcept : v_(v) {}

  static void require_positive_finite(double s) {
    if (!(s > 0.0) || s == kInf) {
      throw std::invalid_argument("ExtReal: scalar must be positive finite");
    }
  }

  static constexpr double kInf = std::numeric_limits<double>::infinity();
  double v_ = 0.0;
};

/// lhs <= rhs up to an absolute and a relative slack on the finite branch.
/// An infinite rhs dominates everything; an infinite lhs only an infinite rhs.
inline bool le_with_slack(ExtReal lhs, ExtReal rhs, double abs_slack,
                          double rel_slack = 0.0) {
  if (rhs.is_infinite()) return true;
  if (lhs.is_infinite()) return false;
  return lhs.value() <= rhs.value() + abs_slack + rel_slack * rhs.value();
}

}  // namespace modmet
