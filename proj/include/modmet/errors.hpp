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

#include <stdexcept>
#include <string>

namespace modmet {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A bracketing search ran past its lambda cap without the predicate holding.
struct CapExceeded : Error {
  using Error::Error;
};

/// A gauge function failed its superadditivity / positivity spot check.
struct InvalidGauge : Error {
  using Error::Error;
};

/// An operation that needs sample points or lambdas received none.
struct EmptySample : Error {
  using Error::Error;
};

/// Two grid functions do not share (a, b, N, anchor) and cannot be combined.
struct IncompatibleGrids : Error {
  using Error::Error;
};

/// A finite modular value was required but the evaluation was infinite.
struct InfiniteModular : Error {
  using Error::Error;
};

/// The seed of a fixed-point iteration has an infinite initial gap.
struct InfiniteSeed : Error {
  using Error::Error;
};

/// A fixed-point iteration produced an infinite gap after a finite start.
struct InfiniteGap : Error {
  using Error::Error;
};

/// The right-hand side of an initial value problem evaluated non-finite.
struct NonFiniteRhs : Error {
  using Error::Error;
};

/// The declared Lipschitz constant of a right-hand side failed a spot check.
struct LipschitzCheckFailed : Error {
  using Error::Error;
};

/// A segment of a segmented solve did not converge; message names the segment.
struct SegmentSolveError : Error {
  using Error::Error;
};

}  // namespace modmet
