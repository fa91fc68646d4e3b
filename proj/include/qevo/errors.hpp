// Copyright 2026 The qevo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QEVO_ERRORS_HPP
#define QEVO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qevo {

// Base class for all qevo errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mismatched or unsupported dimensions (e.g. a 3x3 matrix fed to a 2x2-only
// operation, or strategy/matrix size disagreement).
struct DimensionError : Error {
  using Error::Error;
};

// A type invariant was violated (probabilities off the simplex, weights not
// normalized, a permutation that is not a bijection, ...). Inputs are
// rejected, never repaired.
struct ValidationError : Error {
  using Error::Error;
};

// A scalar argument is outside its admissible range (epsilon, dt, resolution).
struct DomainError : Error {
  using Error::Error;
};

}  // namespace qevo

#endif  // QEVO_ERRORS_HPP
