// Copyright 2026 The gpauli Authors
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

#ifndef GPAULI_ERRORS_HPP
#define GPAULI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gpauli {

/// Malformed input: wrong shapes, broken structural constraints, bad indices.
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// The operator has no Balian-Brezin form (singular or ill-conditioned T22),
/// or a matrix that must be inverted is singular.
class DecompositionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An eigenvalue sits on (or too close to) the branch cut of the principal
/// logarithm, so the sign of a square-root prefactor is ambiguous.
class BranchError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Non-finite result, e.g. matrix_exp overflow.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A size guard (dense oracle memory, enumeration size) was exceeded.
class GuardError : public std::length_error {
  public:
    using std::length_error::length_error;
};

}  // namespace gpauli

#endif
