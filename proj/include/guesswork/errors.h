// Copyright 2026 The Guesswork Authors
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

#ifndef GUESSWORK_ERRORS_H
#define GUESSWORK_ERRORS_H

#include <stdexcept>
#include <string>

namespace guesswork {

/// Input that violates a documented precondition (bad sizes, invalid states,
/// unbalanced costs). The CLI maps these to exit code 2.
class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class DimensionError : public InputError {
   public:
    using InputError::InputError;
};

class NotBalancedError : public InputError {
   public:
    using InputError::InputError;
};

/// An exhaustive enumeration was requested over more numberings than the
/// configured factorial cap allows.
class CapExceededError : public InputError {
   public:
    using InputError::InputError;
};

/// No solver path applies (no benevolent structure and the instance is too
/// large for brute force).
class SolverUnavailableError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A numerical self-check failed (two algebraically equal routes disagree).
class NumericalError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace guesswork

#endif
