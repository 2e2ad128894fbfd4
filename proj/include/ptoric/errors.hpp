// Copyright 2026 The ptoric Authors.
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

namespace ptoric {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad polytope, bad field size, bad index selection.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Fixed-width integer arithmetic would have wrapped.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

// Simplicity (every vertex on exactly N facets) or the determinant/characteristic
// coprimality condition fails.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// Raised when a requested search exceeds its budget. Refusal, never a wrong answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace ptoric
