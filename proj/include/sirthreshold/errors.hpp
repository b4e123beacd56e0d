// Copyright 2026 The sirthreshold Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace sirthreshold {

// Base for every error that signals bad caller input rather than a failure of
// the numerics. The CLI maps these to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the domain of a special function.
class DomainError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidArgument : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// S(0) = 0 or I(0) = 0, or a state that does not sum to the population.
class InvalidInitialCondition : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Threshold M outside (I(0), S(0) + I(0)) or outside (0, N).
class InvalidThreshold : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// R0 < N / S(0): the closed-form peak is only an upper bound there.
class RegimeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidRange : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace sirthreshold
