// Copyright 2026 The CARL Authors.
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

#ifndef CARL_ERRORS_H_
#define CARL_ERRORS_H_

#include <stdexcept>
#include <string>

namespace carl {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value violates a documented precondition or type invariant.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// |omega0 - omega2| is below the far-off-resonance floor.
class DegenerateDetuningError : public InvalidInputError {
 public:
  using InvalidInputError::InvalidInputError;
};

// The step-doubling monitor rejected a fixed RK4 step.
class IntegrationError : public Error {
 public:
  IntegrationError(const std::string& what, double tau, double local_error)
      : Error(what), tau_(tau), local_error_(local_error) {}

  double tau() const { return tau_; }
  double local_error() const { return local_error_; }

 private:
  double tau_;
  double local_error_;
};

}  // namespace carl

#endif  // CARL_ERRORS_H_
