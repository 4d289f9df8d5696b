/*
   Copyright 2026 The weyldim Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef WEYLDIM_ERROR_HPP
#define WEYLDIM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace weyldim {

// Exit/status codes shared by the C API and the command-line tool.
enum class Status : int {
  ok = 0,
  input_error = 1,
  verification_failure = 2,
  not_converged = 3,
  internal_error = 4,
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual Status status() const noexcept { return Status::internal_error; }
};

// Malformed or inconsistent input: dimension mismatches, bad indices, parse
// failures.
class InputError : public Error {
 public:
  using Error::Error;
  Status status() const noexcept override { return Status::input_error; }
};

// A query that is undefined on the zero element (leaders, rho, orders).
class ZeroElementError : public InputError {
 public:
  using InputError::InputError;
};

// The engine disagreed with an independent check.
class VerificationError : public Error {
 public:
  using Error::Error;
  Status status() const noexcept override {
    return Status::verification_failure;
  }
};

// Threshold search or oracle stabilization gave up.
class ConvergenceError : public Error {
 public:
  using Error::Error;
  Status status() const noexcept override { return Status::not_converged; }
};

}  // namespace weyldim

#endif  // WEYLDIM_ERROR_HPP
