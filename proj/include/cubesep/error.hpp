// Copyright 2026 The cubesep Authors
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

#ifndef CUBESEP_ERROR_HPP_
#define CUBESEP_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace cubesep {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An exact or dense routine was asked to run beyond its size budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace cubesep

#endif  // CUBESEP_ERROR_HPP_
