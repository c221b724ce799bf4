// Copyright 2026 The rifslab authors
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

#ifndef RIFS_ERRORS_HPP_
#define RIFS_ERRORS_HPP_

#include <stdexcept>

namespace rifs {

// Invalid or inconsistent experiment configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A solver precondition does not hold for the supplied distribution.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exact enumeration would exceed the word budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was invoked on a system outside its supported mode,
// e.g. an equicontractive-only routine on a mixed-ratio tuple.
class ModeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A word indexes a map that its realization level does not have.
class WordMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace rifs

#endif  // RIFS_ERRORS_HPP_
