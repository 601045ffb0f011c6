// Copyright 2026 The swapbudget Authors
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
#include <utility>

namespace swapbudget {

/// Raised when an argument violates a documented precondition or type invariant.
class InvalidArgument : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A noisy pulse draw produced a non-positive duration too many times in a row.
class RejectedSampleError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Problem found while reading a spec document. `field()` is a dotted path such as
/// "technology.laser.sigma_a" (empty when the error is not tied to a field).
class SpecError : public std::runtime_error {
   public:
    enum class Kind { parse, missing_field, unknown_field, invariant, duplicate };

    SpecError(Kind kind, std::string field, const std::string &what)
        : std::runtime_error(field.empty() ? what : field + ": " + what), kind_(kind), field_(std::move(field)) {
    }

    Kind kind() const noexcept {
        return kind_;
    }
    const std::string &field() const noexcept {
        return field_;
    }

   private:
    Kind kind_;
    std::string field_;
};

}  // namespace swapbudget
