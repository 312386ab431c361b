// Copyright 2026 The vecq Authors
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

namespace vecq {

/** A Choi matrix with an eigenvalue below the CP tolerance. */
class NotCompletelyPositive : public std::runtime_error {
 public:
  NotCompletelyPositive(const std::string& message, double min_eigenvalue)
      : std::runtime_error(message), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

/** Base for linear inversions refused because of the condition number. */
class IllConditioned : public std::runtime_error {
 public:
  IllConditioned(const std::string& message, double condition_number)
      : std::runtime_error(message), condition_number_(condition_number) {}
  double condition_number() const { return condition_number_; }

 private:
  double condition_number_;
};

/** Input-state or measurement family that does not span operator space. */
class IllConditionedSet : public IllConditioned {
 public:
  using IllConditioned::IllConditioned;
};

/** Joint ancilla input whose reshuffled matrix cannot be inverted. */
class IllConditionedAncillaState : public IllConditioned {
 public:
  using IllConditioned::IllConditioned;
};

}  // namespace vecq
