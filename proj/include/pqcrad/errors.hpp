// Copyright 2026 The pqcrad Authors
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

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace pqcrad {

/// A statistic was requested on too few points.
class InsufficientData : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// An exact oracle was asked for a size it cannot enumerate.
class OracleSizeError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// A run would exceed the configured number of f-evaluations.
class BudgetExceeded : public std::runtime_error {
  public:
    BudgetExceeded(double requested, double budget)
        : std::runtime_error("evaluation budget exceeded: run needs " + format(requested) +
                             " f-evaluations, budget is " + format(budget) +
                             " (raise it with --eval-budget)"),
          requested_(requested), budget_(budget) {}

    [[nodiscard]] double requested() const noexcept { return requested_; }
    [[nodiscard]] double budget() const noexcept { return budget_; }

  private:
    static std::string format(double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6g", v);
        return buf;
    }

    double requested_;
    double budget_;
};

} // namespace pqcrad
