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
#include <string>
#include <vector>

namespace pqcrad {

struct SelftestCheck {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail; // worst observed deviation or the failing value
};

struct SelftestReport {
    std::vector<SelftestCheck> checks;

    [[nodiscard]] bool passed() const noexcept;
    [[nodiscard]] std::string str() const;
};

/// Built-in oracle suites: dense-matrix, gradient, exact-sigma, regression,
/// kernel variants and the moment route. Small enough to finish in seconds.
[[nodiscard]] SelftestReport run_selftest(std::uint64_t seed);

} // namespace pqcrad
