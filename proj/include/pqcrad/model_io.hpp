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

#include <filesystem>
#include <string>
#include <string_view>

#include "pqcrad/simulator.hpp"

namespace pqcrad {

/// Text form of a circuit model:
///
///   # comment
///   n_qubits = 5
///   observable = ZIIII
///   encoding = ry-product
///   generators = XYZII, IZZXI, YIIIX
///
/// Keys may appear in any order; `generators` may be empty (L = 0) and may be
/// repeated, in which case the lists are concatenated in file order.
[[nodiscard]] CircuitModel parse_model(std::string_view text);
[[nodiscard]] std::string format_model(const CircuitModel &model);

[[nodiscard]] CircuitModel load_model(const std::filesystem::path &path);
void save_model(const CircuitModel &model, const std::filesystem::path &path);

} // namespace pqcrad
