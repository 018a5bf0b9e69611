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

#include <cstddef>
#include <functional>

namespace pqcrad {

/// Fixed-size worker pool handle passed to every parallel routine.
///
/// parallel_for hands out task indices in [0, count) dynamically; `worker` is
/// in [0, threads()) and identifies the calling thread so callers can keep
/// worker-local scratch. Results must not depend on which worker ran a task.
class Executor {
  public:
    /// threads == 0 means std::thread::hardware_concurrency().
    explicit Executor(std::size_t threads = 1);

    [[nodiscard]] std::size_t threads() const noexcept { return threads_; }

    /// Blocks until every task has run. The first exception thrown by a task
    /// is rethrown here after all workers stop.
    void parallel_for(std::size_t count,
                      const std::function<void(std::size_t task, std::size_t worker)> &fn) const;

  private:
    std::size_t threads_;
};

} // namespace pqcrad
