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

#include "pqcrad/executor.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pqcrad {

Executor::Executor(std::size_t threads) : threads_(threads) {
    if (threads_ == 0) {
        threads_ = std::max(1U, std::thread::hardware_concurrency());
    }
}

void Executor::parallel_for(std::size_t count,
                            const std::function<void(std::size_t, std::size_t)> &fn) const {
    if (count == 0) {
        return;
    }
    const std::size_t workers = std::min(threads_, count);
    if (workers == 1) {
        for (std::size_t t = 0; t < count; ++t) {
            fn(t, 0);
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto body = [&](std::size_t worker) {
        for (;;) {
            if (failed.load(std::memory_order_relaxed)) {
                return;
            }
            const std::size_t t = next.fetch_add(1, std::memory_order_relaxed);
            if (t >= count) {
                return;
            }
            try {
                fn(t, worker);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };

    {
        std::vector<std::jthread> pool;
        pool.reserve(workers - 1);
        for (std::size_t w = 1; w < workers; ++w) {
            pool.emplace_back(body, w);
        }
        body(0);
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

} // namespace pqcrad
