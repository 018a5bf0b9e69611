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

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"

namespace pqcrad::kernels {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(PQCRAD_BUILD_AVX2)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

const KernelTable *initial_table() noexcept {
    const char *env = std::getenv("PQCRAD_KERNEL");
    if (env != nullptr && std::string_view(env) == "scalar") {
        return &scalar_table();
    }
    if (const KernelTable *t = avx2_table()) {
        return t;
    }
    return &scalar_table();
}

std::atomic<const KernelTable *> &current() noexcept {
    static std::atomic<const KernelTable *> table{initial_table()};
    return table;
}

} // namespace

const KernelTable *avx2_table() noexcept {
#if defined(PQCRAD_BUILD_AVX2)
    if (cpu_has_avx2()) {
        return &avx2_table_unchecked();
    }
#endif
    return nullptr;
}

const KernelTable &active() noexcept { return *current().load(std::memory_order_acquire); }

bool select(Isa isa) noexcept {
    const KernelTable *t = isa == Isa::kScalar ? &scalar_table() : avx2_table();
    if (t == nullptr) {
        return false;
    }
    current().store(t, std::memory_order_release);
    return true;
}

} // namespace pqcrad::kernels
