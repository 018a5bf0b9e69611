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
#include <initializer_list>

namespace pqcrad {

/// Splittable pseudo-random stream.
///
/// Values come from SplitMix64 (Steele, Lea and Flood, "Fast splittable
/// pseudorandom number generators", OOPSLA 2014): the state advances by the
/// golden-ratio increment and each output is the MurmurHash3-style finalizer
/// of the new state. A substream is a fresh SplitMix64 whose state is the
/// finalizer applied to (parent state XOR finalized key), so substreams depend
/// only on the parent seed and the key path, never on how many values other
/// streams have consumed. This is what makes estimator runs independent of
/// the worker count.
///
/// Conversions to doubles and signs are defined here rather than through
/// <random> distributions, whose output is implementation-defined.
class Stream {
  public:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

    constexpr explicit Stream(std::uint64_t seed) noexcept : state_(seed) {}

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    constexpr std::uint64_t next() noexcept {
        state_ += kGolden;
        return mix(state_);
    }

    /// Uniform on [0, 1) with 53 random bits.
    constexpr double uniform() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    constexpr double uniform(double lo, double hi) noexcept {
        return lo + (hi - lo) * uniform();
    }

    /// +1 or -1 with probability 1/2 each.
    constexpr double sign() noexcept {
        return (next() >> 63) != 0 ? -1.0 : 1.0;
    }

    /// Uniform integer in [0, bound) by rejection (bound > 0).
    constexpr std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t v = next();
        while (v >= limit) {
            v = next();
        }
        return v % bound;
    }

    [[nodiscard]] constexpr Stream substream(std::uint64_t key) const noexcept {
        return Stream(mix(state_ ^ mix(key + kGolden)));
    }

    [[nodiscard]] constexpr Stream substream(std::initializer_list<std::uint64_t> path) const noexcept {
        Stream s = *this;
        for (std::uint64_t k : path) {
            s = s.substream(k);
        }
        return s;
    }

    [[nodiscard]] constexpr std::uint64_t state() const noexcept { return state_; }

  private:
    std::uint64_t state_;
};

/// Stable tags for the top-level substreams carved out of an experiment seed.
namespace stream_tag {
inline constexpr std::uint64_t kModel = 0x6d6f64656cULL;     // "model"
inline constexpr std::uint64_t kTrial = 0x747269616cULL;     // "trial"
inline constexpr std::uint64_t kTheta = 0x7468657461ULL;     // "theta"
inline constexpr std::uint64_t kSigma = 0x7369676d61ULL;     // "sigma"
inline constexpr std::uint64_t kData = 0x64617461ULL;        // "data"
inline constexpr std::uint64_t kTeacher = 0x7465616368ULL;   // "teach"
inline constexpr std::uint64_t kStudent = 0x7374756465ULL;   // "stude"
inline constexpr std::uint64_t kSpsa = 0x73707361ULL;        // "spsa"
inline constexpr std::uint64_t kTest = 0x74657374ULL;        // "test"
} // namespace stream_tag

} // namespace pqcrad
