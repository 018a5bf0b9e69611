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

// Reference values computed by hand at 30 significant digits (mpmath) and
// rounded to 20.

#include <cstddef>

#include "pqcrad/bounds.hpp"

namespace refs {

using pqcrad::bounds::Domain;

struct RawCase {
    std::size_t L, M;
    Domain domain;
    double raw;
};

inline constexpr RawCase kRaw[] = {
    {1, 1, Domain::kFull, 400.91961577188296486},
    {5, 100, Domain::kFull, 448.24175718951356388},
    {9, 400, Domain::kFull, 541.24148129204200256},
    {16, 25, Domain::kFull, 5131.7710818801019502},
    {4, 1000000, Domain::kFull, 3.2073569261750637189},
    {1, 1, Domain::kRestricted, 400.91961577188296486},
    {5, 100, Domain::kRestricted, 200.45980788594148243},
    {12, 800, Domain::kRestricted, 170.09578741380213324},
};

struct LipschitzCase {
    std::size_t L;
    double value;
};

inline constexpr LipschitzCase kLipschitz[] = {
    {1, 2.0}, {4, 4.0}, {7, 5.291502622129181181}, {20, 8.9442719099991587856}};

struct LinearCase {
    double D, B;
    std::size_t M, p;
    double value;
};

inline constexpr LinearCase kLinear[] = {
    {1, 1, 100, 10, 0.1},
    {10, 1, 100, 10, 1.0},
    {10, 10, 400, 10, 5.0},
    {2.5, 3.5, 7, 3, 3.3071891388307382381},
};

struct GapCase {
    double R;
    std::size_t M;
    double delta, value;
};

inline constexpr GapCase kGap[] = {
    {0.1, 100, 0.05, 0.32238734153404083729},
    {0.0, 25, 0.01, 0.30348542587702926949},
    {1.0, 1, 0.5, 2.5887050112577373455},
    {0.03, 800, 0.001, 0.12570652212196164741},
};

} // namespace refs
