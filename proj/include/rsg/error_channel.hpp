/*
   Copyright 2026 The RSG Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <vector>

#include "rsg/rsg_code.hpp"

namespace rsg {

/// Target rank-Hamming weight per block, plus the seed making the draw
/// reproducible. degree_bound limits numerator/denominator degrees of
/// random rational functions (derivation setting only).
struct ErrorProfile {
    std::vector<std::size_t> weights;
    std::uint64_t seed = 0;
    std::uint32_t degree_bound = 3;
};

/// Error vector of exact rank-Hamming weight sum(weights): block i spans an
/// F-subspace of dimension exactly weights[i]. Deterministic for a fixed
/// seed. Requires weights[i] <= min(n_i, r).
BlockVector sample_error(const RsgParams& params, const ErrorProfile& profile);

}  // namespace rsg
