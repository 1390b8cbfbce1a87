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

#include "rsg/error_channel.hpp"

#include <random>
#include <stdexcept>

#include "rsg/linalg.hpp"

namespace rsg {

namespace {

constexpr int kMaxAttempts = 10000;

std::size_t coords_rank(const SkewContext& ctx, const std::vector<FieldElement>& values) {
    Matrix m = make_matrix(ctx, values.size(), ctx.r());
    for (std::size_t j = 0; j < values.size(); ++j) {
        auto row = ctx.coords_over_F(values[j]);
        for (std::uint32_t l = 0; l < ctx.r(); ++l) m.at(j, l) = row[l];
    }
    return rank(ctx, m);
}

}  // namespace

BlockVector sample_error(const RsgParams& params, const ErrorProfile& profile) {
    const SkewContext& ctx = params.context();
    if (profile.weights.size() != params.s())
        throw std::invalid_argument("profile must give one weight per block");
    for (std::size_t i = 0; i < profile.weights.size(); ++i)
        if (profile.weights[i] > params.block_size(i) || profile.weights[i] > ctx.r())
            throw std::invalid_argument("block weight exceeds min(n_i, r)");

    std::mt19937_64 rng(profile.seed);
    BlockVector out;
    out.blocks.resize(params.s());
    for (std::size_t i = 0; i < params.s(); ++i) {
        const std::size_t ni = params.block_size(i);
        const std::size_t wi = profile.weights[i];
        if (wi == 0) {
            out.blocks[i].assign(ni, ctx.zero());
            continue;
        }
        // independent spanning values, then entries as random F-combinations
        std::vector<FieldElement> basis(wi, ctx.zero());
        for (int attempt = 0;; ++attempt) {
            if (attempt >= kMaxAttempts)
                throw std::runtime_error("failed to draw an independent error basis");
            for (auto& b : basis) b = ctx.random_element(rng, profile.degree_bound);
            if (coords_rank(ctx, basis) == wi) break;
        }
        std::vector<FieldElement> entries(ni, ctx.zero());
        for (int attempt = 0;; ++attempt) {
            if (attempt >= kMaxAttempts)
                throw std::runtime_error("failed to reach the requested error weight");
            for (auto& entry : entries) {
                entry = ctx.zero();
                for (const auto& b : basis) {
                    FieldElement f = ctx.random_subfield_element(rng, profile.degree_bound);
                    entry = ctx.add(entry, ctx.mul(f, b));
                }
            }
            if (coords_rank(ctx, entries) == wi) break;
        }
        out.blocks[i] = std::move(entries);
    }
    return out;
}

}  // namespace rsg
