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

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsg/linalg.hpp"
#include "rsg/ore_poly.hpp"
#include "rsg/skew_context.hpp"

namespace rsg {

/// Element of K^{n_1} x ... x K^{n_s} with block structure; carries
/// codewords, errors and received words.
struct BlockVector {
    std::vector<std::vector<FieldElement>> blocks;

    std::vector<FieldElement> flatten() const;
    std::size_t total_size() const;

    friend bool operator==(const BlockVector&, const BlockVector&) = default;
};

BlockVector bv_add(const SkewContext& ctx, const BlockVector& a, const BlockVector& b);
BlockVector bv_sub(const SkewContext& ctx, const BlockVector& a, const BlockVector& b);

class InvalidParams : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Code parameters: dimension k, evaluation classes c = (c_1..c_s) and
/// block supports g = (g_{i,j}), j < n_i, with n = sum n_i. Immutable after
/// construction; the validation verdict, the annihilator L and the inverse
/// of the full generator matrix are computed once on first use and shared
/// by copies, so concurrent decodes over one params value are safe.
class RsgParams {
   public:
    RsgParams(SkewContext ctx, std::uint32_t k, std::vector<FieldElement> c,
              std::vector<std::vector<FieldElement>> g);

    const SkewContext& context() const { return ctx_; }
    std::uint32_t k() const { return k_; }
    std::size_t s() const { return g_.size(); }
    std::size_t block_size(std::size_t i) const { return g_[i].size(); }
    std::size_t n() const;
    const std::vector<FieldElement>& c() const { return c_; }
    const std::vector<std::vector<FieldElement>>& g() const { return g_; }

    /// All violated parameter conditions (empty when the params define a
    /// valid code): goodness of each c_i, pairwise nonequivalence,
    /// F-linear independence of each g_i, block sizes within [1, r],
    /// 1 <= k <= n, and the annihilator-degree cross-check deg L = n.
    const std::vector<std::string>& validate() const;
    void ensure_valid() const;  // throws InvalidParams listing all issues

    /// a_{i,j} = (partial + c_i theta)(g_{i,j}) / g_{i,j}, per block.
    std::vector<std::vector<FieldElement>> eval_points() const;

    /// Monic L = lclm over all X - a_{i,j} (iterated in input order),
    /// cached; deg L = n for valid params.
    const OrePoly& annihilator() const;

    /// rows x n matrix with entry (l, (i,j)) = ev_{c_i}(X^l)(g_{i,j}),
    /// built by iterating u_i = partial + c_i theta on each column.
    Matrix generator_matrix(std::size_t rows) const;

    /// Inverse of generator_matrix(n), cached (gamma_{n,c,g} is bijective).
    const Matrix& interpolation_inverse() const;

   private:
    const OrePoly& annihilator_unchecked() const;
    std::vector<std::vector<FieldElement>> eval_points_unchecked() const;
    Matrix generator_matrix_unchecked(std::size_t rows) const;

    SkewContext ctx_;
    std::uint32_t k_ = 0;
    std::vector<FieldElement> c_;
    std::vector<std::vector<FieldElement>> g_;

    struct Cache;
    std::shared_ptr<Cache> cache_;
};

/// Unique-decoding radius w = floor((n - k) / 2), so that 2w <= d - 1.
std::size_t decoding_radius(const RsgParams& params);

/// gamma_{k,c,g}(P) for P = sum message[l] X^l, computed entrywise by the
/// evaluation morphisms. message must have length exactly k.
BlockVector encode(const RsgParams& params, const std::vector<FieldElement>& message);
/// Same, from a polynomial of degree < k.
BlockVector encode_poly(const RsgParams& params, const OrePoly& p);

/// Sum over blocks of the F-dimension of the span of the block's entries.
std::size_t rank_hamming_weight(const RsgParams& params, const BlockVector& x);
std::size_t rank_hamming_distance(const RsgParams& params, const BlockVector& x,
                                  const BlockVector& y);

/// The unique P of degree < n with gamma_{n,c,g}(P) = m.
OrePoly interpolate(const RsgParams& params, const BlockVector& m);

enum class DecodeFailure { none, radius_exceeded, inconsistent };

struct DecodeResult {
    bool ok = false;
    OrePoly message;        // degree < k, set on success
    BlockVector corrected;  // encode(message), set on success
    std::size_t error_weight = 0;
    DecodeFailure failure = DecodeFailure::none;
    std::string detail;
};

/// Intermediate values of the decoding pipeline, for inspection in tests.
struct DecodeTrace {
    OrePoly p_tilde, r, u, v;
};

/// Gao-style pipeline: interpolate m, run the partial extended Euclid of
/// (P_tilde, L) to stop degree w + k, left-divide R by U, then accept Q only
/// if the division is exact, deg Q < k, and re-encoding lands within
/// distance w of m. When the remainder sequence hits zero before dropping
/// below the stop degree, the key equation continues with the zero row (the
/// codeword closest to m is then the zero word). Returns a typed failure
/// otherwise; never throws on a well-shaped received word.
DecodeResult decode(const RsgParams& params, const BlockVector& m, DecodeTrace* trace = nullptr);

}  // namespace rsg
