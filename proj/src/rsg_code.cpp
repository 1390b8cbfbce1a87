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

#include "rsg/rsg_code.hpp"

#include <sstream>

namespace rsg {

std::vector<FieldElement> BlockVector::flatten() const {
    std::vector<FieldElement> out;
    out.reserve(total_size());
    for (const auto& block : blocks) out.insert(out.end(), block.begin(), block.end());
    return out;
}

std::size_t BlockVector::total_size() const {
    std::size_t n = 0;
    for (const auto& block : blocks) n += block.size();
    return n;
}

namespace {

void check_same_shape(const BlockVector& a, const BlockVector& b) {
    if (a.blocks.size() != b.blocks.size()) throw std::invalid_argument("block shape mismatch");
    for (std::size_t i = 0; i < a.blocks.size(); ++i)
        if (a.blocks[i].size() != b.blocks[i].size())
            throw std::invalid_argument("block shape mismatch");
}

void check_shape(const RsgParams& params, const BlockVector& x) {
    if (x.blocks.size() != params.s())
        throw std::invalid_argument("block vector shape does not match params");
    for (std::size_t i = 0; i < x.blocks.size(); ++i)
        if (x.blocks[i].size() != params.block_size(i))
            throw std::invalid_argument("block vector shape does not match params");
}

BlockVector bv_zip(const SkewContext& ctx, const BlockVector& a, const BlockVector& b, bool add) {
    check_same_shape(a, b);
    BlockVector out;
    out.blocks.resize(a.blocks.size());
    for (std::size_t i = 0; i < a.blocks.size(); ++i) {
        out.blocks[i].reserve(a.blocks[i].size());
        for (std::size_t j = 0; j < a.blocks[i].size(); ++j)
            out.blocks[i].push_back(add ? ctx.add(a.blocks[i][j], b.blocks[i][j])
                                        : ctx.sub(a.blocks[i][j], b.blocks[i][j]));
    }
    return out;
}

}  // namespace

BlockVector bv_add(const SkewContext& ctx, const BlockVector& a, const BlockVector& b) {
    return bv_zip(ctx, a, b, true);
}

BlockVector bv_sub(const SkewContext& ctx, const BlockVector& a, const BlockVector& b) {
    return bv_zip(ctx, a, b, false);
}

struct RsgParams::Cache {
    std::once_flag validate_once, ann_once, inv_once;
    std::vector<std::string> issues;
    std::optional<OrePoly> ann;
    std::string ann_error;
    std::optional<Matrix> ginv;
    std::string ginv_error;
};

RsgParams::RsgParams(SkewContext ctx, std::uint32_t k, std::vector<FieldElement> c,
                     std::vector<std::vector<FieldElement>> g)
    : ctx_(std::move(ctx)),
      k_(k),
      c_(std::move(c)),
      g_(std::move(g)),
      cache_(std::make_shared<Cache>()) {}

std::size_t RsgParams::n() const {
    std::size_t total = 0;
    for (const auto& block : g_) total += block.size();
    return total;
}

const std::vector<std::string>& RsgParams::validate() const {
    std::call_once(cache_->validate_once, [this] {
        std::vector<std::string>& issues = cache_->issues;
        auto issue = [&issues](const std::string& text) { issues.push_back(text); };

        if (c_.size() != g_.size()) issue("c and g must have the same number of blocks");
        if (g_.empty()) issue("at least one block is required");

        std::vector<bool> good(c_.size(), false);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            good[i] = ctx_.is_good(c_[i]);
            if (!good[i])
                issue("c[" + std::to_string(i) + "] is not an admissible evaluation point");
        }
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = i + 1; j < c_.size(); ++j)
                if (good[i] && good[j] && ctx_.equivalent(c_[i], c_[j]))
                    issue("c[" + std::to_string(i) + "] and c[" + std::to_string(j) +
                          "] are equivalent");

        for (std::size_t i = 0; i < g_.size(); ++i) {
            const auto& block = g_[i];
            if (block.empty()) {
                issue("g[" + std::to_string(i) + "] is empty");
                continue;
            }
            if (block.size() > ctx_.r())
                issue("g[" + std::to_string(i) + "] has more than r elements");
            Matrix coords = make_matrix(ctx_, block.size(), ctx_.r());
            for (std::size_t j = 0; j < block.size(); ++j) {
                auto row = ctx_.coords_over_F(block[j]);
                for (std::uint32_t l = 0; l < ctx_.r(); ++l) coords.at(j, l) = row[l];
            }
            if (rank(ctx_, coords) < block.size())
                issue("g[" + std::to_string(i) + "] is not F-linearly independent");
        }

        const std::size_t total = n();
        if (k_ < 1 || k_ > total)
            issue("k must satisfy 1 <= k <= n (k = " + std::to_string(k_) +
                  ", n = " + std::to_string(total) + ")");

        if (issues.empty()) {
            try {
                annihilator_unchecked();
            } catch (const std::exception& ex) {
                issue(ex.what());
            }
        }
    });
    return cache_->issues;
}

void RsgParams::ensure_valid() const {
    const auto& issues = validate();
    if (issues.empty()) return;
    std::ostringstream os;
    os << "invalid parameters: ";
    for (std::size_t i = 0; i < issues.size(); ++i) {
        if (i) os << "; ";
        os << issues[i];
    }
    throw InvalidParams(os.str());
}

std::vector<std::vector<FieldElement>> RsgParams::eval_points_unchecked() const {
    std::vector<std::vector<FieldElement>> points(g_.size());
    for (std::size_t i = 0; i < g_.size(); ++i) {
        points[i].reserve(g_[i].size());
        for (const FieldElement& gij : g_[i]) {
            FieldElement u = ctx_.add(ctx_.partial(gij), ctx_.mul(c_[i], ctx_.theta(gij)));
            points[i].push_back(ctx_.div(u, gij));
        }
    }
    return points;
}

std::vector<std::vector<FieldElement>> RsgParams::eval_points() const {
    ensure_valid();
    return eval_points_unchecked();
}

const OrePoly& RsgParams::annihilator_unchecked() const {
    std::call_once(cache_->ann_once, [this] {
        const auto points = eval_points_unchecked();
        OrePoly acc;
        for (const auto& block : points)
            for (const FieldElement& a : block) {
                OrePoly factor = ore_linear(ctx_, a);
                acc = acc.is_zero() ? factor : lclm(ctx_, acc, factor);
            }
        const std::size_t total = n();
        if (acc.degree() != static_cast<int>(total)) {
            cache_->ann_error = "annihilator degree is " + std::to_string(acc.degree()) +
                                ", expected n = " + std::to_string(total);
            return;
        }
        cache_->ann = std::move(acc);
    });
    if (!cache_->ann) throw InvalidParams(cache_->ann_error);
    return *cache_->ann;
}

const OrePoly& RsgParams::annihilator() const {
    ensure_valid();
    return annihilator_unchecked();
}

Matrix RsgParams::generator_matrix_unchecked(std::size_t rows) const {
    Matrix m = make_matrix(ctx_, rows, n());
    std::size_t col = 0;
    for (std::size_t i = 0; i < g_.size(); ++i) {
        for (const FieldElement& gij : g_[i]) {
            FieldElement v = gij;  // u_i^l(g_{i,j}), starting at l = 0
            for (std::size_t l = 0; l < rows; ++l) {
                m.at(l, col) = v;
                if (l + 1 < rows) v = ctx_.add(ctx_.partial(v), ctx_.mul(c_[i], ctx_.theta(v)));
            }
            ++col;
        }
    }
    return m;
}

Matrix RsgParams::generator_matrix(std::size_t rows) const {
    ensure_valid();
    if (rows < 1 || rows > n()) throw std::invalid_argument("rows must be in [1, n]");
    return generator_matrix_unchecked(rows);
}

const Matrix& RsgParams::interpolation_inverse() const {
    ensure_valid();
    std::call_once(cache_->inv_once, [this] {
        auto inv = inverse(ctx_, generator_matrix_unchecked(n()));
        if (!inv) {
            cache_->ginv_error = "full generator matrix is singular";
            return;
        }
        cache_->ginv = std::move(*inv);
    });
    if (!cache_->ginv) throw InvalidParams(cache_->ginv_error);
    return *cache_->ginv;
}

std::size_t decoding_radius(const RsgParams& params) {
    const std::size_t total = params.n();
    if (total < params.k()) return 0;
    return (total - params.k()) / 2;
}

BlockVector encode(const RsgParams& params, const std::vector<FieldElement>& message) {
    params.ensure_valid();
    if (message.size() != params.k()) throw std::invalid_argument("message must have length k");
    const SkewContext& ctx = params.context();
    OrePoly p{message};
    BlockVector out;
    out.blocks.resize(params.s());
    for (std::size_t i = 0; i < params.s(); ++i) {
        out.blocks[i].reserve(params.g()[i].size());
        for (const FieldElement& gij : params.g()[i])
            out.blocks[i].push_back(evaluate(ctx, params.c()[i], p, gij));
    }
    return out;
}

BlockVector encode_poly(const RsgParams& params, const OrePoly& p) {
    if (p.degree() >= static_cast<int>(params.k()))
        throw std::invalid_argument("message polynomial degree must be below k");
    std::vector<FieldElement> message = p.coeffs();
    message.resize(params.k(), params.context().zero());
    return encode(params, message);
}

std::size_t rank_hamming_weight(const RsgParams& params, const BlockVector& x) {
    check_shape(params, x);
    const SkewContext& ctx = params.context();
    std::size_t weight = 0;
    for (const auto& block : x.blocks) {
        if (block.empty()) continue;
        // rank over F equals rank over K for a matrix with entries in F
        Matrix coords = make_matrix(ctx, block.size(), ctx.r());
        for (std::size_t j = 0; j < block.size(); ++j) {
            auto row = ctx.coords_over_F(block[j]);
            for (std::uint32_t l = 0; l < ctx.r(); ++l) coords.at(j, l) = row[l];
        }
        weight += rank(ctx, coords);
    }
    return weight;
}

std::size_t rank_hamming_distance(const RsgParams& params, const BlockVector& x,
                                  const BlockVector& y) {
    return rank_hamming_weight(params, bv_sub(params.context(), x, y));
}

OrePoly interpolate(const RsgParams& params, const BlockVector& m) {
    params.ensure_valid();
    check_shape(params, m);
    auto coeffs = row_times(params.context(), m.flatten(), params.interpolation_inverse());
    return OrePoly{std::move(coeffs)};
}

DecodeResult decode(const RsgParams& params, const BlockVector& m, DecodeTrace* trace) {
    params.ensure_valid();
    check_shape(params, m);
    const SkewContext& ctx = params.context();
    const std::size_t k = params.k();
    const std::size_t w = decoding_radius(params);

    const OrePoly& ann = params.annihilator();
    OrePoly p_tilde = interpolate(params, m);

    OrePoly q, s, r, u, v;
    if (p_tilde.is_zero()) {
        // m is the zero word; the Euclid identity degenerates to 0 = 1*0 + 0*L.
        u = ore_constant(ctx, ctx.one());
    } else {
        std::vector<EuclidRow> steps;
        EuclidRow row = extended_right_euclid_partial(ctx, p_tilde, ann,
                                                      static_cast<int>(w + k), &steps);
        if (row.r.degree() >= static_cast<int>(w + k)) {
            // The remainder sequence reached zero before dropping below the
            // stop degree (so the returned row is the right GCD). The key
            // equation's remainder is then the zero row itself: R = 0 with
            // the zero row's cofactors, which decodes the zero message.
            row = steps.back();
        }
        r = std::move(row.r);
        u = std::move(row.u);
        v = std::move(row.v);
    }
    if (trace) *trace = DecodeTrace{p_tilde, r, u, v};

    auto fail = [](DecodeFailure kind, std::string detail) {
        DecodeResult res;
        res.failure = kind;
        res.detail = std::move(detail);
        return res;
    };

    if (u.degree() > static_cast<int>(w))
        return fail(DecodeFailure::radius_exceeded,
                    "error weight exceeds the decoding radius (cofactor degree " +
                        std::to_string(u.degree()) + " > w = " + std::to_string(w) + ")");
    if (u.is_zero()) return fail(DecodeFailure::inconsistent, "degenerate Euclidean output");

    std::tie(q, s) = left_divmod(ctx, r, u);
    if (!s.is_zero())
        return fail(DecodeFailure::inconsistent, "left division of R by U leaves a remainder");
    if (q.degree() >= static_cast<int>(k))
        return fail(DecodeFailure::inconsistent,
                    "candidate message degree " + std::to_string(q.degree()) +
                        " is not below k = " + std::to_string(k));

    BlockVector corrected = encode_poly(params, q);
    const std::size_t dist = rank_hamming_distance(params, corrected, m);
    if (dist > w)
        return fail(DecodeFailure::radius_exceeded,
                    "re-encoded word is at distance " + std::to_string(dist) +
                        " > w = " + std::to_string(w) + " from the received word");

    DecodeResult res;
    res.ok = true;
    res.message = std::move(q);
    res.corrected = std::move(corrected);
    res.error_weight = dist;
    return res;
}

}  // namespace rsg
