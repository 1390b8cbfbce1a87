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

#include "rsg/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace rsg {

Matrix make_matrix(const SkewContext& ctx, std::size_t rows, std::size_t cols) {
    return Matrix{rows, cols, std::vector<FieldElement>(rows * cols, ctx.zero())};
}

Matrix identity_matrix(const SkewContext& ctx, std::size_t n) {
    Matrix m = make_matrix(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ctx.one();
    return m;
}

std::size_t rank(const SkewContext& ctx, Matrix m) {
    std::size_t rk = 0;
    for (std::size_t col = 0; col < m.cols && rk < m.rows; ++col) {
        std::size_t pivot = rk;
        while (pivot < m.rows && is_zero(m.at(pivot, col))) ++pivot;
        if (pivot == m.rows) continue;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(rk, j), m.at(pivot, j));
        const FieldElement pinv = ctx.inv(m.at(rk, col));
        for (std::size_t j = col; j < m.cols; ++j) m.at(rk, j) = ctx.mul(pinv, m.at(rk, j));
        for (std::size_t i = rk + 1; i < m.rows; ++i) {
            if (is_zero(m.at(i, col))) continue;
            const FieldElement f = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) = ctx.sub(m.at(i, j), ctx.mul(f, m.at(rk, j)));
        }
        ++rk;
    }
    return rk;
}

std::optional<Matrix> inverse(const SkewContext& ctx, const Matrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows;
    Matrix a = m;
    Matrix inv = identity_matrix(ctx, n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && is_zero(a.at(pivot, col))) ++pivot;
        if (pivot == n) return std::nullopt;
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(a.at(col, j), a.at(pivot, j));
            std::swap(inv.at(col, j), inv.at(pivot, j));
        }
        const FieldElement pinv = ctx.inv(a.at(col, col));
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) = ctx.mul(pinv, a.at(col, j));
            inv.at(col, j) = ctx.mul(pinv, inv.at(col, j));
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || is_zero(a.at(i, col))) continue;
            const FieldElement f = a.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) = ctx.sub(a.at(i, j), ctx.mul(f, a.at(col, j)));
                inv.at(i, j) = ctx.sub(inv.at(i, j), ctx.mul(f, inv.at(col, j)));
            }
        }
    }
    return inv;
}

Matrix matmul(const SkewContext& ctx, const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matmul shape mismatch");
    Matrix out = make_matrix(ctx, a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (is_zero(a.at(i, k))) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                out.at(i, j) = ctx.add(out.at(i, j), ctx.mul(a.at(i, k), b.at(k, j)));
        }
    return out;
}

std::vector<FieldElement> row_times(const SkewContext& ctx, const std::vector<FieldElement>& row,
                                    const Matrix& m) {
    if (row.size() != m.rows) throw std::invalid_argument("row length mismatch");
    std::vector<FieldElement> out(m.cols, ctx.zero());
    for (std::size_t k = 0; k < m.rows; ++k) {
        if (is_zero(row[k])) continue;
        for (std::size_t j = 0; j < m.cols; ++j)
            out[j] = ctx.add(out[j], ctx.mul(row[k], m.at(k, j)));
    }
    return out;
}

}  // namespace rsg
