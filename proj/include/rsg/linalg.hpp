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
#include <optional>
#include <vector>

#include "rsg/skew_context.hpp"

namespace rsg {

/// Dense row-major matrix over K. Exact Gaussian elimination serves rank,
/// inversion and multiplication; sizes here are desk scale.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<FieldElement> data;

    FieldElement& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const FieldElement& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix make_matrix(const SkewContext& ctx, std::size_t rows, std::size_t cols);
Matrix identity_matrix(const SkewContext& ctx, std::size_t n);

std::size_t rank(const SkewContext& ctx, Matrix m);
/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const SkewContext& ctx, const Matrix& m);

Matrix matmul(const SkewContext& ctx, const Matrix& a, const Matrix& b);
/// Row vector times matrix.
std::vector<FieldElement> row_times(const SkewContext& ctx, const std::vector<FieldElement>& row,
                                    const Matrix& m);

}  // namespace rsg
