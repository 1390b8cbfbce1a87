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

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "rsg/linalg.hpp"
#include "rsg/ore_poly.hpp"
#include "rsg/rsg_code.hpp"
#include "rsg/skew_context.hpp"

namespace rsg {

/// Raised on any malformed input; path is a JSON-pointer-style locator of
/// the offending field ("/c/0/num").
class ParseError : public std::runtime_error {
   public:
    ParseError(std::string path, std::string reason)
        : std::runtime_error(path.empty() ? reason : path + ": " + reason),
          path_(std::move(path)),
          reason_(std::move(reason)) {}

    const std::string& path() const { return path_; }
    const std::string& reason() const { return reason_; }

   private:
    std::string path_;
    std::string reason_;
};

/* Context descriptor: {"setting":"frobenius","p":...,"e":...,"r":...,
   "modulus_base":...,"modulus_ext":...} or {"setting":"derivation","p":...}.
   Moduli are little-endian coefficient lists over the base field; GF(q)
   coefficients are plain integers when e = 1 and length-e lists otherwise.
   Omitted moduli select the built-in ones. */
nlohmann::json context_to_json(const SkewContext& ctx);
SkewContext context_from_json(const nlohmann::json& j, const std::string& path = "");

/* Elements: Frobenius - list of exactly r GF(q) coefficients (integers when
   e = 1, else little-endian lists of at most e integers, zero-padded to e on
   output); Derivation - {"num":[...],"den":[...]} over GF(p), "den" defaulting
   to [1], reduced on input. All integers must lie in [0, p). */
nlohmann::json element_to_json(const SkewContext& ctx, const FieldElement& a);
FieldElement element_from_json(const SkewContext& ctx, const nlohmann::json& j,
                               const std::string& path = "");

/* Ore polynomial: list of elements, little-endian by degree. */
nlohmann::json ore_to_json(const SkewContext& ctx, const OrePoly& p);
OrePoly ore_from_json(const SkewContext& ctx, const nlohmann::json& j,
                      const std::string& path = "");

/* Message: list of exactly k elements (the coefficients of P). */
nlohmann::json message_to_json(const SkewContext& ctx, const std::vector<FieldElement>& message);
std::vector<FieldElement> message_from_json(const SkewContext& ctx, const nlohmann::json& j,
                                            const std::string& path = "");

/* Block vector: {"blocks":[[...],...]}. */
nlohmann::json block_vector_to_json(const SkewContext& ctx, const BlockVector& x);
BlockVector block_vector_from_json(const SkewContext& ctx, const nlohmann::json& j,
                                   const std::string& path = "");

/* Params: {"context":...,"k":...,"c":[...],"g":[[...],...]}. */
nlohmann::json params_to_json(const RsgParams& params);
RsgParams params_from_json(const nlohmann::json& j, const std::string& path = "");

/* Matrix: list of rows, each a list of elements. */
nlohmann::json matrix_to_json(const SkewContext& ctx, const Matrix& m);

/// Canonical bytes: compact dump plus a trailing newline. All canonical
/// forms (reduced fractions, monic moduli, sorted keys) make repeated runs
/// bit-identical.
std::string canonical_dump(const nlohmann::json& j);

/// Parse a whole file; ParseError on I/O or syntax problems.
nlohmann::json load_json_file(const std::string& file);

}  // namespace rsg
