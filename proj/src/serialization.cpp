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

#include "rsg/serialization.hpp"

#include <fstream>
#include <set>

namespace rsg {

namespace {

using nlohmann::json;

std::string item(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string item(const std::string& path, std::size_t index) {
    return path + "/" + std::to_string(index);
}

void expect_keys(const json& j, const std::set<std::string>& allowed, const std::string& path) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key())) throw ParseError(item(path, it.key()), "unknown field");
}

const json& require_field(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw ParseError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(item(path, key), "missing field");
    return *it;
}

std::uint64_t require_uint(const json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw ParseError(path, "expected a nonnegative integer");
    return static_cast<std::uint64_t>(j.get<long long>());
}

std::uint32_t require_scalar(const json& j, std::uint32_t p, const std::string& path) {
    const std::uint64_t v = require_uint(j, path);
    if (v >= p) throw ParseError(path, "coefficient must lie in [0, " + std::to_string(p) + ")");
    return static_cast<std::uint32_t>(v);
}

gfp::Poly require_gfp_poly(const json& j, std::uint32_t p, const std::string& path) {
    if (!j.is_array()) throw ParseError(path, "expected a coefficient list");
    gfp::Poly out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(require_scalar(j[i], p, item(path, i)));
    gfp::strip(out);
    return out;
}

json gfp_poly_to_json(const gfp::Poly& a) {
    json out = json::array();
    for (std::uint32_t v : a) out.push_back(v);
    return out;
}

/* GF(q) coefficient: plain integer when e = 1, length-<=e list otherwise. */

gfp::Poly require_qelem(const json& j, std::uint32_t p, std::uint32_t e, const std::string& path) {
    if (e == 1) {
        const std::uint32_t v = require_scalar(j, p, path);
        return v ? gfp::Poly{v} : gfp::Poly{};
    }
    gfp::Poly out = require_gfp_poly(j, p, path);
    if (gfp::degree(out) >= static_cast<int>(e))
        throw ParseError(path, "coefficient list longer than e");
    return out;
}

json qelem_to_json(const gfp::Poly& a, std::uint32_t e) {
    if (e == 1) return a.empty() ? 0u : a[0];
    json out = json::array();
    for (std::uint32_t i = 0; i < e; ++i) out.push_back(i < a.size() ? a[i] : 0u);
    return out;
}

}  // namespace

json context_to_json(const SkewContext& ctx) {
    json j;
    if (ctx.setting() == Setting::derivation) {
        j["setting"] = "derivation";
        j["p"] = ctx.p();
        return j;
    }
    j["setting"] = "frobenius";
    j["p"] = ctx.p();
    j["e"] = ctx.e();
    j["r"] = ctx.r();
    if (ctx.e() >= 2) j["modulus_base"] = gfp_poly_to_json(ctx.modulus_base());
    json ext = json::array();
    for (const auto& c : ctx.modulus_ext()) ext.push_back(qelem_to_json(c, ctx.e()));
    j["modulus_ext"] = ext;
    return j;
}

SkewContext context_from_json(const json& j, const std::string& path) {
    if (!j.is_object()) throw ParseError(path, "expected a context object");
    const json& setting = require_field(j, "setting", path);
    if (!setting.is_string()) throw ParseError(item(path, "setting"), "expected a string");
    const std::string name = setting.get<std::string>();

    const std::uint64_t p64 = require_uint(require_field(j, "p", path), item(path, "p"));
    if (p64 < 2 || p64 > 1u << 20) throw ParseError(item(path, "p"), "characteristic out of range");
    const auto p = static_cast<std::uint32_t>(p64);

    if (name == "derivation") {
        expect_keys(j, {"setting", "p"}, path);
        try {
            return SkewContext::derivation(p);
        } catch (const std::exception& ex) {
            throw ParseError(item(path, "p"), ex.what());
        }
    }
    if (name != "frobenius") throw ParseError(item(path, "setting"), "unknown setting");

    expect_keys(j, {"setting", "p", "e", "r", "modulus_base", "modulus_ext"}, path);
    const std::uint64_t e = require_uint(require_field(j, "e", path), item(path, "e"));
    const std::uint64_t r = require_uint(require_field(j, "r", path), item(path, "r"));
    if (e < 1 || e > 16) throw ParseError(item(path, "e"), "extension degree out of range");
    if (r < 1 || r > 64) throw ParseError(item(path, "r"), "extension degree out of range");

    std::optional<gfp::Poly> base;
    if (j.contains("modulus_base"))
        base = require_gfp_poly(j["modulus_base"], p, item(path, "modulus_base"));
    std::optional<std::vector<gfp::Poly>> ext;
    if (j.contains("modulus_ext")) {
        const json& je = j["modulus_ext"];
        if (!je.is_array()) throw ParseError(item(path, "modulus_ext"), "expected a coefficient list");
        std::vector<gfp::Poly> coeffs;
        coeffs.reserve(je.size());
        for (std::size_t i = 0; i < je.size(); ++i)
            coeffs.push_back(require_qelem(je[i], p, static_cast<std::uint32_t>(e),
                                           item(item(path, "modulus_ext"), i)));
        ext = std::move(coeffs);
    }
    try {
        return SkewContext::frobenius(p, static_cast<std::uint32_t>(e),
                                      static_cast<std::uint32_t>(r), std::move(base),
                                      std::move(ext));
    } catch (const std::exception& ex) {
        throw ParseError(path, ex.what());
    }
}

json element_to_json(const SkewContext& ctx, const FieldElement& a) {
    if (ctx.setting() == Setting::frobenius) {
        const Tower& t = std::get<Tower>(a);
        json out = json::array();
        for (const auto& c : t.coeff) out.push_back(qelem_to_json(c, ctx.e()));
        return out;
    }
    const Fraction& f = std::get<Fraction>(a);
    json out;
    out["num"] = gfp_poly_to_json(f.num);
    out["den"] = gfp_poly_to_json(f.den);
    return out;
}

FieldElement element_from_json(const SkewContext& ctx, const json& j, const std::string& path) {
    if (ctx.setting() == Setting::frobenius) {
        if (!j.is_array()) throw ParseError(path, "expected a coordinate list");
        if (j.size() != ctx.r())
            throw ParseError(path, "expected exactly r = " + std::to_string(ctx.r()) +
                                       " coordinates");
        std::vector<gfp::Poly> coords;
        coords.reserve(ctx.r());
        for (std::size_t i = 0; i < j.size(); ++i)
            coords.push_back(require_qelem(j[i], ctx.p(), ctx.e(), item(path, i)));
        return ctx.from_tower(std::move(coords));
    }
    if (!j.is_object()) throw ParseError(path, "expected {\"num\":...,\"den\":...}");
    expect_keys(j, {"num", "den"}, path);
    gfp::Poly num = require_gfp_poly(require_field(j, "num", path), ctx.p(), item(path, "num"));
    gfp::Poly den{1u};
    if (j.contains("den")) den = require_gfp_poly(j["den"], ctx.p(), item(path, "den"));
    if (gfp::is_zero(den)) throw ParseError(item(path, "den"), "denominator must be nonzero");
    try {
        return ctx.fraction(std::move(num), std::move(den));
    } catch (const std::exception& ex) {
        throw ParseError(path, ex.what());
    }
}

json ore_to_json(const SkewContext& ctx, const OrePoly& p) {
    json out = json::array();
    for (const FieldElement& c : p.coeffs()) out.push_back(element_to_json(ctx, c));
    return out;
}

OrePoly ore_from_json(const SkewContext& ctx, const json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError(path, "expected a coefficient list");
    std::vector<FieldElement> coeffs;
    coeffs.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        coeffs.push_back(element_from_json(ctx, j[i], item(path, i)));
    return OrePoly{std::move(coeffs)};
}

json message_to_json(const SkewContext& ctx, const std::vector<FieldElement>& message) {
    json out = json::array();
    for (const FieldElement& c : message) out.push_back(element_to_json(ctx, c));
    return out;
}

std::vector<FieldElement> message_from_json(const SkewContext& ctx, const json& j,
                                            const std::string& path) {
    if (!j.is_array()) throw ParseError(path, "expected a list of elements");
    std::vector<FieldElement> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(element_from_json(ctx, j[i], item(path, i)));
    return out;
}

json block_vector_to_json(const SkewContext& ctx, const BlockVector& x) {
    json blocks = json::array();
    for (const auto& block : x.blocks) {
        json b = json::array();
        for (const FieldElement& v : block) b.push_back(element_to_json(ctx, v));
        blocks.push_back(std::move(b));
    }
    json out;
    out["blocks"] = std::move(blocks);
    return out;
}

BlockVector block_vector_from_json(const SkewContext& ctx, const json& j,
                                   const std::string& path) {
    if (!j.is_object()) throw ParseError(path, "expected {\"blocks\":...}");
    expect_keys(j, {"blocks"}, path);
    const json& jb = require_field(j, "blocks", path);
    if (!jb.is_array()) throw ParseError(item(path, "blocks"), "expected a list of blocks");
    BlockVector out;
    out.blocks.reserve(jb.size());
    const std::string bpath = item(path, "blocks");
    for (std::size_t i = 0; i < jb.size(); ++i) {
        if (!jb[i].is_array()) throw ParseError(item(bpath, i), "expected a list of elements");
        std::vector<FieldElement> block;
        block.reserve(jb[i].size());
        for (std::size_t l = 0; l < jb[i].size(); ++l)
            block.push_back(element_from_json(ctx, jb[i][l], item(item(bpath, i), l)));
        out.blocks.push_back(std::move(block));
    }
    return out;
}

json params_to_json(const RsgParams& params) {
    const SkewContext& ctx = params.context();
    json j;
    j["context"] = context_to_json(ctx);
    j["k"] = params.k();
    json c = json::array();
    for (const FieldElement& ci : params.c()) c.push_back(element_to_json(ctx, ci));
    j["c"] = std::move(c);
    json g = json::array();
    for (const auto& block : params.g()) {
        json b = json::array();
        for (const FieldElement& gij : block) b.push_back(element_to_json(ctx, gij));
        g.push_back(std::move(b));
    }
    j["g"] = std::move(g);
    return j;
}

RsgParams params_from_json(const json& j, const std::string& path) {
    if (!j.is_object()) throw ParseError(path, "expected a params object");
    expect_keys(j, {"context", "k", "c", "g"}, path);
    SkewContext ctx = context_from_json(require_field(j, "context", path), item(path, "context"));
    const std::uint64_t k = require_uint(require_field(j, "k", path), item(path, "k"));
    if (k > 1u << 20) throw ParseError(item(path, "k"), "k out of range");

    const json& jc = require_field(j, "c", path);
    if (!jc.is_array()) throw ParseError(item(path, "c"), "expected a list of elements");
    std::vector<FieldElement> c;
    c.reserve(jc.size());
    for (std::size_t i = 0; i < jc.size(); ++i)
        c.push_back(element_from_json(ctx, jc[i], item(item(path, "c"), i)));

    const json& jg = require_field(j, "g", path);
    if (!jg.is_array()) throw ParseError(item(path, "g"), "expected a list of blocks");
    std::vector<std::vector<FieldElement>> g;
    g.reserve(jg.size());
    for (std::size_t i = 0; i < jg.size(); ++i) {
        const std::string gpath = item(item(path, "g"), i);
        if (!jg[i].is_array()) throw ParseError(gpath, "expected a list of elements");
        std::vector<FieldElement> block;
        block.reserve(jg[i].size());
        for (std::size_t l = 0; l < jg[i].size(); ++l)
            block.push_back(element_from_json(ctx, jg[i][l], item(gpath, l)));
        g.push_back(std::move(block));
    }
    return RsgParams{std::move(ctx), static_cast<std::uint32_t>(k), std::move(c), std::move(g)};
}

json matrix_to_json(const SkewContext& ctx, const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(element_to_json(ctx, m.at(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

std::string canonical_dump(const json& j) { return j.dump() + "\n"; }

json load_json_file(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw ParseError(file, "cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& ex) {
        throw ParseError(file, ex.what());
    }
}

}  // namespace rsg
