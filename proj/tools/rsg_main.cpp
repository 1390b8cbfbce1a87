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

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rsg/error_channel.hpp"
#include "rsg/serialization.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kDecodeFailure = 1;
constexpr int kInvalidInput = 2;

/* Re-anchor parse errors at the file they came from. */
template <typename F>
auto in_file(const std::string& file, F f) -> decltype(f()) {
    try {
        return f();
    } catch (const rsg::ParseError& ex) {
        throw rsg::ParseError(ex.path().empty() ? file : file + ":" + ex.path(), ex.reason());
    }
}

rsg::RsgParams load_params(const std::string& file) {
    return in_file(file, [&] { return rsg::params_from_json(rsg::load_json_file(file)); });
}

rsg::BlockVector load_block_vector(const rsg::SkewContext& ctx, const std::string& file) {
    return in_file(file,
                   [&] { return rsg::block_vector_from_json(ctx, rsg::load_json_file(file)); });
}

std::vector<rsg::FieldElement> load_message(const rsg::SkewContext& ctx, const std::string& file) {
    return in_file(file, [&] { return rsg::message_from_json(ctx, rsg::load_json_file(file)); });
}

void emit(const json& j, const std::string& out_file) {
    const std::string bytes = rsg::canonical_dump(j);
    if (out_file.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream out(out_file, std::ios::binary);
    if (!out) throw rsg::ParseError(out_file, "cannot open output file");
    out << bytes;
    if (!out) throw rsg::ParseError(out_file, "cannot write output file");
}

std::string render_block_vector(const rsg::SkewContext& ctx, const rsg::BlockVector& x) {
    std::string s;
    for (const auto& block : x.blocks) {
        s += "(";
        for (std::size_t j = 0; j < block.size(); ++j) {
            if (j) s += ", ";
            s += ctx.to_string(block[j]);
        }
        s += ")";
    }
    return s;
}

std::string render_message(const rsg::SkewContext& ctx,
                           const std::vector<rsg::FieldElement>& message) {
    std::string s = "(";
    for (std::size_t i = 0; i < message.size(); ++i) {
        if (i) s += ", ";
        s += ctx.to_string(message[i]);
    }
    return s + ")";
}

std::vector<rsg::FieldElement> padded_message(const rsg::RsgParams& params, const rsg::OrePoly& p) {
    std::vector<rsg::FieldElement> msg = p.coeffs();
    msg.resize(params.k(), params.context().zero());
    return msg;
}

struct Options {
    std::string params_file;
    std::string message_file;
    std::string vector_file;
    std::string out_file;
    std::vector<std::size_t> weights;
    std::uint64_t seed = 0;
    std::size_t rows = 0;
    bool pretty = false;
};

int run_validate(const Options& opt) {
    const rsg::RsgParams params = load_params(opt.params_file);
    const auto& issues = params.validate();
    json j;
    j["issues"] = issues;
    emit(j, opt.out_file);
    if (opt.pretty)
        for (const auto& issue : issues) std::cerr << issue << "\n";
    return issues.empty() ? kOk : kInvalidInput;
}

int run_genmat(const Options& opt) {
    const rsg::RsgParams params = load_params(opt.params_file);
    const std::size_t rows = opt.rows == 0 ? params.k() : opt.rows;
    const rsg::Matrix m = params.generator_matrix(rows);
    emit(rsg::matrix_to_json(params.context(), m), opt.out_file);
    if (opt.pretty)
        for (std::size_t i = 0; i < m.rows; ++i) {
            std::cerr << "[";
            for (std::size_t j = 0; j < m.cols; ++j)
                std::cerr << (j ? ", " : "") << params.context().to_string(m.at(i, j));
            std::cerr << "]\n";
        }
    return kOk;
}

int run_annihilator(const Options& opt) {
    const rsg::RsgParams params = load_params(opt.params_file);
    const rsg::OrePoly& ann = params.annihilator();
    emit(rsg::ore_to_json(params.context(), ann), opt.out_file);
    if (opt.pretty) std::cerr << rsg::ore_to_string(params.context(), ann) << "\n";
    return kOk;
}

int run_encode(const Options& opt) {
    const rsg::RsgParams params = load_params(opt.params_file);
    const auto message = load_message(params.context(), opt.message_file);
    const rsg::BlockVector word = rsg::encode(params, message);
    emit(rsg::block_vector_to_json(params.context(), word), opt.out_file);
    if (opt.pretty) std::cerr << render_block_vector(params.context(), word) << "\n";
    return kOk;
}

int run_corrupt(const Options& opt) {
    const rsg::RsgParams params = load_params(opt.params_file);
    params.ensure_valid();
    const rsg::BlockVector word = load_block_vector(params.context(), opt.vector_file);
    rsg::ErrorProfile profile;
    profile.weights = opt.weights;
    profile.seed = opt.seed;
    const rsg::BlockVector error = rsg::sample_error(params, profile);
    const rsg::BlockVector corrupted = rsg::bv_add(params.context(), word, error);
    emit(rsg::block_vector_to_json(params.context(), corrupted), opt.out_file);
    if (opt.pretty) std::cerr << render_block_vector(params.context(), corrupted) << "\n";
    return kOk;
}

int run_decode(const Options& opt) {
    const rsg::RsgParams params = load_params(opt.params_file);
    const rsg::BlockVector received = load_block_vector(params.context(), opt.vector_file);
    const rsg::DecodeResult res = rsg::decode(params, received);
    if (!res.ok) {
        json j;
        j["error"] = res.detail;
        j["kind"] = res.failure == rsg::DecodeFailure::radius_exceeded ? "radius_exceeded"
                                                                       : "inconsistent";
        emit(j, opt.out_file);
        if (opt.pretty) std::cerr << "decoding failed: " << res.detail << "\n";
        return kDecodeFailure;
    }
    const auto message = padded_message(params, res.message);
    emit(rsg::message_to_json(params.context(), message), opt.out_file);
    if (opt.pretty)
        std::cerr << render_message(params.context(), message) << " (corrected "
                  << res.error_weight << " error dimensions)\n";
    return kOk;
}

int run_weight(const Options& opt) {
    const rsg::RsgParams params = load_params(opt.params_file);
    params.ensure_valid();
    const rsg::BlockVector x = load_block_vector(params.context(), opt.vector_file);
    const std::size_t w = rsg::rank_hamming_weight(params, x);
    json j;
    j["weight"] = w;
    emit(j, opt.out_file);
    if (opt.pretty) std::cerr << "weight = " << w << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reed-Solomon-Gabidulin codes over Ore polynomial rings"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool with_out = true) {
        sub->add_option("params", opt.params_file, "params JSON file")->required();
        if (with_out) sub->add_option("--out", opt.out_file, "output file (default: stdout)");
        sub->add_flag("--pretty", opt.pretty, "human-readable rendering on stderr");
    };

    CLI::App* validate = app.add_subcommand("validate", "check code parameters");
    add_common(validate);

    CLI::App* genmat = app.add_subcommand("genmat", "print the generator matrix");
    add_common(genmat);
    genmat->add_option("--rows", opt.rows, "number of rows (default: k)");

    CLI::App* annihilator = app.add_subcommand("annihilator", "print the annihilator L");
    add_common(annihilator);

    CLI::App* encode = app.add_subcommand("encode", "encode a message");
    add_common(encode);
    encode->add_option("--message", opt.message_file, "message JSON file")->required();

    CLI::App* corrupt = app.add_subcommand("corrupt", "add a random error of exact weight");
    add_common(corrupt);
    corrupt->add_option("--codeword", opt.vector_file, "codeword JSON file")->required();
    corrupt->add_option("--weights", opt.weights, "per-block rank weights")
        ->required()
        ->delimiter(',');
    corrupt->add_option("--seed", opt.seed, "RNG seed");

    CLI::App* decode = app.add_subcommand("decode", "decode a received word");
    add_common(decode);
    decode->add_option("--received", opt.vector_file, "received word JSON file")->required();

    CLI::App* weight = app.add_subcommand("weight", "rank-Hamming weight of a vector");
    add_common(weight);
    weight->add_option("--vector", opt.vector_file, "block vector JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalidInput;
    }

    try {
        if (validate->parsed()) return run_validate(opt);
        if (genmat->parsed()) return run_genmat(opt);
        if (annihilator->parsed()) return run_annihilator(opt);
        if (encode->parsed()) return run_encode(opt);
        if (corrupt->parsed()) return run_corrupt(opt);
        if (decode->parsed()) return run_decode(opt);
        if (weight->parsed()) return run_weight(opt);
    } catch (const rsg::ParseError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kInvalidInput;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kInvalidInput;
    }
    return kInvalidInput;
}
