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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "rsg/serialization.hpp"
#include "test_support.hpp"

using namespace rsg_test;
using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& file) {
    std::ifstream in(file, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

const std::string& scratch_dir() {
    static const std::string dir = [] {
        std::string d = "/tmp/rsg_cli_test_" + std::to_string(::getpid());
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const std::string base = scratch_dir() + "/run" + std::to_string(counter++);
    const std::string cmd =
        std::string(RSG_CLI_PATH) + " " + args + " > " + base + ".out 2> " + base + ".err";
    const int status = std::system(cmd.c_str());
    RunResult res;
    res.code = (status == -1) ? -1 : WEXITSTATUS(status);
    res.out = slurp(base + ".out");
    res.err = slurp(base + ".err");
    return res;
}

std::string fixture(const std::string& name) {
    return std::string(RSG_FIXTURE_DIR) + "/thread/" + name;
}

std::string write_scratch(const std::string& name, const std::string& bytes) {
    const std::string path = scratch_dir() + "/" + name;
    std::ofstream out(path, std::ios::binary);
    out << bytes;
    return path;
}

}  // namespace

TEST_CASE("fixtures agree with the in-code example") {
    RsgParams params = params_from_json(load_json_file(fixture("params.json")));
    RsgParams expect = thread_params();
    CHECK(params.context() == expect.context());
    CHECK(params.k() == expect.k());
    CHECK(params.c() == expect.c());
    CHECK(params.g() == expect.g());

    const SkewContext& ctx = params.context();
    auto message = message_from_json(ctx, load_json_file(fixture("message.json")));
    CHECK(OrePoly{message} == thread_message(ctx));
    BlockVector codeword = block_vector_from_json(ctx, load_json_file(fixture("codeword.json")));
    CHECK(codeword == thread_codeword(ctx));
    BlockVector error = block_vector_from_json(ctx, load_json_file(fixture("error.json")));
    CHECK(error == thread_error(ctx));
    BlockVector received = block_vector_from_json(ctx, load_json_file(fixture("received.json")));
    CHECK(received == thread_received(ctx));
    CHECK(bv_add(ctx, codeword, error) == received);

    // fixture files hold canonical bytes
    CHECK(slurp(fixture("params.json")) == canonical_dump(params_to_json(expect)));
    CHECK(slurp(fixture("codeword.json")) ==
          canonical_dump(block_vector_to_json(ctx, thread_codeword(ctx))));
}

TEST_CASE("help and argument errors") {
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("encode --help").code == 0);
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("encode").code == 2);                         // missing params
    CHECK(run_cli("encode " + fixture("params.json")).code == 2);  // missing --message
}

TEST_CASE("validate") {
    RunResult good = run_cli("validate " + fixture("params.json"));
    CHECK(good.code == 0);
    CHECK(good.out == "{\"issues\":[]}\n");

    // equivalent classes: N(1) = N(2) in GF(9)
    SkewContext k9 = f9();
    RsgParams bad(k9, 1, {k9.one(), tower(k9, {2, 0})}, {{k9.one()}, {tower(k9, {0, 1})}});
    const std::string bad_file = write_scratch("bad_params.json",
                                               canonical_dump(params_to_json(bad)));
    RunResult res = run_cli("validate " + bad_file);
    CHECK(res.code == 2);
    json j = json::parse(res.out);
    CHECK(!j["issues"].empty());
}

TEST_CASE("genmat") {
    RsgParams params = thread_params();
    const SkewContext& ctx = params.context();
    RunResult res = run_cli("genmat " + fixture("params.json"));
    CHECK(res.code == 0);
    CHECK(res.out == canonical_dump(matrix_to_json(ctx, params.generator_matrix(2))));
    RunResult full = run_cli("genmat " + fixture("params.json") + " --rows 6");
    CHECK(full.code == 0);
    CHECK(full.out == canonical_dump(matrix_to_json(ctx, params.generator_matrix(6))));
    CHECK(run_cli("genmat " + fixture("params.json") + " --rows 7").code == 2);
}

TEST_CASE("annihilator") {
    RsgParams params = thread_params();
    RunResult res = run_cli("annihilator " + fixture("params.json"));
    CHECK(res.code == 0);
    CHECK(res.out ==
          canonical_dump(ore_to_json(params.context(), thread_annihilator(params.context()))));
}

TEST_CASE("encode matches the committed codeword byte for byte") {
    RunResult res = run_cli("encode " + fixture("params.json") + " --message " +
                            fixture("message.json"));
    CHECK(res.code == 0);
    CHECK(res.out == slurp(fixture("codeword.json")));
}

TEST_CASE("decode recovers the committed message byte for byte") {
    RunResult res = run_cli("decode " + fixture("params.json") + " --received " +
                            fixture("received.json"));
    CHECK(res.code == 0);
    CHECK(res.out == slurp(fixture("message.json")));
}

TEST_CASE("decode failure exits 1 with a typed reason") {
    // weight 4 = n - k noise is far beyond the radius w = 2
    RunResult heavy = run_cli("corrupt " + fixture("params.json") + " --codeword " +
                              fixture("codeword.json") + " --weights 3,1 --seed 11");
    REQUIRE(heavy.code == 0);
    const std::string received = write_scratch("heavy.json", heavy.out);
    RunResult res = run_cli("decode " + fixture("params.json") + " --received " + received);
    CHECK(res.code == 1);
    json j = json::parse(res.out);
    CHECK(j.contains("error"));
    CHECK((j["kind"] == "radius_exceeded" || j["kind"] == "inconsistent"));
}

TEST_CASE("corrupt is deterministic and round trips through decode") {
    const std::string cmd = "corrupt " + fixture("params.json") + " --codeword " +
                            fixture("codeword.json") + " --weights 1,1 --seed 20260814";
    RunResult a = run_cli(cmd);
    RunResult b = run_cli(cmd);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const std::string received = write_scratch("roundtrip.json", a.out);
    RunResult res = run_cli("decode " + fixture("params.json") + " --received " + received);
    CHECK(res.code == 0);
    CHECK(res.out == slurp(fixture("message.json")));
    // different seed, different draw
    RunResult c = run_cli("corrupt " + fixture("params.json") + " --codeword " +
                          fixture("codeword.json") + " --weights 1,1 --seed 1");
    CHECK(c.out != a.out);
}

TEST_CASE("corrupt rejects malformed weights") {
    CHECK(run_cli("corrupt " + fixture("params.json") + " --codeword " +
                  fixture("codeword.json") + " --weights 1,1,1 --seed 3")
              .code == 2);
    CHECK(run_cli("corrupt " + fixture("params.json") + " --codeword " +
                  fixture("codeword.json") + " --weights 4,0")
              .code == 2);
}

TEST_CASE("weight") {
    RunResult res = run_cli("weight " + fixture("params.json") + " --vector " +
                            fixture("error.json"));
    CHECK(res.code == 0);
    CHECK(res.out == "{\"weight\":2}\n");
    // a message file is not a block vector
    CHECK(run_cli("weight " + fixture("params.json") + " --vector " + fixture("message.json"))
              .code == 2);
}

TEST_CASE("--out writes the same bytes as stdout") {
    const std::string out_file = scratch_dir() + "/ann.json";
    RunResult res = run_cli("annihilator " + fixture("params.json") + " --out " + out_file);
    CHECK(res.code == 0);
    CHECK(res.out.empty());
    RunResult direct = run_cli("annihilator " + fixture("params.json"));
    CHECK(slurp(out_file) == direct.out);
}

TEST_CASE("--pretty goes to stderr only") {
    RunResult plain = run_cli("decode " + fixture("params.json") + " --received " +
                              fixture("received.json"));
    RunResult pretty = run_cli("decode " + fixture("params.json") + " --received " +
                               fixture("received.json") + " --pretty");
    CHECK(pretty.code == 0);
    CHECK(pretty.out == plain.out);
    CHECK(plain.err.empty());
    CHECK(!pretty.err.empty());
}

TEST_CASE("malformed inputs exit 2 with a located error") {
    const std::string broken = write_scratch("broken.json", "{not json");
    RunResult res = run_cli("validate " + broken);
    CHECK(res.code == 2);
    CHECK(res.err.rfind("error:", 0) == 0);

    const std::string wrong = write_scratch("wrong_shape.json", "{\"num\":[1]}\n");
    RunResult res2 = run_cli("decode " + fixture("params.json") + " --received " + wrong);
    CHECK(res2.code == 2);
    CHECK(res2.err.find("wrong_shape.json") != std::string::npos);

    CHECK(run_cli("validate /nonexistent.json").code == 2);

    // out-of-range coefficient, with a path to the offending entry
    const std::string badco = write_scratch(
        "bad_coeff.json", "{\"blocks\":[[{\"num\":[9]},{\"num\":[]},{\"num\":[]}],"
                          "[{\"num\":[]},{\"num\":[]},{\"num\":[]}]]}\n");
    RunResult res3 = run_cli("weight " + fixture("params.json") + " --vector " + badco);
    CHECK(res3.code == 2);
    CHECK(res3.err.find("/blocks/0/0") != std::string::npos);
}
