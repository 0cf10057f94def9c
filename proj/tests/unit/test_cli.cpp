/*
 * Copyright 2026 The lozenge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lozenge/cli.hpp"

using Json = nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = lozenge::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Json report(const Outcome &o) {
    REQUIRE(o.out.find('\n') == o.out.size() - 1);
    return Json::parse(o.out);
}

std::string without_elapsed(const std::string &line) {
    Json j = Json::parse(line);
    j.erase("elapsed_ms");
    return j.dump();
}

} // namespace

TEST_CASE("count commands") {
    auto o = invoke({"count", "closed", "--a", "1", "--b", "1", "--c", "1"});
    CHECK(o.code == 0);
    Json j = report(o);
    CHECK(j["command"] == "count closed");
    CHECK(j["result"] == "2");
    CHECK(j["params"]["theorem"] == 1);
    CHECK(j["elapsed_ms"].is_number_integer());
    CHECK_FALSE(j.contains("seed"));

    CHECK(report(invoke({"count", "box", "--x", "2", "--y", "2", "--z", "2"}))["result"] == "20");
    CHECK(report(invoke({"count", "closed", "--a", "2", "--b", "2", "--c", "1"}))["result"] == "12");
    CHECK(report(invoke({"count", "closed", "--a", "2", "--b", "2", "--c", "1", "--theorem", "4"}))["params"]["theorem"] == 4);
    CHECK(report(invoke({"count", "brute", "--a", "2", "--b", "2", "--c", "2"}))["result"] == "54");
    CHECK(report(invoke({"count", "lgv", "--a", "3", "--b", "3", "--c", "3"}))["result"] == "4320");
}

TEST_CASE("count results are exact decimal strings") {
    const Json j = report(invoke({"count", "closed", "--a", "9", "--b", "11", "--c", "13"}));
    const std::string r = j["result"];
    CHECK(r.find_first_not_of("0123456789") == std::string::npos);
    CHECK(r.size() > 20);
}

TEST_CASE("brute count with a moved puncture") {
    const Json j = report(invoke({"count", "brute", "--a", "2", "--b", "2", "--c", "2", "--puncture", "1", "0"}));
    CHECK(j["params"]["puncture"] == Json::array({3, 2}));
    CHECK(j["result"].get<std::string>() != "54");
}

TEST_CASE("usage errors exit with code 2") {
    auto parity = invoke({"count", "closed", "--a", "1", "--b", "2", "--c", "1"});
    CHECK(parity.code == 2);
    CHECK(parity.out.empty());
    CHECK(parity.err.find("parity") != std::string::npos);

    CHECK(invoke({"count"}).code == 2);
    CHECK(invoke({"bogus"}).code == 2);
    CHECK(invoke({"count", "closed", "--a", "1"}).code == 2);
    CHECK(invoke({"count", "closed", "--a", "1", "--b", "1", "--c", "1", "--theorem", "2"}).code == 2);
    CHECK(invoke({"count", "brute", "--a", "5", "--b", "5", "--c", "5"}).code == 2);
    CHECK(invoke({"verify", "lemma11"}).code == 2);
    CHECK(invoke({"verify", "theorem3", "--a", "1"}).code == 2);
    CHECK(invoke({"verify", "chain53", "--a", "3", "--b", "3", "--n", "2"}).code == 2);
    CHECK(invoke({"render", "--a", "1", "--b", "1", "--c", "1", "--index", "2", "-o",
                  LOZENGE_TEST_TMPDIR "/unused.svg"})
              .code == 2);
}

TEST_CASE("verify commands") {
    auto o = invoke({"verify", "lemma9", "--seed", "7", "--trials", "50"});
    CHECK(o.code == 0);
    Json j = report(o);
    CHECK(j["result"] == true);
    CHECK(j["seed"] == 7);
    CHECK(j["params"]["checked"] == 250);

    for (const std::string target : {"minor-summation", "lemma8", "lemma10", "chain53"})
        CHECK(report(invoke({"verify", target}))["result"] == true);
    CHECK(report(invoke({"verify", "theorem3", "--a", "2", "--b", "2", "--trials", "2"}))["result"] == true);
    CHECK(report(invoke({"verify", "conjecture5", "--a", "1", "--b", "1", "--n", "1"}))["result"] == true);
    CHECK(report(invoke({"verify", "lemma10", "--a", "3", "--b", "1", "--n", "2"}))["result"] == true);
}

TEST_CASE("reports are reproducible for a fixed seed") {
    const std::vector<std::string> args{"verify", "minor-summation", "--seed", "3", "--trials", "10"};
    CHECK(without_elapsed(invoke(args).out) == without_elapsed(invoke(args).out));
    const std::vector<std::string> t3{"verify", "theorem3", "--a", "1", "--b", "3", "--seed", "4"};
    CHECK(without_elapsed(invoke(t3).out) == without_elapsed(invoke(t3).out));
}

TEST_CASE("render writes an svg file") {
    const std::string path = LOZENGE_TEST_TMPDIR "/tiling.svg";
    auto o = invoke({"render", "--a", "2", "--b", "2", "--c", "2", "--index", "5", "-o", path});
    CHECK(o.code == 0);
    CHECK(report(o)["result"] == path);
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str().find("<svg") != std::string::npos);
    CHECK(text.str().find("class=\"puncture\"") != std::string::npos);
}
