/*
   Copyright 2026 The heightzeta developers

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
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <string>

#include <json.hpp>

#include "heightzeta/cache.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct RunResult {
    std::string out;
    int code;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(HZ_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), p)) > 0) out.append(buf, n);
    int rc = pclose(p);
    return {out, WEXITSTATUS(rc)};
}

json parse_report(const std::string& out) {
    return json::parse(out);
}

double result_value(const json& rep, const std::string& name) {
    for (const auto& r : rep["results"])
        if (r["name"] == name) return r["value"].get<double>();
    FAIL("missing result ", name);
    return 0.0;
}

json result_entry(const json& rep, const std::string& name) {
    for (const auto& r : rep["results"])
        if (r["name"] == name) return r;
    FAIL("missing result ", name);
    return {};
}

std::string strip_timing(const std::string& s) {
    return std::regex_replace(s, std::regex("\"timing_ms\": \\d+"),
                              "\"timing_ms\": X");
}

struct TempCacheDir {
    fs::path dir;
    TempCacheDir() {
        dir = fs::temp_directory_path() /
              ("hz-cache-" + std::to_string(::getpid()));
        fs::remove_all(dir);
        fs::create_directories(dir);
        ::setenv("HEIGHTZETA_CACHE_DIR", dir.c_str(), 1);
    }
    ~TempCacheDir() {
        ::unsetenv("HEIGHTZETA_CACHE_DIR");
        std::error_code ec;
        fs::remove_all(dir, ec);
    }
};

}  // namespace

TEST_CASE("cache roundtrip, missing keys and tamper detection") {
    TempCacheDir tmp;
    hz::Cache cache(tmp.dir.string());
    CHECK(!cache.load("absent"));
    cache.store("census|x", json{{"count", 42}});
    auto got = cache.load("census|x");
    REQUIRE(got.has_value());
    CHECK((*got)["count"] == 42);

    // corrupt the stored record: checksum no longer matches
    {
        std::ofstream f(cache.file_path(), std::ios::trunc);
        json rec{{"key_hash", hz::fnv1a_hex("census|x")},
                 {"checksum", "0000000000000000"},
                 {"payload", {{"count", 999}}}};
        f << rec.dump() << "\n";
    }
    CHECK(!cache.load("census|x"));
}

TEST_CASE("residue command") {
    auto r = run_cli("zeta residue --gram I2");
    CHECK(r.code == 0);
    json rep = parse_report(r.out);
    CHECK(result_value(rep, "residue") ==
          doctest::Approx(6.0 / M_PI).epsilon(1e-9));
}

TEST_CASE("point census command and caching") {
    TempCacheDir tmp;
    auto first = run_cli("points count --gram I2 --bound 1");
    CHECK(first.code == 0);
    json rep1 = parse_report(first.out);
    CHECK(result_value(rep1, "count") == 2);
    CHECK(result_value(rep1, "cache_hit") == 0);

    auto second = run_cli("points count --gram I2 --bound 1");
    json rep2 = parse_report(second.out);
    CHECK(result_value(rep2, "count") == 2);
    CHECK(result_value(rep2, "cache_hit") == 1);

    // byte-identical reports with a warm cache, timing excepted
    auto third = run_cli("points count --gram I2 --bound 1");
    CHECK(strip_timing(third.out) == strip_timing(second.out));

    // tampered cache entries are detected and recomputed
    {
        std::ofstream f(tmp.dir / "cache.jsonl", std::ios::trunc);
        json rec{{"key_hash", hz::fnv1a_hex("census|2|1|0|0|1|1")},
                 {"checksum", "0000000000000000"},
                 {"payload", {{"count", 999}}}};
        f << rec.dump() << "\n";
    }
    auto fourth = run_cli("points count --gram I2 --bound 1");
    json rep4 = parse_report(fourth.out);
    CHECK(result_value(rep4, "count") == 2);
    CHECK(result_value(rep4, "cache_hit") == 0);
}

TEST_CASE("points list with csv") {
    TempCacheDir tmp;
    fs::path csv = tmp.dir / "pts.csv";
    auto r = run_cli("points list --gram I2 --bound 1 --csv " + csv.string());
    CHECK(r.code == 0);
    std::ifstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "x0,x1,height_sq_num,height_sq_den");
    int lines = 0;
    std::string line;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 2);
}

TEST_CASE("theta and zeta evaluation commands") {
    auto rr = run_cli("theta rr-check --gram '2,1;1,1' --twist 1");
    CHECK(rr.code == 0);
    json rrrep = parse_report(rr.out);
    CHECK(rrrep["checks"][0]["pass"] == true);

    auto ev = run_cli("zeta eval --gram I1 --s 2");
    CHECK(ev.code == 0);
    json evrep = parse_report(ev.out);
    CHECK(result_value(evrep, "Z") == doctest::Approx(1.0).epsilon(1e-6));

    auto par = run_cli("zeta partial --gram I2 --s 3 --bound 1");
    json prep = parse_report(par.out);
    CHECK(result_value(prep, "partial_sum") == doctest::Approx(2.0));
}

TEST_CASE("motivic commands") {
    auto chk = run_cli("motivic check --split 0,0 --trunc 12");
    CHECK(chk.code == 0);
    json rep = parse_report(chk.out);
    for (const auto& c : rep["checks"]) CHECK(c["pass"] == true);

    auto res = run_cli("motivic residue --split 0,0 --q 2");
    CHECK(res.code == 0);
    json rrep = parse_report(res.out);
    json formula = result_entry(rrep, "residue_formula");
    CHECK(formula["num"] == -3);
    CHECK(formula["den"] == 8);

    auto spec = run_cli("motivic specialize --split 0,0 --q 2 --trunc 6");
    CHECK(spec.code == 0);

    auto lem = run_cli("motivic lemma48 --a 2 --b 0 --trunc 10");
    CHECK(lem.code == 0);
}

TEST_CASE("oracle and hirzebruch commands") {
    auto orc = run_cli("oracle sections --q 2 --split 0,0 --d 1");
    CHECK(orc.code == 0);
    CHECK(result_value(parse_report(orc.out), "count") == 6);

    auto alpha = run_cli("hirzebruch alpha --e 2 --a 1 --b 4");
    json arep = parse_report(alpha.out);
    json a = result_entry(arep, "alpha");
    CHECK(a["num"] == 2);
    CHECK(a["den"] == 1);

    auto pred = run_cli("hirzebruch predict --e 2 --a 2 --b 5");
    CHECK(pred.code == 0);
    json prep = parse_report(pred.out);
    json flags = result_entry(prep, "flags")["value"];
    CHECK(flags["dominant"] == "s2");
    CHECK(flags["coincident"] == false);

    auto tau = run_cli("report tauberian --a 2 --order 1 --g 1.909859317 --bound 100");
    CHECK(result_value(parse_report(tau.out), "predicted") ==
          doctest::Approx(3.0 / M_PI * 1e4).epsilon(1e-6));
}

TEST_CASE("exit codes") {
    CHECK(run_cli("bogus").code == 2);
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("--help").code == 0);
    // invalid metric surfaces as a failed run, not a crash
    auto bad = run_cli("points count --gram '1,2;2,1' --bound 1");
    CHECK(bad.code == 1);
    CHECK(parse_report(bad.out).contains("error"));
}
