#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "glsw/suites.hpp"

namespace {

struct Result {
    int code = -1;
    std::string out;
};

Result run(const std::string& args) {
    std::string cmd = std::string(GLSW_CLI_PATH) + " " + args + " 2>/dev/null";
    Result r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("cli catalog") {
    auto r = run("catalog BC1");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["eta"] == nlohmann::json::array({1, 2}));
    CHECK(j["tier"] == 2);
    CHECK(j["defect"] == nlohmann::json::array({-1, 2}));
    auto e8 = nlohmann::json::parse(run("catalog E8").out);
    CHECK(e8["eta"] == e8["eta_computed"]);
    CHECK(run("catalog X9").code == 2);
    CHECK(run("catalog").code == 0);
}

TEST_CASE("cli decompose") {
    auto a = nlohmann::json::parse(run("decompose BC1 -v 2,4").out);
    CHECK(a["report"]["m"] == 2);
    CHECK(a["report"]["w"] == nlohmann::json::array({0, 0}));
    auto b = nlohmann::json::parse(run("decompose BC1 -v 3,5").out);
    CHECK(b["report"]["m"] == 0);
    CHECK(b["report"]["w"] == nlohmann::json::array({3, 5}));
    auto c = nlohmann::json::parse(run("decompose BC1 -v 2,2").out);
    CHECK(c["report"]["summands"][0]["root"] == nlohmann::json::array({1, 1}));
    CHECK(c["report"]["summands"][0]["multiplicity"] == 2);
    CHECK(run("decompose BC1 -v 1,2,3").code == 2);
    CHECK(run("decompose BC1").code == 2);
}

TEST_CASE("cli verify and exit codes") {
    auto r = run("verify bc1 --seed 7");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(j["suite"] == "bc1");
    CHECK(run("verify catalog").code == 0);
    CHECK(run("verify nosuch").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("verify catalog --format xml").code == 2);
    CHECK(run("verify catalog --primes 4").code == 2);
    CHECK(run("verify catalog --caps size=3").code == 2);
    auto tsv = run("verify tubes --format tsv");
    CHECK(tsv.code == 0);
    CHECK(tsv.out.rfind("criterion\tname\tstatus\tdetail\n", 0) == 0);
}

TEST_CASE("cli determinism and seed fallback") {
    auto a = run("verify euler --seed 5");
    auto b = run("verify euler --seed 5");
    CHECK(a.out == b.out);
    auto c = run("verify euler --seed 6");
    CHECK(a.out != c.out);
    auto env = run("verify euler").out;
    std::string cmd = "env GLSW_SEED=5 " + std::string(GLSW_CLI_PATH) + " verify euler 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    pclose(pipe);
    CHECK(out == a.out);
    CHECK(env != a.out);
}

TEST_CASE("named seed streams are independent") {
    CHECK(glsw::stream_seed(1, "a") != glsw::stream_seed(1, "b"));
    CHECK(glsw::stream_seed(1, "a") != glsw::stream_seed(2, "a"));
    CHECK(glsw::stream_seed(1, "a") == glsw::stream_seed(1, "a"));
    CHECK(glsw::suite_names().size() == 8);
    CHECK_THROWS_AS(glsw::run_suite("nosuch", {}), glsw::UnknownSuite);
}

namespace {

using nlohmann::json;

// Subset of JSON Schema used by the shipped schema: $ref, type, const,
// required, properties, items and oneOf.
bool conforms(const json& value, const json& schema, const json& root) {
    if (schema.contains("$ref")) {
        std::string ref = schema["$ref"];
        return conforms(value, root.at(json::json_pointer(ref.substr(1))), root);
    }
    if (schema.contains("const") && value != schema["const"]) return false;
    if (schema.contains("type")) {
        auto is = [&](const std::string& t) {
            if (t == "object") return value.is_object();
            if (t == "array") return value.is_array();
            if (t == "string") return value.is_string();
            if (t == "integer") return value.is_number_integer();
            if (t == "boolean") return value.is_boolean();
            if (t == "null") return value.is_null();
            return false;
        };
        const auto& t = schema["type"];
        bool ok = false;
        if (t.is_string()) ok = is(t);
        else
            for (const auto& x : t) ok = ok || is(x);
        if (!ok) return false;
    }
    if (schema.contains("required"))
        for (const auto& key : schema["required"])
            if (!value.contains(key.get<std::string>())) return false;
    if (schema.contains("properties") && value.is_object())
        for (const auto& [key, sub] : schema["properties"].items())
            if (value.contains(key) && !conforms(value[key], sub, root)) return false;
    if (schema.contains("items") && value.is_array())
        for (const auto& x : value)
            if (!conforms(x, schema["items"], root)) return false;
    if (schema.contains("oneOf")) {
        int matches = 0;
        for (const auto& sub : schema["oneOf"]) matches += conforms(value, sub, root);
        if (matches != 1) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("cli output conforms to the shipped schema") {
    FILE* f = std::fopen(GLSW_SCHEMA_PATH, "r");
    REQUIRE(f != nullptr);
    std::string text;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), f)) > 0) text.append(buf.data(), n);
    std::fclose(f);
    auto schema = json::parse(text);
    for (const std::string args : {"catalog BC1", "catalog A3", "catalog", "decompose C2 -v 2,3,2", "verify tubes"}) {
        CAPTURE(args);
        auto out = json::parse(run(args).out);
        CHECK(conforms(out, schema, schema));
    }
    CHECK_FALSE(conforms(json{{"schema", 2}}, schema, schema));
}
