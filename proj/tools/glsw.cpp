#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "glsw/decomposition.hpp"
#include "glsw/serialize.hpp"
#include "glsw/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCertification = 3;

std::vector<long> parse_vector(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        long x = std::stol(item, &used);
        if (used != item.size() || x < 0) throw std::invalid_argument("bad rank vector entry: " + item);
        out.push_back(x);
    }
    if (out.empty()) throw std::invalid_argument("empty rank vector");
    return out;
}

// "dim=8,enum=1000000"
void parse_caps(const std::string& text, glsw::StabilityConfig& cfg) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad cap: " + item);
        std::string key = item.substr(0, eq);
        size_t value = std::stoull(item.substr(eq + 1));
        if (key == "dim")
            cfg.max_dim = value;
        else if (key == "enum")
            cfg.enum_cap = value;
        else
            throw std::invalid_argument("unknown cap: " + key);
    }
}

void emit(const glsw::Json& j, const std::string& format) {
    if (format == "tsv")
        std::cout << glsw::to_tsv(j);
    else
        std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Affine GLS algebra toolkit"};
    app.require_subcommand(1);

    uint64_t seed = 0;
    std::string primes_text = "3,5,7";
    std::string format = "json";
    std::string caps_text;
    long box = 50;
    auto* seed_opt = app.add_option("--seed", seed, "base seed (fallback: GLSW_SEED)");
    app.add_option("--primes", primes_text, "primes for finite-field stability checks");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "tsv"}));
    app.add_option("--caps", caps_text, "caps, e.g. dim=8,enum=1000000");
    app.add_option("--box", box, "sampling box for rational entries")->check(CLI::PositiveNumber);

    auto* catalog = app.add_subcommand("catalog", "quiver and root data of a catalog type");
    std::string catalog_name;
    catalog->add_option("name", catalog_name, "type such as BC1, C2, E8; omit to list families");

    auto* decompose = app.add_subcommand("decompose", "folded canonical decomposition of a rank vector");
    std::string decompose_name, vector_text;
    decompose->add_option("name", decompose_name, "catalog type")->required();
    decompose->add_option("-v,--vector", vector_text, "rank vector, e.g. 2,4")->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify->add_option("suite", suite, "suite name")->required();

    for (auto* sub : {catalog, decompose, verify}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    glsw::RunConfig cfg;
    try {
        if (seed_opt->count() == 0)
            if (const char* env = std::getenv("GLSW_SEED")) seed = std::stoull(env);
        cfg.seed = seed;
        cfg.box = box;
        cfg.stability.primes.clear();
        for (long p : parse_vector(primes_text)) {
            if (!glsw::is_prime_u32(static_cast<uint32_t>(p))) throw std::invalid_argument("not a prime: " + std::to_string(p));
            cfg.stability.primes.push_back(static_cast<uint32_t>(p));
        }
        if (!caps_text.empty()) parse_caps(caps_text, cfg.stability);
    } catch (const std::exception& e) {
        std::cerr << "glsw: " << e.what() << "\n";
        return kExitUsage;
    }

    if (*catalog) {
        try {
            emit(catalog_name.empty() ? glsw::catalog_listing() : glsw::catalog_json(glsw::catalog_by_name(catalog_name)),
                 format);
            return kExitPass;
        } catch (const glsw::UnknownFamily& e) {
            std::cerr << "glsw: " << e.what() << "\n";
            return kExitUsage;
        }
    }

    if (*decompose) {
        glsw::CatalogEntry entry;
        glsw::RankVector v;
        try {
            entry = glsw::catalog_by_name(decompose_name);
            v = parse_vector(vector_text);
            if (v.size() != entry.quiver.size())
                throw std::invalid_argument("rank vector needs " + std::to_string(entry.quiver.size()) + " entries");
        } catch (const std::exception& e) {
            std::cerr << "glsw: " << e.what() << "\n";
            return kExitUsage;
        }
        uint64_t s = glsw::stream_seed(cfg.seed, "decompose");
        try {
            glsw::Json j;
            j["schema"] = glsw::kSchemaVersion;
            j["type"] = entry.quiver.name();
            j["seed"] = cfg.seed;
            j["report"] = glsw::to_json(glsw::folded_decomposition(entry.quiver, v, s));
            emit(j, format);
            return kExitPass;
        } catch (const glsw::CertificationError& e) {
            glsw::Json j;
            j["schema"] = glsw::kSchemaVersion;
            j["type"] = entry.quiver.name();
            j["error"] = e.what();
            j["seeds"] = {cfg.seed, s};
            emit(j, format);
            std::cerr << "glsw: certification failed\n";
            return kExitCertification;
        }
    }

    glsw::SuiteReport report;
    try {
        report = glsw::run_suite(suite, cfg);
    } catch (const glsw::UnknownSuite& e) {
        std::cerr << "glsw: " << e.what() << "\n";
        return kExitUsage;
    }
    auto j = glsw::to_json(report);
    if (format == "tsv") {
        std::cout << "criterion\tname\tstatus\tdetail\n";
        for (const auto& c : report.checks)
            std::cout << c.criterion << '\t' << c.name << '\t'
                      << (c.informational ? "info" : (c.passed ? "pass" : "FAIL")) << '\t' << c.detail << '\n';
        std::cout << "suite\t" << report.suite << '\t' << (report.passed() ? "pass" : "FAIL") << "\t\n";
    } else {
        emit(j, format);
    }
    std::cerr << "glsw: suite " << suite << (report.passed() ? " passed" : " failed") << "\n";
    return report.passed() ? kExitPass : kExitFail;
}
