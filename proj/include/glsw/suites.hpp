#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "glsw/serialize.hpp"
#include "glsw/stability.hpp"

namespace glsw {

struct RunConfig {
    uint64_t seed = 0;
    long box = 50;               // sampling box for rational entries
    StabilityConfig stability;   // caps and primes
};

// Independent 64-bit stream for a named consumer: FNV-1a of the name mixed
// into the base seed by splitmix64.
uint64_t stream_seed(uint64_t base, std::string_view name);
uint64_t splitmix64(uint64_t x);

struct Check {
    int criterion = 0;           // acceptance criterion 1..10
    std::string name;
    bool passed = false;
    bool informational = false;  // reported, never affects the verdict
    std::string detail;
    std::vector<uint64_t> seeds;
};

struct SuiteReport {
    std::string suite;
    uint64_t seed = 0;
    std::vector<Check> checks;
    bool passed() const;
    // Verdict restricted to one criterion; true when the suite has no such check.
    bool passed(int criterion) const;
};

class UnknownSuite : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// catalog, bc1, family, stability, euler, decomposition, tubes, null-family
const std::vector<std::string>& suite_names();
// Criteria covered by a suite.
std::vector<int> suite_criteria(const std::string& name);
SuiteReport run_suite(const std::string& name, const RunConfig& cfg);

Json to_json(const SuiteReport& r);

}  // namespace glsw
