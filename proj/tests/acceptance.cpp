// One line per acceptance criterion; exits nonzero when any criterion fails.
#include <chrono>
#include <cstdio>
#include <map>
#include <string>

#include "glsw/suites.hpp"

namespace {

// wall-clock budgets in seconds, per criterion
const std::map<int, double> kBudget{{1, 1.0},  {2, 30.0}, {3, 30.0}, {4, 60.0},  {5, 60.0},
                                    {6, 60.0}, {7, 300.0}, {8, 60.0}, {9, 120.0}, {10, 60.0}};

const std::map<int, std::string> kTitle{
    {1, "catalog null roots"},
    {2, "BC1 Coxeter matrix, root series, defect"},
    {3, "tau engine and AR g-vector formula"},
    {4, "BC1 family on the lambda grid"},
    {5, "defect stability over F3 and F5"},
    {6, "folding isometry and Ext by presentation"},
    {7, "folded canonical decomposition"},
    {8, "tubes, tiers and the quasi-simple Hom law"},
    {9, "eta-brick sampler in C2, B2, G21"},
    {10, "dimension count End = r + s"},
};

}  // namespace

int main() {
    glsw::RunConfig cfg;
    cfg.seed = 20240601;
    std::map<int, bool> pass;
    std::map<int, size_t> count;
    std::map<int, double> seconds;
    std::map<int, std::string> first_failure;
    for (const auto& suite : glsw::suite_names()) {
        auto t0 = std::chrono::steady_clock::now();
        auto report = glsw::run_suite(suite, cfg);
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        for (int c : glsw::suite_criteria(suite)) {
            pass[c] = report.passed(c);
            seconds[c] = dt;
        }
        for (const auto& check : report.checks) {
            if (check.informational) continue;
            ++count[check.criterion];
            if (!check.passed && first_failure[check.criterion].empty())
                first_failure[check.criterion] = check.name + ": " + check.detail;
        }
    }
    bool all = true;
    for (int c = 1; c <= 10; ++c) {
        bool in_time = seconds[c] <= kBudget.at(c);
        bool ok = pass[c] && in_time && count[c] > 0;
        all = all && ok;
        std::printf("criterion %2d: %s  %-44s %3zu checks, %.2fs (budget %.0fs)%s%s\n", c, ok ? "PASS" : "FAIL",
                    kTitle.at(c).c_str(), count[c], seconds[c], kBudget.at(c), in_time ? "" : " over budget",
                    first_failure[c].empty() ? "" : ("  first failure: " + first_failure[c]).c_str());
    }
    std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
    return all ? 0 : 1;
}
