#pragma once

#include "report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mouldcalc {

// One verification run: suite name, seed and bounds. Negative bounds pick
// the suite's defaults. Identical specs produce byte-identical reports.
struct SuiteSpec {
    std::string name;
    uint64_t seed = 1;
    int cases = -1;
    int depth = -1;
};

std::vector<std::string> suite_names();
bool is_suite(const std::string &name);
VerificationReport run_suite(const SuiteSpec &spec); // throws on unknown name

} // namespace mouldcalc
