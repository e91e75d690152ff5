#ifndef VF21_REPORT_HPP
#define VF21_REPORT_HPP

// Canonical JSON / CSV rendering of suite reports. Output is byte-identical
// for identical (config, seed): fixed field order, fixed float formatting,
// no timestamps.

#include <string>
#include <vector>

#include "vf21/identity.hpp"

namespace vf21 {

std::string render_json(const SuiteConfig& cfg, const std::vector<CheckReport>& reports);
std::string render_csv(const std::vector<CheckReport>& reports);

struct SuiteSummary {
    int total = 0;
    int passed = 0;
    int gating_failures = 0;
    int informational = 0;
};
SuiteSummary summarize(const std::vector<CheckReport>& reports);

// parse a config JSON document; unknown fields are rejected.
SuiteConfig parse_config(const std::string& json_text);

} // namespace vf21

#endif
