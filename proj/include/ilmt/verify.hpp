#ifndef ILMT_VERIFY_HPP
#define ILMT_VERIFY_HPP

#include <string>
#include <vector>

#include "ilmt/vendor_json.hpp"

namespace ilmt {

struct CheckResult {
    std::string id;
    int criterion = 0;        // 1..12, the claim battery this check belongs to
    std::string instance;
    std::string expected;
    std::string observed;
    bool pass = false;
    double ms = 0.0;
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckResult> checks;
    int passed = 0;
    int failed = 0;
};

// Suites: motifs, quasirandom, diameter, connectivity, domination, cops,
// coloring, universality, distinguish. "all" concatenates them.
const std::vector<std::string>& suite_names();

VerifyReport run_suite(const std::string& suite, int threads = 1);

nlohmann::json report_json(const VerifyReport& report);

} // namespace ilmt

#endif
