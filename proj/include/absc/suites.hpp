#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace absc {

struct SuiteResult {
    std::string name;
    bool pass = false;
    bool inconclusive = false;
    std::string failure;  // first failing assertion, empty when pass
    nlohmann::ordered_json report;
};

// Route equality of the finite part against the global formula (exact), the
// Laurent support window, the shape-form identity, and the graded-cosymbol
// identity on the shipped two-step models.
SuiteResult suite_verify_gfd(int seeds);

// Weitzenbock, Bianchi-defect, curvature-contraction and rank-2 identities.
SuiteResult suite_weitzenbock();

struct RocklandSuiteConfig {
    std::string model = "heisenberg1";
    std::vector<double> lambdas{1, -1, 2, -2, 0.5, -0.5};
    std::vector<int> Ns{8, 16, 32};
    double pass_tol = 1e-6;
    double fail_tol = 1e-8;
    std::string expect;  // "", "pass", or "fail"
};

SuiteResult suite_rockland(const RocklandSuiteConfig& cfg);

SuiteResult suite_hopf(int max_level, std::string* csv = nullptr);

SuiteResult suite_s1_kernel(int mode_range, int seeds);

SuiteResult suite_index();

std::vector<SuiteResult> suite_all();

}  // namespace absc
