#include <cstdio>
#include <cstring>
#include <cstdlib>
#include <vector>

#include "dpa/acceptance.hpp"

int main(int argc, char** argv) {
    bool quick = false;
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) quick = true;
        else ids.push_back(std::atoi(argv[i]));
    }
    std::vector<dpa::CriterionResult> results;
    if (ids.empty()) results = dpa::run_acceptance(quick);
    else
        for (int id : ids) results.push_back(dpa::run_criterion(id, quick));

    int failed = 0;
    double total = 0.0;
    for (const auto& r : results) {
        std::printf("[%s] %2d %-50s measured=%.3e tol=%.1e time=%.2fs %s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.measured, r.tolerance, r.seconds, r.detail.c_str());
        failed += r.pass ? 0 : 1;
        total += r.seconds;
    }
    std::printf("%zu criteria, %d failed, %.1f s\n", results.size(), failed, total);
    return failed == 0 ? 0 : 1;
}
