#include "toroidal/suite.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

// Runs every acceptance criterion (or those given as arguments) and prints
// one line per criterion.
int main(int argc, char** argv) {
    std::vector<int> only;
    for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
    bool ok = true;
    toroidal::run_suite(toroidal::SuiteConfig{}, only, [&](const toroidal::CriterionResult& r) {
        std::printf("%s criterion %2d: %-26s %9zu checks %8.2fs (limit %.0fs)\n", r.passed ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.checked, r.seconds, r.limit_seconds);
        for (std::size_t i = 0; i < r.failures.size() && i < 10; ++i) std::printf("    %s\n", r.failures[i].c_str());
        if (r.failures.size() > 10) std::printf("    ... %zu more\n", r.failures.size() - 10);
        std::fflush(stdout);
        ok = ok && r.passed;
    });
    return ok ? 0 : 1;
}
