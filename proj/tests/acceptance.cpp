// Acceptance gate: runs every verification suite at its default scale and
// prints one verdict line per criterion. Exit 0 only when all pass.
#include <cstdio>
#include <string>

#include "hatters/verify_suites.hpp"

int main() {
    using namespace hatters;
    const auto& suites = verify_suites();
    int failed = 0;
    int criterion = 0;
    for (const auto& s : suites) {
        ++criterion;
        SuiteResult r;
        try {
            r = s.run(SuiteOptions{});
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        const char* verdict = r.pass ? (r.inconclusive ? "PASS (inconclusive)" : "PASS") : "FAIL";
        if (!r.pass) ++failed;
        std::printf("criterion %2d (%s): %s", criterion, s.name.c_str(), verdict);
        if (r.trials) std::printf("  [%llu trials, %llu failures]",
                                  (unsigned long long)r.trials, (unsigned long long)r.failures);
        if (!r.detail.empty()) std::printf("  %s", r.detail.c_str());
        std::printf("\n");
        std::fflush(stdout);
    }
    if (failed) std::printf("%d of %d criteria FAILED\n", failed, criterion);
    else std::printf("all %d criteria passed\n", criterion);
    return failed ? 1 : 0;
}
