// Acceptance suite: runs every criterion at its pinned scale and prints one
// pass/fail line per criterion. Exit code 0 iff all pass.
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <thread>

#include "hilbfrob/selftest.hpp"

int main(int argc, char** argv) {
    hilbfrob::SelftestOptions opt;
    opt.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (const char* env = std::getenv("HILBFROB_BUDGET")) opt.budget = std::atoll(env);
    for (int i = 1; i < argc; ++i) {
        if (std::strncmp(argv[i], "--jobs=", 7) == 0) opt.jobs = std::atoi(argv[i] + 7);
        if (std::strncmp(argv[i], "--criterion=", 12) == 0)
            opt.criteria.push_back(std::atoi(argv[i] + 12));
    }
    bool all = hilbfrob::run_selftest(opt, [](const hilbfrob::CriterionResult& r) {
        std::printf("[%s] criterion %d: %s (%.1fs)\n", r.pass ? "PASS" : "FAIL", r.number,
                    r.title.c_str(), r.seconds);
        if (!r.detail.empty()) std::printf("       %s\n", r.detail.c_str());
        std::fflush(stdout);
    });
    return all ? 0 : 1;
}
