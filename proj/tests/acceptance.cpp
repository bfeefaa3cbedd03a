// Acceptance suite: runs every verification criterion and prints one
// pass/fail line per criterion. Exit status 0 iff everything passed.

#include <cstdio>

#include "siegel/suites.hpp"

int main() {
    bool all = true;
    for (int id : siegel::suites::criteria_of_suite("all")) {
        auto res = siegel::suites::run_criterion(id);
        all = all && res.pass;
        std::printf("[%s] criterion %2d: %s (%.1fs; %s)\n", res.pass ? "PASS" : "FAIL", res.id,
                    res.name.c_str(), res.seconds, res.detail.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
