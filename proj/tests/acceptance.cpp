// Acceptance gate: runs the full seeded property suite and prints one
// PASS/FAIL line per criterion. Exit 0 iff everything passes.
#include <cstdio>

#include "witgen/selftest.hpp"

int main() {
    witgen::SelftestConfig cfg;  // seed 1, 200 trials, n in {3,4,5}
    witgen::SelftestReport rep = witgen::run_selftest(cfg);
    std::fputs(rep.text().c_str(), stdout);
    return rep.all_pass() ? 0 : 1;
}
