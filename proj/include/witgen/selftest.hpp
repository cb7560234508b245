#ifndef WITGEN_SELFTEST_HPP
#define WITGEN_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace witgen {

/// Seeded, deterministic property suite; `trials` is the base count (the
/// full acceptance run uses 200).
struct SelftestConfig {
    uint64_t seed = 1;
    int trials = 200;
    size_t nmin = 3;
    size_t nmax = 5;
    bool check_determinism = true;
};

struct CriterionResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SelftestReport {
    std::vector<CriterionResult> criteria;

    bool all_pass() const;
    std::string text() const;
};

SelftestReport run_selftest(const SelftestConfig& cfg);

}  // namespace witgen

#endif
