#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "endoring/params.hpp"

namespace endoring {

struct VerifyOptions {
    Int budget = 1'000'000;     // cap on full ring enumeration
    Int pair_budget = 2048;     // cap on the quadratic inverse pair search
    Int samples = 10'000;       // randomized cases where enumeration is too big
    std::uint64_t seed = 0x0e5d0;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    bool skipped = false; // could not run within budget
    std::string detail;
};

// Cross-checks the digit and matrix arithmetic against the brute-force
// oracle at the given parameters, exhaustively where the budget allows and
// on random samples otherwise.
std::vector<CheckResult> run_verification(const RingParams& pr, const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

} // namespace endoring
