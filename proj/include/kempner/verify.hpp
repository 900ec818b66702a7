#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kempner/number_core.hpp"

namespace kempner {

struct VerifyOptions {
    u64 max_k = 500;          // k range for eta_p and trailing-zero checks
    u64 max_n = 2000;         // n range for eta, monotonicity and scans
    std::size_t primes = 10;  // how many leading primes to exercise
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;  // first counterexample when failed
};

// Runs the oracle-equivalence and property checks at the given budgets.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace kempner
