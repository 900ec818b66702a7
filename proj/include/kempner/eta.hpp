#pragma once

#include <optional>
#include <vector>

#include "kempner/number_core.hpp"

namespace kempner {

// eta_p(exponent) for one factor p^exponent of n.
struct PrimeEta {
    u64 prime = 2;
    u64 exponent = 1;
    u64 eta = 2;

    friend bool operator==(const PrimeEta&, const PrimeEta&) = default;
};

// eta(n) and its witness. value is the max over per_prime, 0 for n = +-1.
// argmax_prime is the smallest prime attaining the max; absent for +-1.
struct EtaResult {
    u64 value = 0;
    std::vector<PrimeEta> per_prime;
    std::optional<u64> argmax_prime;
};

// Smallest m with p^k | m!, computed as sum t_i p^{n_i} over decompose(k, p).
// Throws ZeroError (k = 0), NotPrimeError, OverflowError.
u64 eta_p(u64 k, u64 p);

// Independent reference for eta_p: binary search for the smallest m in
// [1, p*k] with legendre_valuation(m, p) >= k.
u64 eta_p_oracle(u64 k, u64 p);

// Smallest m >= 0 with m! a multiple of n. The sign of n is ignored.
EtaResult eta(const Factorization& n);

// Reference for eta: linear scan m = 0, 1, 2, ... until every factor's
// Legendre valuation is met. Throws BudgetError when the scan bound
// max(p_i * a_i) exceeds scan_limit.
u64 eta_oracle(const Factorization& n, u64 scan_limit = 100'000'000);

// A k with eta_p(k, p) = m, built from the base-p digits of m:
// m = sum d_i p^i  ->  k = sum d_i a_i. Requires m >= 2 and p | m.
u64 eta_p_preimage(u64 m, u64 p);

}  // namespace kempner
