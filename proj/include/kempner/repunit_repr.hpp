#pragma once

#include <cstddef>
#include <vector>

#include "kempner/number_core.hpp"

namespace kempner {

// One place of a generalized repunit representation: digit * a_exponent.
struct RepunitTerm {
    unsigned exponent = 1;
    u64 digit = 1;

    friend bool operator==(const RepunitTerm&, const RepunitTerm&) = default;
};

// k = t_1 a_{n_1} + ... + t_l a_{n_l} in the repunit base of prime p, where
// a_n = (p^n - 1)/(p - 1). Exponents strictly decrease, every digit is in
// [1, p - 1] except the last, which may reach p.
struct RepunitDecomposition {
    u64 p = 2;
    std::vector<RepunitTerm> terms;

    // True when terms satisfy every structural constraint above.
    bool well_formed() const;

    friend bool operator==(const RepunitDecomposition&, const RepunitDecomposition&) = default;
};

// Greedy extraction: largest a_n <= remainder, digit = remainder / a_n.
// Throws ZeroError for k = 0 and NotPrimeError for composite p.
RepunitDecomposition decompose(u64 k, u64 p);

// Sum of digit * repunit(p, exponent). Throws OverflowError past 64 bits.
u64 recompose(const RepunitDecomposition& d);

struct EnumerationLimits {
    unsigned max_exponent = 0;
    std::size_t node_limit = 10'000'000;
};

// Every well-formed representation of k using exponents <= max_exponent,
// found by depth-first search over all digit vectors in [0, p]^max_exponent
// (pruned only when the partial sum already exceeds k). Throws BudgetError
// once the search visits more than node_limit nodes.
std::vector<RepunitDecomposition> enumerate_all_representations(u64 k, u64 p, const EnumerationLimits& limits);

}  // namespace kempner
