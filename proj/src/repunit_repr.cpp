#include "kempner/repunit_repr.hpp"

#include <stdexcept>

namespace kempner {

bool RepunitDecomposition::well_formed() const {
    if (!is_prime(p) || terms.empty()) return false;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& term = terms[i];
        if (term.exponent == 0 || term.digit == 0) return false;
        if (i > 0 && terms[i - 1].exponent <= term.exponent) return false;
        const bool last = i + 1 == terms.size();
        if (term.digit > (last ? p : p - 1)) return false;
    }
    return true;
}

RepunitDecomposition decompose(u64 k, u64 p) {
    if (k == 0) throw ZeroError("decompose requires k >= 1");
    require_prime(p);

    // a_1..a_N with a_N the largest repunit <= k; at most ~64 entries.
    std::vector<u64> table;
    for (unsigned n = 1;; ++n) {
        auto a = repunit_wide(p, n);
        if (!a || *a > k) break;
        table.push_back(static_cast<u64>(*a));
    }

    RepunitDecomposition result{p, {}};
    u64 remainder = k;
    auto n = static_cast<unsigned>(table.size());
    while (remainder > 0) {
        while (table[n - 1] > remainder) --n;
        const u64 digit = remainder / table[n - 1];
        remainder %= table[n - 1];
        result.terms.push_back({n, digit});
    }
    if (!result.well_formed())
        throw std::logic_error("decompose produced an ill-formed representation for k=" + std::to_string(k) +
                               " p=" + std::to_string(p));
    return result;
}

u64 recompose(const RepunitDecomposition& d) {
    u128 total = 0;
    for (const auto& term : d.terms) {
        total += static_cast<u128>(term.digit) * repunit(d.p, term.exponent);
        if (total > UINT64_MAX) throw OverflowError("recompose exceeds 64 bits");
    }
    return static_cast<u64>(total);
}

namespace {

struct Search {
    Search(u64 k, u64 p, std::size_t node_limit) : k(k), p(p), node_limit(node_limit) {}

    u64 k;
    u64 p;
    std::size_t node_limit;
    std::size_t nodes = 0;
    // Highest place first: repunits[i] = a_{max - i}, UINT64_MAX past 64 bits.
    std::vector<u64> repunits;
    std::vector<u64> digits;
    std::vector<RepunitDecomposition> found;

    void visit(std::size_t index, u64 sum) {
        if (++nodes > node_limit)
            throw BudgetError("representation search exceeded " + std::to_string(node_limit) + " nodes");
        if (index == digits.size()) {
            if (sum == k) record();
            return;
        }
        for (u64 digit = 0; digit <= p; ++digit) {
            u128 next = static_cast<u128>(digit) * repunits[index] + sum;
            if (next > k) break;
            digits[index] = digit;
            visit(index + 1, static_cast<u64>(next));
        }
        digits[index] = 0;
    }

    void record() {
        RepunitDecomposition d{p, {}};
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (digits[i] != 0) d.terms.push_back({static_cast<unsigned>(digits.size() - i), digits[i]});
        }
        if (d.well_formed()) found.push_back(std::move(d));
    }
};

}  // namespace

std::vector<RepunitDecomposition> enumerate_all_representations(u64 k, u64 p, const EnumerationLimits& limits) {
    if (k == 0) throw ZeroError("enumerate_all_representations requires k >= 1");
    require_prime(p);
    if (limits.max_exponent == 0) throw DomainError("max_exponent must be >= 1");

    Search search(k, p, limits.node_limit);
    for (unsigned n = limits.max_exponent; n >= 1; --n) {
        auto a = repunit_wide(p, n);
        search.repunits.push_back(a && *a <= UINT64_MAX ? static_cast<u64>(*a) : UINT64_MAX);
    }
    search.digits.assign(limits.max_exponent, 0);
    search.visit(0, 0);
    return std::move(search.found);
}

}  // namespace kempner
