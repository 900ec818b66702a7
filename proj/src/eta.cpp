#include "kempner/eta.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "kempner/repunit_repr.hpp"

namespace kempner {

namespace {

u128 checked_pow(u64 p, unsigned n) {
    u128 result = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (__builtin_mul_overflow(result, static_cast<u128>(p), &result))
            throw OverflowError(std::to_string(p) + "^" + std::to_string(n) + " exceeds 128 bits");
    }
    return result;
}

u64 checked_mul(u64 a, u64 b, const char* what) {
    u64 out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw OverflowError(std::string(what) + " exceeds 64 bits");
    return out;
}

}  // namespace

u64 eta_p(u64 k, u64 p) {
    require_prime(p);
    const auto d = decompose(k, p);
    u128 total = 0;
    for (const auto& term : d.terms) {
        total += static_cast<u128>(term.digit) * checked_pow(p, term.exponent);
        if (total > UINT64_MAX)
            throw OverflowError("eta_" + std::to_string(p) + "(" + std::to_string(k) + ") exceeds 64 bits");
    }
    return static_cast<u64>(total);
}

u64 eta_p_oracle(u64 k, u64 p) {
    if (k == 0) throw ZeroError("eta_p_oracle requires k >= 1");
    require_prime(p);
    const u64 upper = checked_mul(p, k, "p * k");
    if (legendre_valuation(upper, p) < k)
        throw std::logic_error("v_p((p*k)!) < k for p=" + std::to_string(p) + " k=" + std::to_string(k));

    u64 lo = 1, hi = upper;
    while (lo < hi) {
        const u64 mid = lo + (hi - lo) / 2;
        if (legendre_valuation(mid, p) >= k)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

EtaResult eta(const Factorization& n) {
    EtaResult result;
    result.per_prime.reserve(n.factors.size());
    for (const auto& f : n.factors) {
        const u64 value = eta_p(f.exponent, f.prime);
        result.per_prime.push_back({f.prime, f.exponent, value});
        if (!result.argmax_prime || value > result.value) {
            result.value = value;
            result.argmax_prime = f.prime;
        }
    }
    return result;
}

u64 eta_oracle(const Factorization& n, u64 scan_limit) {
    u64 bound = 0;
    for (const auto& f : n.factors) bound = std::max(bound, checked_mul(f.prime, f.exponent, "p * exponent"));
    if (bound > scan_limit)
        throw BudgetError("eta_oracle scan bound " + std::to_string(bound) + " exceeds " + std::to_string(scan_limit));

    for (u64 m = 0;; ++m) {
        const bool divides = std::all_of(n.factors.begin(), n.factors.end(), [m](const PrimePower& f) {
            return legendre_valuation(m, f.prime) >= f.exponent;
        });
        if (divides) return m;
        if (m > bound) throw std::logic_error("eta_oracle passed its scan bound");
    }
}

u64 eta_p_preimage(u64 m, u64 p) {
    require_prime(p);
    if (m < 2) throw DomainError("eta_p_preimage requires m >= 2");
    if (m % p != 0) throw NotDivisibleError(std::to_string(p) + " does not divide " + std::to_string(m));

    // Base-p digits of m; the units digit is 0 because p | m.
    u128 k = 0;
    u64 rest = m / p;
    u128 place = 1;  // a_1
    while (rest > 0) {
        k += static_cast<u128>(rest % p) * place;
        rest /= p;
        place = place * p + 1;
    }
    if (k > UINT64_MAX) throw OverflowError("eta_p_preimage exceeds 64 bits");
    return static_cast<u64>(k);
}

}  // namespace kempner
