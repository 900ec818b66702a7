#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kempner/error.hpp"

namespace kempner {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct PrimePower {
    u64 prime = 2;
    u64 exponent = 1;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// A nonzero integer written as sign * p_1^a_1 * ... * p_s^a_s with strictly
// increasing primes. An empty factor list is +1 or -1.
struct Factorization {
    int sign = 1;
    std::vector<PrimePower> factors;

    // Validates the invariants (sign is +-1, every prime passes is_prime,
    // primes strictly increasing, exponents >= 1). Throws DomainError or
    // NotPrimeError.
    static Factorization make(int sign, std::vector<PrimePower> factors);

    bool is_unit() const noexcept { return factors.empty(); }

    // |n| when it fits 64 bits.
    std::optional<u64> magnitude() const;

    // "-2^2 * 3", "1", "-1".
    std::string to_string() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

// (p^n - 1) / (p - 1). Throws OverflowError if the value exceeds 64 bits.
u64 repunit(u64 p, unsigned n);

// Same value in the 128-bit intermediate range; nullopt when p^n does not fit.
std::optional<u128> repunit_wide(u64 p, unsigned n);

// v_p(m!) = sum over i >= 1 of floor(m / p^i).
u64 legendre_valuation(u64 m, u64 p);

// Deterministic Miller-Rabin, exact on the whole 64-bit range.
bool is_prime(u64 n);

// Factors sign * magnitude. Throws ZeroError for magnitude 0.
Factorization factorize(int sign, u64 magnitude);
Factorization factorize(std::int64_t n);

// Throws NotPrimeError naming p unless p is prime.
void require_prime(u64 p);

// The first `count` primes in increasing order.
std::vector<u64> first_primes(std::size_t count);

std::string to_string(u128 value);

}  // namespace kempner
