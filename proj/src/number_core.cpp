#include "kempner/number_core.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace kempner {

namespace {

constexpr u64 kTrialLimit = 1u << 16;

const std::vector<u64>& small_primes() {
    static const std::vector<u64> primes = [] {
        std::vector<bool> composite(kTrialLimit + 1, false);
        std::vector<u64> out;
        for (u64 i = 2; i <= kTrialLimit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (u64 j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Witness set {2..37} is deterministic for n < 3.3 * 10^24.
bool miller_rabin(u64 n) {
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (a % n == 0) continue;
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Brent's variant of Pollard's rho. n is odd, composite, and has no factor
// below kTrialLimit.
u64 pollard_rho(u64 n) {
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 x) { return (mul_mod(x, x, n) + c) % n; };
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        u64 r = 1;
        constexpr u64 batch = 128;
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(batch, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += batch;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split_large(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_rho(n);
    split_large(d, out);
    split_large(n / d, out);
}

}  // namespace

Factorization Factorization::make(int sign, std::vector<PrimePower> factors) {
    if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
    for (std::size_t i = 0; i < factors.size(); ++i) {
        require_prime(factors[i].prime);
        if (factors[i].exponent == 0) throw DomainError("exponent must be >= 1");
        if (i > 0 && factors[i - 1].prime >= factors[i].prime)
            throw DomainError("primes must be strictly increasing");
    }
    return Factorization{sign, std::move(factors)};
}

std::optional<u64> Factorization::magnitude() const {
    u64 result = 1;
    for (const auto& f : factors) {
        for (u64 i = 0; i < f.exponent; ++i) {
            if (__builtin_mul_overflow(result, f.prime, &result)) return std::nullopt;
        }
    }
    return result;
}

std::string Factorization::to_string() const {
    std::ostringstream os;
    if (sign < 0) os << '-';
    if (factors.empty()) {
        os << '1';
        return os.str();
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) os << " * ";
        os << factors[i].prime;
        if (factors[i].exponent != 1) os << '^' << factors[i].exponent;
    }
    return os.str();
}

std::optional<u128> repunit_wide(u64 p, unsigned n) {
    if (p < 2 || n == 0) throw DomainError("repunit requires p >= 2 and n >= 1");
    // a_1 = 1, a_{i+1} = p * a_i + 1; a_n < p^n so fitting p^n suffices.
    u128 a = 1;
    u128 power = p;
    for (unsigned i = 1; i < n; ++i) {
        if (__builtin_mul_overflow(power, static_cast<u128>(p), &power)) return std::nullopt;
        a = a * p + 1;
    }
    return a;
}

u64 repunit(u64 p, unsigned n) {
    require_prime(p);
    auto wide = repunit_wide(p, n);
    if (!wide || *wide > static_cast<u128>(UINT64_MAX))
        throw OverflowError("repunit(" + std::to_string(p) + ", " + std::to_string(n) + ") exceeds 64 bits");
    return static_cast<u64>(*wide);
}

u64 legendre_valuation(u64 m, u64 p) {
    if (p < 2) throw DomainError("legendre_valuation requires p >= 2");
    u64 total = 0;
    while (m >= p) {
        m /= p;
        total += m;
    }
    return total;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    if (n < 41 * 41) return true;
    return miller_rabin(n);
}

void require_prime(u64 p) {
    if (!is_prime(p)) throw NotPrimeError(std::to_string(p) + " is not prime");
}

Factorization factorize(int sign, u64 magnitude) {
    if (magnitude == 0) throw ZeroError("0 has no factorization (domain is Z \\ {0})");
    if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");

    std::vector<PrimePower> factors;
    u64 rest = magnitude;
    for (u64 p : small_primes()) {
        if (p * p > rest) break;
        if (rest % p != 0) continue;
        u64 e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        factors.push_back({p, e});
    }
    if (rest > 1) {
        std::vector<u64> large;
        split_large(rest, large);
        std::sort(large.begin(), large.end());
        for (u64 q : large) {
            if (!factors.empty() && factors.back().prime == q)
                ++factors.back().exponent;
            else
                factors.push_back({q, 1});
        }
    }
    return Factorization{sign, std::move(factors)};
}

Factorization factorize(std::int64_t n) {
    int sign = n < 0 ? -1 : 1;
    // Two's complement magnitude, valid for INT64_MIN as well.
    u64 magnitude = n < 0 ? u64{0} - static_cast<u64>(n) : static_cast<u64>(n);
    return factorize(sign, magnitude);
}

std::vector<u64> first_primes(std::size_t count) {
    const auto& table = small_primes();
    if (count > table.size()) throw BudgetError("first_primes supports at most " + std::to_string(table.size()));
    return {table.begin(), table.begin() + static_cast<std::ptrdiff_t>(count)};
}

std::string to_string(u128 value) {
    if (value == 0) return "0";
    std::string digits;
    while (value > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace kempner
