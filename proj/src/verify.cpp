#include "kempner/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "kempner/applications.hpp"
#include "kempner/eta.hpp"
#include "kempner/repunit_repr.hpp"

namespace kempner {

namespace {

// Returns an empty string on success, otherwise the first counterexample.
using Check = std::function<std::string()>;

template <typename... Args>
std::string describe(const Args&... args) {
    std::ostringstream os;
    (os << ... << args);
    return os.str();
}

unsigned exponent_bound(u64 k, u64 p) {
    unsigned n = 1;
    while (true) {
        auto a = repunit_wide(p, n);
        if (!a || *a > k) return n;
        ++n;
    }
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    const auto primes = first_primes(std::max<std::size_t>(options.primes, 1));
    const u64 max_k = std::max<u64>(options.max_k, 1);
    const u64 max_n = std::max<u64>(options.max_n, 5);

    std::vector<std::pair<std::string, Check>> checks;

    checks.emplace_back("legendre valuation matches factor counting", [&]() -> std::string {
        for (u64 p : primes) {
            u64 count = 0;
            for (u64 m = 1; m <= max_n; ++m) {
                for (u64 x = m; x % p == 0; x /= p) ++count;
                if (legendre_valuation(m, p) != count) return describe("m=", m, " p=", p);
            }
        }
        return {};
    });

    checks.emplace_back("decompose/recompose round trip", [&]() -> std::string {
        for (u64 p : primes)
            for (u64 k = 1; k <= max_n; ++k)
                if (recompose(decompose(k, p)) != k) return describe("k=", k, " p=", p);
        return {};
    });

    checks.emplace_back("repunit representation is unique", [&]() -> std::string {
        for (u64 p : primes) {
            if (p > 5) break;
            for (u64 k = 1; k <= max_k; ++k) {
                const auto all = enumerate_all_representations(k, p, {exponent_bound(k, p), 10'000'000});
                if (all.size() != 1 || all.front() != decompose(k, p)) return describe("k=", k, " p=", p);
            }
        }
        return {};
    });

    checks.emplace_back("eta_p equals binary-search oracle", [&]() -> std::string {
        for (u64 p : primes)
            for (u64 k = 1; k <= max_k; ++k)
                if (eta_p(k, p) != eta_p_oracle(k, p)) return describe("k=", k, " p=", p);
        return {};
    });

    checks.emplace_back("eta divisibility and minimality", [&]() -> std::string {
        for (u64 n = 2; n <= max_n; ++n) {
            const auto f = factorize(1, n);
            const u64 m = eta(f).value;
            const auto ok = [&](u64 x) {
                return std::all_of(f.factors.begin(), f.factors.end(),
                                   [x](const PrimePower& pp) { return legendre_valuation(x, pp.prime) >= pp.exponent; });
            };
            if (!ok(m) || ok(m - 1)) return describe("n=", n, " eta=", m);
        }
        return {};
    });

    checks.emplace_back("eta equals linear-scan oracle and ignores sign", [&]() -> std::string {
        for (u64 n = 1; n <= max_n; ++n) {
            const u64 value = eta(factorize(1, n)).value;
            if (value != eta(factorize(-1, n)).value || value != eta_oracle(factorize(1, n)))
                return describe("n=", n);
        }
        return {};
    });

    checks.emplace_back("eta_p monotone, non-injective, multiple of p, <= p*k", [&]() -> std::string {
        for (u64 p : primes) {
            bool repeated = false;
            u64 previous = 0;
            for (u64 k = 1; k <= max_n; ++k) {
                const u64 value = eta_p(k, p);
                if (value < previous || value % p != 0 || value > p * k) return describe("k=", k, " p=", p);
                repeated = repeated || value == previous;
                previous = value;
            }
            if (!repeated) return describe("no repeated value for p=", p);
        }
        return {};
    });

    checks.emplace_back("eta_p_preimage reaches every m >= 2", [&]() -> std::string {
        for (u64 m = 2; m <= max_n; ++m) {
            const u64 p = factorize(1, m).factors.front().prime;
            if (eta_p(eta_p_preimage(m, p), p) != m) return describe("m=", m);
        }
        return {};
    });

    checks.emplace_back("eta(n) = n iff n prime for n > 4", [&]() -> std::string {
        const auto violations = prime_characterization_scan(max_n);
        if (!violations.empty()) return describe("n=", violations.front().n);
        if (eta(factorize(1, 4)).value != 4) return "eta(4) != 4";
        return {};
    });

    checks.emplace_back("trailing-zeros solver matches scan", [&]() -> std::string {
        std::map<u64, std::vector<u64>> scanned;
        for (u64 m = 1; m <= 5 * max_k + 10; ++m) scanned[trailing_zeros(m)].push_back(m);
        for (u64 z = 1; z <= max_k; ++z) {
            const auto it = scanned.find(z);
            const std::vector<u64> expected = it == scanned.end() ? std::vector<u64>{} : it->second;
            if (solve_trailing_zeros(z).members != expected) return describe("z=", z);
        }
        return {};
    });

    std::vector<CheckResult> results;
    for (auto& [name, check] : checks) {
        CheckResult r{name, true, {}};
        try {
            r.detail = check();
            r.passed = r.detail.empty();
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = e.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace kempner
