#include <doctest.h>

#include <json.hpp>
#include <map>
#include <sstream>

#include "kempner/applications.hpp"
#include "oracles.hpp"

using namespace kempner;

TEST_CASE("trailing_zeros") {
    CHECK(trailing_zeros(4005) == 1000);
    CHECK(trailing_zeros(4009) == 1000);
    CHECK(trailing_zeros(4010) == 1001);
    CHECK(trailing_zeros(4) == 0);
    CHECK(trailing_zeros(25) == 6);
    CHECK_THROWS_AS(trailing_zeros(0), DomainError);

    // Against counting base-10 zeros of m! for m small enough to compute exactly.
    unsigned __int128 factorial = 1;
    for (u64 m = 1; m <= 30; ++m) {
        factorial *= m;
        auto f = factorial;
        u64 zeros = 0;
        while (f % 10 == 0) {
            f /= 10;
            ++zeros;
        }
        REQUIRE(trailing_zeros(m) == zeros);
    }
}

TEST_CASE("solve_trailing_zeros examples") {
    CHECK(solve_trailing_zeros(1000).members == std::vector<u64>{4005, 4006, 4007, 4008, 4009});
    CHECK(solve_trailing_zeros(1).members == std::vector<u64>{5, 6, 7, 8, 9});
    CHECK(solve_trailing_zeros(5).members.empty());
    CHECK(solve_trailing_zeros(0).members == std::vector<u64>{1, 2, 3, 4});
}

TEST_CASE("solve_trailing_zeros matches a scan for z <= 500") {
    std::map<u64, std::vector<u64>> scanned;
    for (u64 m = 1; m <= 5 * 500 + 10; ++m) scanned[oracle::factor_count_in_factorial(m, 5)].push_back(m);
    for (u64 z = 1; z <= 500; ++z) {
        const auto solution = solve_trailing_zeros(z);
        const auto it = scanned.find(z);
        REQUIRE(solution.members == (it == scanned.end() ? std::vector<u64>{} : it->second));
        if (solution.members.empty()) continue;
        REQUIRE(solution.members.size() == 5);
        REQUIRE(solution.members.front() % 5 == 0);
        REQUIRE(solution.members.front() == eta_p(z, 5));
    }
}

TEST_CASE("solve_trailing_zeros at large z") {
    for (int trial = 0; trial < 500; ++trial) {
        const u64 z = oracle::uniform(1, u64{1} << 60);
        const auto solution = solve_trailing_zeros(z);
        for (u64 m : solution.members) REQUIRE(trailing_zeros(m) == z);
        if (!solution.members.empty()) {
            REQUIRE(trailing_zeros(solution.members.front() - 1) < z);
            REQUIRE(trailing_zeros(solution.members.back() + 1) > z);
        } else {
            const u64 m = eta_p(z, 5);
            REQUIRE(trailing_zeros(m) > z);
            REQUIRE(trailing_zeros(m - 1) < z);
        }
    }
}

TEST_CASE("smallest_factorial_multiple") {
    auto r = smallest_factorial_multiple("2^31*3^27*7^13");
    CHECK(r.value == 84);
    CHECK(r.argmax_prime == 7);
    CHECK(smallest_factorial_multiple("-1").value == 0);
    CHECK(smallest_factorial_multiple("10").value == 5);
    CHECK_THROWS_AS(smallest_factorial_multiple("0"), ZeroError);
    CHECK_THROWS_AS(smallest_factorial_multiple("6^2"), NotPrimeError);
}

TEST_CASE("prime_characterization_scan") {
    CHECK(prime_characterization_scan(5).empty());
    CHECK(prime_characterization_scan(100).empty());
    CHECK(prime_characterization_scan(10000).empty());
    CHECK_THROWS_AS(prime_characterization_scan(4), DomainError);
    CHECK_THROWS_AS(prime_characterization_scan(kScanBudget + 1), BudgetError);
}

TEST_CASE("table formats") {
    std::ostringstream plain;
    emit_table(1, 16, TableFormat::plain, plain);
    std::ostringstream expected;
    const std::vector<u64> values = {0, 2, 3, 4, 5, 3, 7, 4, 6, 5, 11, 4, 13, 7, 5, 6};
    for (u64 n = 1; n <= 16; ++n) {
        CHECK(values[n - 1] == (n == 1 ? 0 : oracle::smallest_factorial_multiple(n)));
        expected << n << ' ' << values[n - 1] << '\n';
    }
    CHECK(plain.str() == expected.str());

    std::ostringstream csv;
    emit_table(5, 5, TableFormat::csv, csv);
    CHECK(csv.str() == "n,eta,argmax_prime\n5,5,5\n");

    std::ostringstream json;
    emit_table(4, 4, TableFormat::json_lines, json);
    CHECK(json.str() == "{\"n\":4,\"eta\":4,\"witness\":[[2,2,4]]}\n");

    std::ostringstream unit;
    emit_table(1, 2, TableFormat::csv, unit);
    CHECK(unit.str() == "n,eta,argmax_prime\n1,0,0\n2,2,2\n");
    std::ostringstream unit_json;
    emit_table(1, 1, TableFormat::json_lines, unit_json);
    CHECK(unit_json.str() == "{\"n\":1,\"eta\":0,\"witness\":[]}\n");
}

TEST_CASE("table output is stable and parses back") {
    for (auto format : {TableFormat::plain, TableFormat::csv, TableFormat::json_lines}) {
        std::ostringstream a, b;
        emit_table(1, 300, format, a);
        emit_table(1, 300, format, b);
        CHECK(a.str() == b.str());
    }

    std::ostringstream json;
    emit_table(1, 300, TableFormat::json_lines, json);
    std::istringstream lines(json.str());
    std::string line;
    u64 n = 0;
    while (std::getline(lines, line)) {
        ++n;
        const auto record = nlohmann::json::parse(line);
        REQUIRE(record.at("n").get<u64>() == n);
        const auto expected = eta(factorize(1, n));
        REQUIRE(record.at("eta").get<u64>() == expected.value);
        REQUIRE(record.at("witness").size() == expected.per_prime.size());
        for (std::size_t i = 0; i < expected.per_prime.size(); ++i) {
            const auto& w = expected.per_prime[i];
            REQUIRE(record["witness"][i] == nlohmann::json::array({w.prime, w.exponent, w.eta}));
        }
        REQUIRE(line.back() != ' ');
    }
    CHECK(n == 300);
}

TEST_CASE("table argument errors") {
    std::ostringstream out;
    CHECK_THROWS_AS(emit_table(0, 5, TableFormat::plain, out), DomainError);
    CHECK_THROWS_AS(emit_table(6, 5, TableFormat::plain, out), DomainError);
    CHECK_THROWS_AS(emit_table(1, kTableBudget + 1, TableFormat::plain, out), BudgetError);
    CHECK(parse_table_format("json-lines") == TableFormat::json_lines);
    CHECK_FALSE(parse_table_format("xml").has_value());
}
