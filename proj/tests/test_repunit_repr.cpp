#include <doctest.h>

#include "kempner/repunit_repr.hpp"
#include "oracles.hpp"

using namespace kempner;

namespace {

unsigned exponent_bound(u64 k, u64 p) {
    unsigned n = 1;
    while (repunit(p, n + 1) <= k) ++n;
    return n + 1;
}

}  // namespace

TEST_CASE("decompose worked examples") {
    CHECK(decompose(31, 2) == RepunitDecomposition{2, {{5, 1}}});
    CHECK(decompose(27, 3) == RepunitDecomposition{3, {{3, 2}, {1, 1}}});
    CHECK(decompose(13, 7) == RepunitDecomposition{7, {{2, 1}, {1, 5}}});
    CHECK(decompose(1000, 5) == RepunitDecomposition{5, {{5, 1}, {4, 1}, {3, 2}, {1, 1}}});
    CHECK(decompose(2, 2) == RepunitDecomposition{2, {{1, 2}}});
    for (u64 p : first_primes(10)) CHECK(decompose(1, p) == RepunitDecomposition{p, {{1, 1}}});
}

TEST_CASE("decompose rejects k = 0 and composite p") {
    CHECK_THROWS_AS(decompose(0, 2), ZeroError);
    CHECK_THROWS_AS(decompose(10, 4), NotPrimeError);
    CHECK_THROWS_AS(decompose(10, 1), NotPrimeError);
}

TEST_CASE("recompose examples") {
    CHECK(recompose({5, {{5, 1}, {4, 1}, {3, 2}, {1, 1}}}) == 1000);
    CHECK(recompose({2, {{1, 1}}}) == 1);
    CHECK(recompose({7, {{2, 1}, {1, 5}}}) == 13);
    CHECK_THROWS_AS(recompose({2, {{65, 1}}}), OverflowError);
}

TEST_CASE("round trip for the first 10 primes, k in [1, 5000]") {
    for (u64 p : first_primes(10)) {
        for (u64 k = 1; k <= 5000; ++k) {
            const auto d = decompose(k, p);
            REQUIRE(d.well_formed());
            REQUIRE(recompose(d) == k);
        }
    }
}

TEST_CASE("round trip near the top of the 64-bit range") {
    for (u64 p : {2ULL, 3ULL, 5ULL, 97ULL, 4294967291ULL, 18446744073709551557ULL}) {
        for (u64 k : {UINT64_MAX, UINT64_MAX - 1, UINT64_MAX / 3, u64{1} << 62}) {
            const auto d = decompose(k, p);
            REQUIRE(d.well_formed());
            REQUIRE(recompose(d) == k);
        }
    }
}

TEST_CASE("a final digit of p means the last repunit divides the remainder exactly") {
    for (u64 p : first_primes(6)) {
        for (u64 k = 1; k <= 3000; ++k) {
            const auto d = decompose(k, p);
            const auto& last = d.terms.back();
            if (last.digit != p) continue;
            RepunitDecomposition head{p, {d.terms.begin(), d.terms.end() - 1}};
            const u64 head_value = head.terms.empty() ? 0 : recompose(head);
            REQUIRE(k - head_value == p * repunit(p, last.exponent));
        }
    }
}

TEST_CASE("enumerate_all_representations examples") {
    auto all = enumerate_all_representations(27, 3, {4});
    REQUIRE(all.size() == 1);
    CHECK(all.front() == decompose(27, 3));

    all = enumerate_all_representations(1, 2, {3});
    REQUIRE(all.size() == 1);
    CHECK(all.front() == RepunitDecomposition{2, {{1, 1}}});

    all = enumerate_all_representations(1000, 5, {6});
    REQUIRE(all.size() == 1);
    CHECK(all.front() == decompose(1000, 5));
}

TEST_CASE("enumeration rejects a candidate with a non-final digit of p") {
    // 7 = 1*a_3 = 2*a_2 + 1*a_1 in base 2; a non-final digit of p is illegal.
    auto all = enumerate_all_representations(7, 2, {4});
    REQUIRE(all.size() == 1);
    CHECK(all.front() == RepunitDecomposition{2, {{3, 1}}});
    CHECK_FALSE(RepunitDecomposition{2, {{2, 2}, {1, 1}}}.well_formed());
    CHECK(recompose({2, {{2, 2}, {1, 1}}}) == 7);
}

TEST_CASE("enumerate_all_representations errors") {
    CHECK_THROWS_AS(enumerate_all_representations(0, 2, {3}), ZeroError);
    CHECK_THROWS_AS(enumerate_all_representations(5, 6, {3}), NotPrimeError);
    CHECK_THROWS_AS(enumerate_all_representations(5, 2, {0}), DomainError);
    CHECK_THROWS_AS(enumerate_all_representations(10000, 7, {8, 100}), BudgetError);
}

TEST_CASE("uniqueness by exhaustive enumeration for p in {2, 3, 5}, k <= 1000") {
    for (u64 p : {2, 3, 5}) {
        for (u64 k = 1; k <= 1000; ++k) {
            const auto all = enumerate_all_representations(k, p, {exponent_bound(k, p)});
            REQUIRE(all.size() == 1);
            REQUIRE(all.front() == decompose(k, p));
        }
    }
}
