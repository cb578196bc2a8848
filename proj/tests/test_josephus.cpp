#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"

#include "josnim/errors.hpp"
#include "josnim/josephus.hpp"

using namespace josnim;

using Seq = std::vector<std::uint64_t>;

TEST_CASE("elimination order examples") {
    CHECK(elimination_order(1).sequence() == Seq{1});
    CHECK(elimination_order(2).sequence() == Seq{2, 1});
    CHECK(elimination_order(3).sequence() == Seq{2, 1, 3});
    CHECK(elimination_order(5).sequence() == Seq{2, 4, 1, 5, 3});
    CHECK(elimination_order(7).sequence() == Seq{2, 4, 6, 1, 5, 3, 7});
    CHECK_THROWS_AS(elimination_order(0), DomainError);
    CHECK_THROWS_AS(elimination_order_naive(0), DomainError);

    const EliminationOrder o = elimination_order(5);
    CHECK(o.at(1) == 2);
    CHECK(o.at(5) == 3);
    CHECK(o.survivor() == 3);
    CHECK_THROWS_AS(o.at(0), DomainError);
    CHECK_THROWS_AS(o.at(6), DomainError);
}

TEST_CASE("elimination order agrees with two references") {
    for (std::uint64_t v = 1; v <= 300; ++v) {
        const EliminationOrder o = elimination_order(v);
        REQUIRE(o.sequence() == oracle::josephus(v));
        REQUIRE(o == elimination_order_naive(v));
    }
}

TEST_CASE("elimination order is a permutation that starts with the even numbers") {
    for (std::uint64_t v = 1; v <= 1000; ++v) {
        Seq e = elimination_order(v).sequence();
        for (std::uint64_t i = 0; i < v / 2; ++i) REQUIRE(e[i] == 2 * (i + 1));
        std::sort(e.begin(), e.end());
        Seq iota(v);
        std::iota(iota.begin(), iota.end(), 1);
        REQUIRE(e == iota);
    }
}

TEST_CASE("F_s by simulation") {
    CHECK(f_s_simulated({0, 1}) == 1);
    CHECK(f_s_simulated({0, 5}) == 3);
    CHECK(f_s_simulated({3, 7}) == 1);
    CHECK(f_s_simulated({3, 5}) == 4);
    CHECK_THROWS_AS(f_s_simulated({5, 5}), DomainError);
}

TEST_CASE("F_s closed form") {
    CHECK(f_s_closed({0, 5}) == 3);
    CHECK(f_s_closed({3, 7}) == 1);
    CHECK(f_s_closed({2, 7}) == 5);
    CHECK(f_s_closed({3, 5}) == 4);
    CHECK_THROWS_AS(f_s_closed({7, 3}), DomainError);
}

TEST_CASE("F_s recursion") {
    CHECK(f_s_recursive({1, 6}) == 1);
    CHECK(f_s_recursive({1, 7}) == 3);
    CHECK(f_s_recursive({0, 2}) == 1);
    CHECK_THROWS_AS(f_s_recursive({2, 2}), DomainError);
}

TEST_CASE("three F_s routes agree against the list reference") {
    for (std::uint64_t v = 1; v <= 400; ++v) {
        const Seq e = oracle::josephus(v);
        for (std::uint64_t s = 0; s < v; ++s) {
            const std::uint64_t expected = e[v - s - 1];
            REQUIRE(f_s_closed({s, v}) == expected);
            REQUIRE(f_s_recursive({s, v}) == expected);
        }
    }
}

TEST_CASE("survivor") {
    CHECK(survivor(1) == 1);
    CHECK(survivor(5) == 3);
    CHECK(survivor(7) == 7);
    CHECK_THROWS_AS(survivor(0), DomainError);
    // Classical form: v = 2^n + L with 0 <= L < 2^n gives 2L + 1.
    for (std::uint64_t v = 1; v <= 5000; ++v) {
        std::uint64_t top = 1;
        while (top * 2 <= v) top *= 2;
        REQUIRE(survivor(v) == 2 * (v - top) + 1);
    }
}

TEST_CASE("odd-block decomposition exists and is unique") {
    for (std::uint64_t s = 0; s <= 40; ++s) {
        for (std::uint64_t v = 2 * s + 1; v <= 3000; ++v) {
            int found = 0;
            OddBlockDecomposition match;
            for (std::uint64_t n = 0; ((2 * s + 1) << n) <= v; ++n) {
                const std::uint64_t base = (2 * s + 1) << n;
                if (v - base <= base - 1) {
                    ++found;
                    match = {n, v - base};
                }
            }
            REQUIRE(found == 1);
            REQUIRE(decompose(s, v) == match);
        }
    }
    CHECK_THROWS_AS(decompose(3, 6), DomainError);
}

TEST_CASE("closed form handles large circles") {
    const std::uint64_t v = (std::uint64_t{1} << 40) + 12345;
    CHECK(survivor(v) == 2 * 12345 + 1);
    CHECK(f_s_recursive({0, v}) == survivor(v));
    CHECK(f_s_closed({3, v}) == f_s_recursive({3, v}));
}
