#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "topoarith/orders.hpp"
#include "topoarith/reference.hpp"

using namespace topoarith;

TEST_CASE("final-digits comparator") {
    CHECK(fd_cmp(Natural(2), Natural(0)) < 0);
    CHECK(fd_cmp(Natural(0), Natural(1)) < 0);
    CHECK(fd_cmp(Natural(5), Natural(1)) < 0);
    CHECK(fd_cmp(Natural(1), Natural(3)) < 0);
    CHECK(fd_cmp(Natural(9), Natural(9)) == 0);
}

TEST_CASE("variant comparator") {
    for (std::uint64_t n = 1; n < 500; ++n) REQUIRE(variant_cmp(Natural(0), Natural(n)) < 0);
    CHECK(variant_cmp(Natural(2), Natural(1)) < 0);
    CHECK(variant_cmp(Natural(2), Natural(6)) < 0);
}

TEST_CASE("signed comparator") {
    CHECK(signed_cmp(Integer(-1), Integer(0)) < 0);
    CHECK(signed_cmp(Integer(0), Integer(1)) < 0);
    CHECK(signed_cmp(Integer(-3), Integer(-1)) < 0);
    CHECK(signed_cmp(Integer(5), Integer(1)) < 0);
}

TEST_CASE("comparators match the string oracles") {
    for (std::uint64_t a = 0; a < 300; ++a)
        for (std::uint64_t b = 0; b < 300; ++b) {
            REQUIRE((fd_cmp(Natural(a), Natural(b)) < 0) == oracle::fd_less(a, b));
            REQUIRE((fd_cmp(a, b) < 0) == oracle::fd_less(a, b));
            REQUIRE((variant_cmp(Natural(a), Natural(b)) < 0) == oracle::variant_less(a, b));
            REQUIRE((variant_cmp(a, b) < 0) == oracle::variant_less(a, b));
            REQUIRE((fd_cmp(a, b) < 0) == oracle::rank3_less(a, b));
        }
    for (std::int64_t x = -150; x <= 150; ++x)
        for (std::int64_t y = -150; y <= 150; ++y) {
            REQUIRE((signed_cmp(Integer(x), Integer(y)) < 0) == oracle::signed_less(x, y));
            REQUIRE((signed_cmp(x, y) < 0) == oracle::signed_less(x, y));
        }
}

TEST_CASE("rank maps") {
    CHECK(rank3(0) == Rational(1, 3));
    CHECK(rank3(1) == Rational(7, 9));
    CHECK(rank3(2) == Rational(7, 27));
    CHECK(rankv(0) == 0);
    CHECK(rankv(1) == Rational(1, 2));
    CHECK(rankv(6) == Rational(3, 8));
    CHECK(ranks(0) == 0);
    CHECK(ranks(1) == Rational(7, 9));
    CHECK(ranks(-3) == Rational(-25, 27));
    for (std::uint64_t n = 0; n < 200; ++n) {
        auto [p, q] = oracle::rank3(n);
        REQUIRE(rank3(n) == Rational(BigInt(static_cast<std::int64_t>(p)), BigInt(static_cast<std::int64_t>(q))));
        REQUIRE(natural_of_variant_rank(rankv(n)) == Natural(n));
    }
}

TEST_CASE("between") {
    CHECK(between(OrderKind::final_digits, 2, 0) == Integer(6));
    CHECK(between(OrderKind::final_digits, 0, 1) == Integer(5));
    CHECK(between(OrderKind::variant, 0, 1) == Integer(2));
    CHECK_THROWS_AS(between(OrderKind::final_digits, 1, 0), EmptyInterval);
    CHECK_THROWS_AS(between(OrderKind::signed_final_digits, 4, 4), EmptyInterval);
    CHECK_THROWS_AS(between(OrderKind::variant, -1, 4), CarrierMismatch);
}

TEST_CASE("least_in_interval matches a brute-force scan") {
    for (OrderKind kind : {OrderKind::final_digits, OrderKind::variant, OrderKind::signed_final_digits}) {
        const std::int64_t lo_v = kind == OrderKind::signed_final_digits ? -40 : 0;
        for (std::int64_t a = lo_v; a <= 40; ++a)
            for (std::int64_t b = lo_v; b <= 40; ++b) {
                const auto fast = least_in_interval(kind, Integer(a), Integer(b));
                if (order_cmp(kind, Integer(a), Integer(b)) >= 0) {
                    REQUIRE_FALSE(fast);
                    continue;
                }
                // Answers for bounds this small have at most 8 digits.
                REQUIRE(fast == reference::least_in_interval_scan(kind, Integer(a), Integer(b), 4096));
            }
        for (std::int64_t a = lo_v; a <= 40; ++a) {
            REQUIRE(least_in_interval(kind, Integer(a), std::nullopt) ==
                    reference::least_in_interval_scan(kind, Integer(a), std::nullopt, 4096));
            REQUIRE(least_in_interval(kind, std::nullopt, Integer(a)) ==
                    reference::least_in_interval_scan(kind, std::nullopt, Integer(a), 4096));
        }
    }
    CHECK_FALSE(least_in_interval(OrderKind::variant, std::nullopt, Integer(0)));
}

TEST_CASE("unbounded witnesses") {
    auto u = unbounded_witnesses(OrderKind::final_digits, 0);
    CHECK(u.below == Integer(2));
    CHECK(u.above == Integer(1));
    u = unbounded_witnesses(OrderKind::variant, 0);
    CHECK_FALSE(u.below);
    CHECK(u.above == Integer(1));
    u = unbounded_witnesses(OrderKind::signed_final_digits, 0);
    CHECK(u.below == Integer(-1));
    CHECK(u.above == Integer(1));
}

TEST_CASE("order kinds parse") {
    CHECK(parse_order_kind("fd") == OrderKind::final_digits);
    CHECK(parse_order_kind("variant") == OrderKind::variant);
    CHECK(parse_order_kind("signed") == OrderKind::signed_final_digits);
    CHECK_THROWS(parse_order_kind("lex"));
}

TEST_CASE("std::map keyed by the final-digits order") {
    std::vector<Natural> xs;
    for (std::uint64_t n = 0; n < 32; ++n) xs.emplace_back(n);
    std::sort(xs.begin(), xs.end(), FinalDigitsLess{});
    CHECK(xs.front() == Natural(16));
    CHECK(xs[15] == Natural(0));
    CHECK(xs.back() == Natural(31));
}
