#include <doctest.h>

#include <random>

#include "topoarith/fastpath.hpp"
#include "topoarith/topology.hpp"

using namespace topoarith;

TEST_CASE("suffix class membership") {
    CHECK(member(suffix_class("00110"), 6));
    CHECK_FALSE(member(suffix_class("00110"), 22));
    CHECK(member(suffix_class("00110"), 38));
    CHECK(member(suffix_class(""), 12345));
    CHECK_THROWS_AS(member(suffix_class("1"), -1), CarrierMismatch);
    CHECK_FALSE(contains_point(suffix_class("1"), -1));
}

TEST_CASE("signed opens") {
    const BasicOpen minus1 = SignedSuffixClass{DigitString::parse("1"), Sign::negative};
    CHECK(member(minus1, -1));
    CHECK(member(minus1, -7));
    CHECK_FALSE(member(minus1, 1));
    CHECK_FALSE(member(minus1, -2));
    CHECK(member(ZeroTail{3}, 0));
    CHECK(member(ZeroTail{3}, -16));
    CHECK(member(ZeroTail{3}, 8));
    CHECK_FALSE(member(ZeroTail{3}, 4));
    CHECK(member(SignBlock{Sign::positive}, 3));
    CHECK_FALSE(member(SignBlock{Sign::positive}, 0));
}

TEST_CASE("intersection rule") {
    CHECK(intersect_suffix(DigitString::parse("10"), DigitString::parse("110")) == suffix_class("110"));
    CHECK(intersect_suffix(DigitString::parse("1"), DigitString::parse("0")) == BasicOpen(EmptySet{}));
    CHECK(intersect_suffix(DigitString::parse("0101"), DigitString::parse("0101")) == suffix_class("0101"));
    CHECK(meet(WholeSpace{}, suffix_class("1")) == suffix_class("1"));
    CHECK(meet(EmptySet{}, suffix_class("1")) == BasicOpen(EmptySet{}));
    CHECK(meet(Singleton{5}, suffix_class("1")) == BasicOpen(Singleton{5}));
    CHECK(meet(Singleton{4}, suffix_class("1")) == BasicOpen(EmptySet{}));
    CHECK(meet(InitialSegment{4}, InitialSegment{9}) == BasicOpen(InitialSegment{4}));
    CHECK(meet(FinalSegment{4}, FinalSegment{9}) == BasicOpen(FinalSegment{9}));
}

TEST_CASE("suffix classes as variant half-open intervals") {
    auto ro = [](const char* s) { return suffix_class_as_right_open(DigitString::parse(s)); };
    CHECK(ro("110").lo == Integer(6));
    CHECK(ro("110").hi == Integer(1));
    CHECK(ro("00110").lo == Integer(6));
    CHECK(ro("00110").hi == Integer(22));
    CHECK(ro("1").lo == Integer(1));
    CHECK_FALSE(ro("1").hi);
    CHECK(ro("").lo == Integer(0));
    CHECK_FALSE(ro("").hi);
}

TEST_CASE("basic neighborhoods") {
    const TopologySpec fd = FinalDigits{};
    CHECK(basic_nbhd(fd, 6, 5) == suffix_class("00110"));
    CHECK(basic_nbhd(fd, 6) == suffix_class("110"));
    const TopologySpec r17 = Restrict{Discrete{}, 17};
    CHECK(basic_nbhd(r17, 15) == BasicOpen(Singleton{15}));
    CHECK(basic_nbhd(r17, 30) == BasicOpen(WholeSpace{}));
    const TopologySpec iso = IsolateBelow{FinalDigits{}, 17};
    CHECK(basic_nbhd(iso, 3) == BasicOpen(Singleton{3}));
    CHECK(basic_nbhd(iso, 30, 4) == suffix_class("1110"));
    CHECK(basic_nbhd(SignedFinalDigits{}, 0, 3) == BasicOpen(ZeroTail{3}));
    CHECK_THROWS_AS(basic_nbhd(fd, -1), CarrierMismatch);
    // Order neighborhoods shrink as the hint grows and always hold the point.
    for (OrderKind kind : {OrderKind::final_digits, OrderKind::variant, OrderKind::signed_final_digits})
        for (std::int64_t x = kind == OrderKind::signed_final_digits ? -20 : 0; x <= 20; ++x)
            for (std::size_t h = 0; h < 6; ++h) {
                const BasicOpen N = basic_nbhd(OrderTopology{kind}, x, h);
                const BasicOpen M = basic_nbhd(OrderTopology{kind}, x, h + 1);
                REQUIRE(contains_point(N, x));
                for (std::int64_t y = -300; y <= 300; ++y)
                    if (contains_point(M, y)) REQUIRE(contains_point(N, y));
            }
}

TEST_CASE("isolation") {
    CHECK(is_isolated(IsolateBelow{FinalDigits{}, 17}, 15, 8) == Isolation::isolated);
    CHECK(is_isolated(IsolateBelow{FinalDigits{}, 17}, 18, 8) == Isolation::not_isolated);
    CHECK(is_isolated(FinalDigits{}, 6, 16) == Isolation::not_isolated);
    for (std::uint64_t n = 0; n < 300; ++n) REQUIRE(is_isolated(AugmentInitial{FinalDigits{}}, n, 16) == Isolation::isolated);
    CHECK(is_isolated(AugmentInitial{FinalDigits{}}, 1u << 20, 8) == Isolation::inconclusive);
    CHECK(is_isolated(InitialSegments{}, 0, 2) == Isolation::isolated);
    CHECK(is_isolated(InitialSegments{}, 3, 2) == Isolation::not_isolated);
}

TEST_CASE("elements and finite members") {
    const auto xs = elements_up_to(suffix_class("11"), 20, Carrier::naturals);
    CHECK(xs == std::vector<Integer>{3, 7, 11, 15, 19});
    const auto ys = elements_up_to(ZeroTail{2}, 8, Carrier::integers);
    CHECK(ys == std::vector<Integer>{-8, -4, 0, 4, 8});
    CHECK(finite_members(InitialSegment{2}) == std::vector<Integer>{0, 1, 2});
    CHECK_FALSE(finite_members(suffix_class("1")));
    CHECK(finite_members(meet(suffix_class("1"), InitialSegment{6})) == std::vector<Integer>{1, 3, 5});
}

TEST_CASE("canonical text form round-trips") {
    for (const char* text : {"suffix(00110)", "suffix()", "signed-suffix(0110,+)", "sign(-)", "zero-tail(3)",
                             "interval(fd,2,0)", "interval(variant,-inf,6)", "right-open(variant,6,inf)", "initial(17)",
                             "final(17)", "point(15)", "whole", "empty", "meet(suffix(110),initial(17))"})
        CHECK(to_string(parse_basic_open(text)) == text);
    for (const char* text : {"discrete", "restrict(discrete,[0,17])", "blend(discrete,final-digits,[0,17])",
                             "isolate-below(final-digits,17)", "union(final-digits,initial-segments)",
                             "augment-initial(final-digits)", "augment-final(final-digits)", "order(signed)",
                             "right-open(variant)"})
        CHECK(to_string(parse_topology(text)) == text);
    CHECK_THROWS_AS(parse_basic_open("suffix(012)"), ParseError);
    CHECK_THROWS_AS(parse_basic_open("interval(lex,1,2)"), ParseError);
    CHECK_THROWS_AS(parse_topology("restrict(discrete,[1,17])"), ParseError);
    CHECK_THROWS_AS(parse_topology("final-digits extra"), ParseError);
}

TEST_CASE("word-path membership agrees with exact membership") {
    std::mt19937_64 rng(7);
    std::vector<BasicOpen> opens{suffix_class("0110"),
                                 suffix_class(""),
                                 SignedSuffixClass{DigitString::parse("101"), Sign::negative},
                                 SignBlock{Sign::negative},
                                 ZeroTail{4},
                                 OrderInterval{OrderKind::final_digits, Integer(2), Integer(0)},
                                 OrderInterval{OrderKind::variant, std::nullopt, Integer(6)},
                                 OrderInterval{OrderKind::signed_final_digits, Integer(-3), Integer(5)},
                                 RightOpenInterval{OrderKind::variant, Integer(6), Integer(22)},
                                 InitialSegment{17},
                                 FinalSegment{17},
                                 Singleton{-4},
                                 WholeSpace{},
                                 EmptySet{},
                                 meet(suffix_class("1"), InitialSegment{100}),
                                 OrderInterval{OrderKind::final_digits, Integer(Natural::pow2(70)), std::nullopt}};
    for (const auto& U : opens) {
        const FastMember fast(U);
        for (int i = 0; i < 4000; ++i) {
            const std::int64_t x = static_cast<std::int64_t>(rng() % 4001) - 2000;
            REQUIRE(fast(x) == contains_point(U, x));
            REQUIRE(fast(Integer(x)) == contains_point(U, x));
        }
    }
}
