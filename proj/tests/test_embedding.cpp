#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "topoarith/embedding.hpp"
#include "topoarith/kernels.hpp"
#include "topoarith/reference.hpp"

using namespace topoarith;

TEST_CASE("rational enumeration") {
    const char* first[] = {"0", "1", "-1", "1/2", "-1/2", "2", "-2", "1/3", "-1/3", "3/2", "-3/2"};
    for (std::uint64_t i = 0; i < 11; ++i) CHECK(to_string(enumerate_rational(i)) == first[i]);
    for (std::uint64_t i = 1; i < 3000; ++i) {
        const auto f = oracle::calkin_wilf(i);
        REQUIRE(calkin_wilf(i) == Rational(f.p, f.q));
        REQUIRE(calkin_wilf_index(Rational(f.p, f.q)) == Natural(i));
    }
    for (std::uint64_t i = 0; i < 3000; ++i) REQUIRE(rational_index(enumerate_rational(i)) == Natural(i));
}

TEST_CASE("simplest rational matches the enumeration scan") {
    for (int a = -12; a <= 12; ++a)
        for (int b = 1; b <= 6; ++b)
            for (int c = -12; c <= 12; ++c)
                for (int d = 1; d <= 6; ++d) {
                    const Rational lo(a, b), hi(c, d);
                    if (!(lo < hi)) continue;
                    REQUIRE(simplest_between(lo, hi) == *reference::first_rational_scan(lo, hi, 10'000'000));
                }
    CHECK(simplest_between(std::nullopt, std::nullopt) == 0);
    CHECK(simplest_between(Rational(1), std::nullopt) == 2);
    CHECK(simplest_between(std::nullopt, Rational(-1)) == -2);
}

TEST_CASE("back-and-forth schedule") {
    BackAndForth bf;
    CHECK(bf.embed(0) == 0);
    bf.run(5);
    CHECK(bf.image(1) == Rational(1));
    CHECK(bf.image(2) == Rational(-1));
    CHECK(bf.image(5) == Rational(1, 2));
    CHECK(bf.image(3) == Rational(2));
    CHECK(bf.log()[3].n == Natural(5));
    CHECK_FALSE(bf.log()[3].forth);
    CHECK(bf.inverse(Rational(1, 2)) == Natural(5));
    CHECK(transported_add(1, -1, bf) == 2);
}

TEST_CASE("back-and-forth is an order isomorphism with the promised progress") {
    BackAndForth bf;
    bf.run(600);
    const auto& fwd = bf.forward();
    for (auto it = fwd.begin(); std::next(it) != fwd.end(); ++it) REQUIRE(it->second < std::next(it)->second);
    for (std::uint64_t n = 0; n < 299; ++n) REQUIRE(bf.image(n));
    for (std::uint64_t i = 0; i < 299; ++i) REQUIRE(bf.preimage(enumerate_rational(i)));
    BackAndForth again;
    for (std::uint64_t n = 0; n < 100; ++n) {
        again.embed(n);
        REQUIRE(again.steps() <= 2 * n + 2);
    }
}

TEST_CASE("scan and direct strategies agree") {
    BackAndForth fast(Strategy::direct), slow(Strategy::scan);
    fast.run(200);
    slow.run(200);
    for (std::size_t t = 0; t < 200; ++t) {
        REQUIRE(fast.log()[t].n == slow.log()[t].n);
        REQUIRE(fast.log()[t].q == slow.log()[t].q);
    }
}

TEST_CASE("budgets") {
    BackAndForth bf;
    bf.max_steps = 10;
    CHECK_THROWS_AS(bf.embed(100), BudgetExceeded);
    BackAndForth scan(Strategy::scan, 5);
    CHECK_THROWS_AS(scan.run(20), BudgetExceeded);
}

TEST_CASE("transported arithmetic") {
    BackAndForth bf;
    const Rational zero = bf.embed(0), one = bf.embed(1);
    for (std::uint64_t a = 0; a < 30; ++a) {
        const Rational q = bf.embed(a);
        REQUIRE(transported_add(q, zero, bf) == q);
        REQUIRE(transported_mul(q, one, bf) == q);
        for (std::uint64_t b = 0; b < 30; ++b) REQUIRE(transported_add(q, bf.embed(b), bf) == bf.embed(a + b));
    }
}

TEST_CASE("pairing") {
    CHECK(pair_cantor(0, 0) == Natural(0));
    CHECK(pair_double(0, 0) == Natural(0));
    CHECK(pair_cantor(1, 2) == Natural(8));
    CHECK(pair_double(1, 2) == Natural(16));
    std::set<std::uint64_t> seen;
    for (std::uint64_t n = 0; n < 100; ++n)
        for (std::uint64_t m = 0; m < 100; ++m) {
            REQUIRE(pair_double(n, m) == Natural(oracle::pair_double(n, m)));
            REQUIRE(seen.insert(oracle::pair_double(n, m)).second);
            const auto [a, b] = unpair_cantor(pair_cantor(n, m));
            REQUIRE(a == Natural(n));
            REQUIRE(b == Natural(m));
        }
}

TEST_CASE("pairing witnesses") {
    const auto w = witness_pairing(1, 2, 4);
    CHECK(w.op == Operation::pairing);
    CHECK(w.target == suffix_class("0000"));
    CHECK(w.neighborhoods[0] == suffix_class("0001"));
    CHECK(w.neighborhoods[1] == suffix_class("0010"));
    CHECK_FALSE(w.components.empty());
    CHECK(witness_soundness(w, 1024, Execution::serial).ok());
    const auto z = witness_pairing(0, 0, 3);
    CHECK(z.neighborhoods[0] == suffix_class("000"));
    CHECK(z.neighborhoods[1] == suffix_class("000"));
    for (std::uint64_t n = 0; n <= 16; ++n)
        for (std::uint64_t m = 0; m <= 16; ++m)
            for (std::size_t k = 0; k <= 6; ++k) REQUIRE(check_witness(witness_pairing(n, m, k), 64).sound());
}
