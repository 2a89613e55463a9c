#include <doctest.h>

#include "topoarith/continuity.hpp"
#include "topoarith/kernels.hpp"

using namespace topoarith;

TEST_CASE("apply respects the carrier") {
    CHECK(apply(Operation::sub, {3, 5}) == std::nullopt);
    CHECK(apply(Operation::sub, {3, 5}, Carrier::integers) == Integer(-2));
    CHECK(apply(Operation::halving, {31}) == std::nullopt);
    CHECK(apply(Operation::halving, {30}) == Integer(15));
    CHECK(apply(Operation::predecessor, {0}) == std::nullopt);
    CHECK(apply(Operation::translate, {6}, Carrier::naturals, 12) == Integer(18));
    CHECK(apply(Operation::pairing, {1, 2}) == Integer(16));
    CHECK(arity(Operation::add) == 2);
    CHECK(arity(Operation::successor) == 1);
    CHECK(parse_operation("mul") == Operation::mul);
    CHECK_THROWS(parse_operation("div"));
}

TEST_CASE("residue modulus") {
    CHECK(modulus_residue(Operation::add, 3) == 3);
    CHECK(residue_image(Operation::add, 5, 3, 3) == 0u);
    CHECK(residue_image(Operation::mul, 5, 3, 3) == 7u);
    CHECK(residue_image(Operation::add, 0, 0, 0) == 0u);
    CHECK_THROWS(modulus_residue(Operation::halving, 3));
    // Every lift of (5, 3) mod 8 lands in the same residue.
    for (std::uint64_t i = 0; i < 20; ++i)
        for (std::uint64_t j = 0; j < 20; ++j) {
            REQUIRE((5 + 8 * i + 3 + 8 * j) % 8 == 0);
            REQUIRE((5 + 8 * i) * (3 + 8 * j) % 8 == 7);
        }
}

TEST_CASE("final-digits witnesses") {
    auto w = witness_final_digits(Operation::mul, 6, 5, 4);
    CHECK(w.neighborhoods[0] == suffix_class("0110"));
    CHECK(w.neighborhoods[1] == suffix_class("0101"));
    CHECK(w.target == suffix_class("1110"));
    CHECK(w.justification == Justification::residue_modulus);
    w = witness_final_digits(Operation::add, 0, 0, 4);
    CHECK(w.target == suffix_class("0000"));
    CHECK(w.neighborhoods[0] == suffix_class("0000"));
    w = witness_final_digits(Operation::add, 1261, 153, 3);
    CHECK(w.target == BasicOpen(SuffixClass{suffix(1414, 3)}));
    CHECK(check_witness(w, 2000).sound());
    CHECK_THROWS_AS(witness_final_digits(Operation::sub, 3, 5, 2), Underflow);
}

TEST_CASE("segment witnesses") {
    auto w = witness_segment(Operation::add, InitialSegments{}, 3, 4, 10);
    CHECK(w.neighborhoods[0] == BasicOpen(InitialSegment{3}));
    CHECK(w.neighborhoods[1] == BasicOpen(InitialSegment{4}));
    CHECK(w.target == BasicOpen(InitialSegment{10}));
    w = witness_segment(Operation::mul, FinalSegments{}, 3, 4, 12);
    CHECK(w.neighborhoods[0] == BasicOpen(FinalSegment{3}));
    CHECK(w.target == BasicOpen(FinalSegment{12}));
    CHECK(check_witness(w, 200).sound());
    w = witness_segment(Operation::add, InitialSegments{}, 0, 0, 0);
    CHECK(w.target == BasicOpen(InitialSegment{0}));
    CHECK_THROWS_AS(witness_segment(Operation::add, InitialSegments{}, 3, 4, 6), PreconditionViolation);
    CHECK_THROWS_AS(witness_segment(Operation::add, FinalDigits{}, 3, 4, 6), UnsupportedSpec);
}

TEST_CASE("blend witnesses") {
    const TopologySpec iso = IsolateBelow{FinalDigits{}, 17};
    auto w = witness_blend(Operation::add, iso, 3, 5, Singleton{8});
    CHECK(w.neighborhoods[0] == BasicOpen(Singleton{3}));
    CHECK(w.neighborhoods[1] == BasicOpen(Singleton{5}));
    CHECK(w.justification == Justification::isolated_point);
    // {0} x M is the neighborhood that contains (0, 100).
    w = witness_blend(Operation::mul, iso, 0, 100, Singleton{0});
    CHECK(w.neighborhoods[0] == BasicOpen(Singleton{0}));
    CHECK(w.neighborhoods[1] == BasicOpen(WholeSpace{}));
    CHECK(w.justification == Justification::zero_section);
    CHECK(witness_soundness(w, 4096, Execution::serial).ok());
    const TopologySpec restricted = Restrict{FinalDigits{}, 40};
    w = witness_blend(Operation::add, restricted, 5, 9, meet(suffix_class("10"), InitialSegment{40}));
    // 37 + 9 leaves [0, 40), so only the singletons work.
    CHECK(w.justification == Justification::isolated_point);
    CHECK(witness_soundness(w, 4096, Execution::serial).ok());
    CHECK_THROWS_AS(witness_blend(Operation::add, iso, 3, 5, Singleton{9}), PreconditionViolation);
    CHECK_THROWS_AS(witness_blend(Operation::add, FinalDigits{}, 3, 5, Singleton{8}), UnsupportedSpec);
}

TEST_CASE("translate witnesses") {
    auto w = witness_translate(1, 1, 2);
    CHECK(w.neighborhoods[0] == suffix_class("01"));
    CHECK(w.target == suffix_class("10"));
    w = witness_translate(12, 6, 3);
    CHECK(w.neighborhoods[0] == suffix_class("110"));
    CHECK(w.target == suffix_class("010"));
    CHECK(check_witness(w, 1000).sound());
    w = witness_translate(0, 9, 4);
    CHECK(w.neighborhoods[0] == w.target);
}

TEST_CASE("union lemma") {
    const auto a = witness_final_digits(Operation::add, 3, 4, 2);
    const auto b = witness_segment(Operation::add, InitialSegments{}, 3, 4, 9);
    const auto u = combine_union(a, b);
    CHECK(u.neighborhoods[0] == meet(a.neighborhoods[0], b.neighborhoods[0]));
    CHECK(u.target == meet(a.target, b.target));
    CHECK(u.components.size() == 2);
    CHECK(check_witness(u, 100).sound());
    CHECK_THROWS_AS(combine_union(a, witness_final_digits(Operation::add, 3, 5, 2)), PreconditionViolation);
}

TEST_CASE("check_witness finds a planted counterexample") {
    auto w = witness_final_digits(Operation::add, 3, 4, 3);
    w.neighborhoods[0] = suffix_class("1");  // too coarse
    const auto r = check_witness(w, 64);
    REQUIRE_FALSE(r.sound());
    CHECK(!contains_point(w.target, *apply(w.op, *r.counterexample)));
    CHECK_FALSE(witness_soundness(w, 64, Execution::serial).ok());
    CHECK_FALSE(witness_soundness(w, 64, Execution::parallel).ok());
}

TEST_CASE("variant successor refuter") {
    CHECK(refute_variant_successor({OrderKind::variant, Integer(0), Integer(3)}) == Integer(2));
    CHECK(refute_variant_successor({OrderKind::variant, Integer(2), Integer(5)}) == Integer(6));
    CHECK_THROWS_AS(refute_variant_successor({OrderKind::variant, Integer(2), Integer(0)}), PreconditionViolation);
    const auto w = variant_successor_witness();
    const BasicOpen unit = OrderInterval{OrderKind::variant, Integer(0), Integer(1)};
    CHECK(w.target == unit);
    CHECK(contains_point(unit, 2));
    for (std::int64_t o = 1; o <= (1 << 16); o += 2) REQUIRE_FALSE(contains_point(unit, o));
    for (std::size_t h = 0; h < 20; ++h)
        REQUIRE(validate_refutation(w, basic_nbhd(OrderTopology{OrderKind::variant}, 1, h)));
}

TEST_CASE("restrict17 refuters") {
    Integer e;
    CHECK(validate_refutation(refute_restrict17(Restrict17Case::halving_at_30), WholeSpace{}, &e));
    CHECK(e == Integer(36));
    CHECK(validate_refutation(refute_restrict17(Restrict17Case::predecessor_at_18), WholeSpace{}, &e));
    CHECK(e == Integer(20));
    // Every open of restrict(discrete,[0,17]) around 30 holds 36.
    for (std::size_t h = 0; h < 10; ++h) CHECK(contains_point(basic_nbhd(Restrict{Discrete{}, 17}, 30, h), 36));
    CHECK_THROWS_AS(refute_restrict17(Restrict17Case::halving_at_30).refuter(Singleton{15}), PreconditionViolation);
}

TEST_CASE("probes") {
    ProbeParams p;
    p.sample_bound = 512;
    const auto ok = probe_continuity(Operation::add, FinalDigits{}, {6, 5}, suffix_class("011"), p);
    CHECK(ok.witness_found);
    CHECK(ok.escapes.empty());
    const auto bad = probe_continuity(Operation::add, SignedFinalDigits{}, {1, -2},
                                      SignedSuffixClass{DigitString::parse("1"), Sign::negative}, p);
    CHECK_FALSE(bad.witness_found);
    CHECK_FALSE(bad.escapes.empty());
    for (const auto& e : bad.escapes) CHECK(!contains_point(SignedSuffixClass{DigitString::parse("1"), Sign::negative}, e[0] + e[1]));
    const auto succ = probe_continuity(Operation::successor, OrderTopology{OrderKind::variant}, {1},
                                       variant_successor_witness().target, p);
    CHECK_FALSE(succ.witness_found);
    CHECK_THROWS_AS(probe_continuity(Operation::add, FinalDigits{}, {6, 5}, suffix_class("0"), p), PreconditionViolation);
}

TEST_CASE("order topology probe") {
    auto r = probe_order_topology(DigitString::parse("110"), 12);
    CHECK(r.residue_match);
    CHECK(r.convention_role == ExtremeRole::interior);
    r = probe_order_topology(DigitString::parse("0110"), 12);
    CHECK(r.convention_role == ExtremeRole::maximum);
    r = probe_order_topology(DigitString::parse("00110"), 12);
    CHECK(r.residue_match);
    CHECK_THROWS_AS(probe_order_topology(DigitString::parse("1"), 25), PreconditionViolation);
}
