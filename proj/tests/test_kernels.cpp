#include <doctest.h>

#include "topoarith/kernels.hpp"

using namespace topoarith;

namespace {

void same(const KernelResult& a, const KernelResult& b) {
    CHECK(a.checked == b.checked);
    CHECK(a.failures == b.failures);
    CHECK(a.counterexample == b.counterexample);
}

}  // namespace

TEST_CASE("serial and parallel kernels agree") {
    for (auto exec : {Execution::serial, Execution::parallel}) {
        CHECK(numeral_round_trip(4096, exec).ok());
        CHECK(ultrametric(64, exec).ok());
        CHECK(metric_suffix_equivalence(256, 8, exec).ok());
        CHECK(parity_blocks(1024, exec).ok());
        CHECK(residue_modulus(6, exec).ok());
        CHECK(suffix_ball_residue(6, 1024, exec).ok());
        CHECK(intersection_rule(5, 1024, exec).ok());
        CHECK(right_open_characterization(6, 1024, exec).ok());
    }
    for (OrderKind k : {OrderKind::final_digits, OrderKind::variant, OrderKind::signed_final_digits}) {
        same(order_trichotomy(k, 256, Execution::serial), order_trichotomy(k, 256, Execution::parallel));
        same(order_transitivity(k, 256, 5000, 3, Execution::serial),
             order_transitivity(k, 256, 5000, 3, Execution::parallel));
        same(oracle_agreement(k, 512, Execution::serial), oracle_agreement(k, 512, Execution::parallel));
    }
}

TEST_CASE("the reported counterexample is the first one in loop order") {
    auto w = witness_final_digits(Operation::mul, 3, 5, 4);
    w.neighborhoods[1] = suffix_class("1");
    const auto s = witness_soundness(w, 512, Execution::serial);
    const auto p = witness_soundness(w, 512, Execution::parallel);
    REQUIRE_FALSE(s.ok());
    same(s, p);
    CHECK(s.counterexample == "(3,1)");
}

TEST_CASE("digit strings") {
    CHECK(digit_strings(0).size() == 1);
    const auto xs = digit_strings(3);
    REQUIRE(xs.size() == 8);
    CHECK(xs[0].str() == "000");
    CHECK(xs[5].str() == "101");
}
