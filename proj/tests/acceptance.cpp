// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "topoarith/embedding.hpp"
#include "topoarith/kernels.hpp"
#include "topoarith/render.hpp"
#include "topoarith/suites.hpp"

using namespace topoarith;

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
    void require(const KernelResult& r, const std::string& what) {
        require(r.ok(), what + ": " + r.counterexample.value_or("?"));
    }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Verdict()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v.ok = false;
        v.detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (v.ok && limit_s > 0 && s > limit_s) {
        v.ok = false;
        v.detail = "took " + std::to_string(s) + " s";
    }
    if (!v.ok) ++failures;
    std::printf("%s %2d %s (%.1f s)%s%s\n", v.ok ? "PASS" : "FAIL", id, title, s, v.detail.empty() ? "" : ": ",
                v.detail.c_str());
    std::fflush(stdout);
}

constexpr OrderKind kinds[] = {OrderKind::final_digits, OrderKind::variant, OrderKind::signed_final_digits};

Verdict order_axioms() {
    Verdict v;
    for (OrderKind k : kinds) {
        v.require(order_trichotomy(k, 1u << 12, Execution::parallel), "trichotomy");
        v.require(order_transitivity(k, 1u << 12, 100000, 1, Execution::parallel), "transitivity");
    }
    // The string-rule oracle on a corner of the same range.
    for (std::uint64_t a = 0; a < 512; ++a)
        for (std::uint64_t b = 0; b < 512; ++b) v.require((fd_cmp(a, b) < 0) == oracle::fd_less(a, b), "fd vs digit rule");
    return v;
}

Verdict oracle_agreement_all() {
    Verdict v;
    for (OrderKind k : kinds) v.require(oracle_agreement(k, 1u << 14, Execution::parallel), "oracle agreement");
    return v;
}

Verdict figure_fidelity() {
    Verdict v;
    std::vector<std::uint64_t> by_cmp(32), by_position(32);
    for (std::uint64_t n = 0; n < 32; ++n) by_cmp[n] = by_position[n] = n;
    std::sort(by_cmp.begin(), by_cmp.end(), [](auto a, auto b) { return fd_cmp(a, b) < 0; });
    // Position sum d_i 2^(5-i) + 2^(4-len), doubled to stay integral.
    auto position = [](std::uint64_t n) {
        std::uint64_t p = 0;
        const int len = oracle::length(n);
        for (int i = 1; i <= len; ++i) p += ((n >> (i - 1)) & 1) << (6 - i);
        return p + (std::uint64_t{1} << (5 - len));
    };
    std::stable_sort(by_position.begin(), by_position.end(), [&](auto a, auto b) { return position(a) < position(b); });
    v.require(by_cmp == by_position, "fd sort of 0..31 differs from the figure positions");
    const auto leaves = label_sequence(OrderKind::final_digits, 5);
    v.require(std::equal(leaves.begin(), leaves.end(), by_cmp.begin(),
                         [](const Integer& a, std::uint64_t b) { return a == Integer(static_cast<std::int64_t>(b)); }),
              "rendered fd leaves differ");
    v.require(label_sequence(OrderKind::variant, 5).front() == Integer(0), "variant render does not start at 0");
    std::uint64_t vmin = 1, umin = 14;
    for (std::uint64_t x = 0; x <= (1u << 16); ++x) {
        if (variant_cmp(x, vmin) < 0) vmin = x;
        if (x % 8 == 6 && variant_cmp(x, umin) < 0) umin = x;
    }
    v.require(vmin == 0, "variant minimum is " + std::to_string(vmin));
    v.require(umin == 6, "minimum of U_110 is " + std::to_string(umin));
    return v;
}

Verdict school_child_modulus() {
    Verdict v;
    v.require(residue_modulus(10, Execution::parallel), "residue modulus");
    // Direct element check for small k: every pair of lifts of each residue pair.
    for (std::uint64_t k = 1; k <= 5; ++k) {
        const std::uint64_t m = 1u << k;
        for (std::uint64_t a = 0; a < m; ++a)
            for (std::uint64_t b = 0; b < m; ++b) {
                const auto sum = residue_image(Operation::add, a, b, k);
                const auto prod = residue_image(Operation::mul, a, b, k);
                for (std::uint64_t i = 0; i < 4; ++i)
                    for (std::uint64_t j = 0; j < 4; ++j) {
                        const std::uint64_t x = a + m * i, y = b + m * j;
                        v.require(sum && (x + y) % m == *sum, "sum residue");
                        v.require(prod && (x * y) % m == *prod, "product residue");
                    }
            }
    }
    return v;
}

Verdict ball_suffix_residue() {
    Verdict v;
    v.require(suffix_ball_residue(8, 1u << 16, Execution::parallel), "ball/suffix/residue");
    v.require(intersection_rule(8, 1u << 16, Execution::parallel), "intersection rule");
    v.require(intersect_suffix(DigitString::parse("1"), DigitString::parse("0")) == BasicOpen(EmptySet{}), "U_1 meet U_0");
    return v;
}

Verdict right_open() {
    Verdict v;
    v.require(right_open_characterization(8, 1u << 16, Execution::parallel), "right-open");
    const auto r = suffix_class_as_right_open(DigitString::parse("00110"));
    v.require(r.lo == Integer(6) && r.hi == Integer(22), "U_00110 = [6,22)");
    return v;
}

Verdict witness_soundness_all() {
    Verdict v;
    std::mt19937_64 rng(12);
    auto pick = [&](std::uint64_t n) { return rng() % n; };
    std::vector<ContinuityWitness> ws;
    for (int i = 0; i < 30; ++i) {
        Natural x(pick(4097)), y(pick(4097));
        const Operation op = i % 3 == 0 ? Operation::add : i % 3 == 1 ? Operation::mul : Operation::sub;
        if (op == Operation::sub && x < y) std::swap(x, y);
        ws.push_back(witness_final_digits(op, x, y, 1 + pick(8)));
    }
    for (int i = 0; i < 10; ++i) {
        const Natural x(pick(50)), y(pick(50));
        ws.push_back(witness_segment(Operation::add, InitialSegments{}, x, y, x + y + Natural(pick(5))));
        ws.push_back(witness_segment(Operation::mul, FinalSegments{}, x, y, x * y));
    }
    const TopologySpec iso = IsolateBelow{FinalDigits{}, 17};
    ws.push_back(witness_blend(Operation::add, iso, 3, 5, Singleton{8}));
    ws.push_back(witness_blend(Operation::mul, iso, 0, 100, Singleton{0}));
    ws.push_back(witness_blend(Operation::add, iso, 30, 7, suffix_class("101")));
    ws.push_back(witness_blend(Operation::add, Restrict{FinalDigits{}, 60}, 9, 12, meet(suffix_class("01"), InitialSegment{60})));
    ws.push_back(witness_blend(Operation::mul, Blend{Discrete{}, FinalDigits{}, 17}, 4, 3, meet(suffix_class("100"), InitialSegment{17})));
    for (int i = 0; i < 10; ++i) ws.push_back(witness_translate(Natural(pick(64)), Natural(pick(4097)), 1 + pick(8)));
    for (int i = 0; i < 10; ++i) ws.push_back(witness_pairing(Natural(pick(4097)), Natural(pick(4097)), 3 + pick(6)));
    std::uint64_t checked = 0;
    for (const auto& w : ws) {
        const auto r = witness_soundness(w, 1u << 12, Execution::parallel);
        v.require(r, describe(w));
        checked += r.checked;
    }
    v.detail = std::to_string(ws.size()) + " witnesses, " + std::to_string(checked) + " tuples";
    return v;
}

Verdict discontinuity() {
    Verdict v;
    std::mt19937_64 rng(8);
    const TopologySpec r17 = Restrict{Discrete{}, 17};
    for (auto c : {Restrict17Case::halving_at_30, Restrict17Case::predecessor_at_18}) {
        const auto w = refute_restrict17(c);
        const std::int64_t x = c == Restrict17Case::halving_at_30 ? 30 : 18;
        const Integer expected = c == Restrict17Case::halving_at_30 ? 36 : 20;
        for (int i = 0; i < 100; ++i) {
            const BasicOpen U = i % 2 ? basic_nbhd(r17, x, rng() % 20) : BasicOpen(FinalSegment{Natural(rng() % (x + 1))});
            Integer e;
            v.require(validate_refutation(w, U, &e), "restrict17 refutation in " + to_string(U));
            v.require(e == expected, "escape " + e.str());
        }
    }
    const auto succ = variant_successor_witness();
    for (int i = 0; i < 100; ++i) {
        BasicOpen J = basic_nbhd(OrderTopology{OrderKind::variant}, 1, rng() % 40);
        if (i % 2) J = OrderInterval{OrderKind::variant, Integer(static_cast<std::int64_t>(2 * (rng() % 5000))), std::nullopt};
        Integer e;
        v.require(validate_refutation(succ, J, &e), "variant successor in " + to_string(J));
    }
    return v;
}

Verdict back_and_forth() {
    Verdict v;
    BackAndForth bf;
    bf.run(2000);
    std::vector<std::pair<Natural, Rational>> pairs(bf.forward().begin(), bf.forward().end());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = 0; j < pairs.size(); ++j)
            if (i != j)
                v.require((fd_cmp(pairs[i].first, pairs[j].first) < 0) == (pairs[i].second < pairs[j].second),
                          "isomorphism at " + pairs[i].first.str() + "," + pairs[j].first.str());
    BackAndForth shorter;
    shorter.run(1000);
    for (std::size_t t = 0; t < 1000; ++t)
        v.require(shorter.log()[t].n == bf.log()[t].n && shorter.log()[t].q == bf.log()[t].q,
                  "prefix differs at step " + std::to_string(t));
    for (std::uint64_t n = 0; n < 999; ++n) v.require(bf.image(n).has_value(), "unmapped " + std::to_string(n));
    for (std::uint64_t i = 0; i < 999; ++i) v.require(bf.preimage(enumerate_rational(i)).has_value(), "unhit rational");
    for (std::uint64_t n = 0; n <= 500; ++n) v.require(bf.inverse(bf.embed(n)) == Natural(n), "inverse(embed(n))");
    for (std::uint64_t i = 0; i < 500; ++i) {
        const Rational q = enumerate_rational(i);
        v.require(bf.embed(bf.inverse(q)) == q, "embed(inverse(q))");
    }
    return v;
}

Verdict transported() {
    Verdict v;
    BackAndForth bf;
    constexpr std::uint64_t p = 200;
    std::vector<Rational> e(p + 1);
    for (std::uint64_t n = 0; n <= p; ++n) e[n] = bf.embed(n);
    for (std::uint64_t a = 0; a <= p; ++a) {
        v.require(transported_add(e[a], e[0], bf) == e[a], "add identity");
        v.require(transported_mul(e[a], e[1], bf) == e[a], "mul identity");
        for (std::uint64_t b = a + 1; b <= p; ++b) {
            v.require(transported_add(e[a], e[b], bf) == transported_add(e[b], e[a], bf), "add commutes");
            v.require(transported_mul(e[a], e[b], bf) == transported_mul(e[b], e[a], bf), "mul commutes");
        }
    }
    std::mt19937_64 rng(10);
    for (int i = 0; i < 500; ++i) {
        const std::uint64_t a = rng() % (p + 1), b = rng() % (p + 1), c = rng() % (p + 1);
        v.require(transported_add(transported_add(e[a], e[b], bf), e[c], bf) ==
                      transported_add(e[a], transported_add(e[b], e[c], bf), bf),
                  "add associativity");
        const std::uint64_t cs = std::min<std::uint64_t>(c, 40000 / (std::max<std::uint64_t>(a, 1) * std::max<std::uint64_t>(b, 1)));
        v.require(transported_mul(transported_mul(e[a], e[b], bf), e[cs], bf) ==
                      transported_mul(e[a], transported_mul(e[b], e[cs], bf), bf),
                  "mul associativity");
        const std::uint64_t bs = b / 2, csum = c / 2;
        v.require(transported_mul(e[a], transported_add(e[bs], e[csum], bf), bf) ==
                      transported_add(transported_mul(e[a], e[bs], bf), transported_mul(e[a], e[csum], bf), bf),
                  "distributivity");
    }
    return v;
}

Verdict pairing() {
    Verdict v;
    std::set<std::uint64_t> seen;
    for (std::uint64_t n = 0; n <= 500; ++n)
        for (std::uint64_t m = 0; m <= 500; ++m) {
            const Natural z = pair_double(n, m);
            v.require(z == Natural(oracle::pair_double(n, m)), "formula");
            v.require(z.is_even(), "odd value");
            v.require(seen.insert(*z.to_u64()).second, "collision");
        }
    for (std::uint64_t z = 0; z <= 10000; z += 2) {
        const auto [n, m] = unpair_cantor(Natural(z / 2));
        v.require(pair_double(n, m) == Natural(z) && n <= Natural(10000) && m <= Natural(10000),
                  "even " + std::to_string(z) + " missed");
    }
    return v;
}

Verdict blend_isolation() {
    Verdict v;
    const TopologySpec iso = IsolateBelow{FinalDigits{}, 17};
    const TopologySpec aug = AugmentInitial{FinalDigits{}};
    for (std::uint64_t x = 0; x <= (1u << 12); ++x) {
        const Isolation i = is_isolated(iso, x, 24);
        v.require((i == Isolation::isolated) == (x <= 17), "isolate-below at " + std::to_string(x));
        v.require(x <= 17 || i == Isolation::not_isolated, "isolate-below undecided at " + std::to_string(x));
        v.require(is_isolated(aug, x, 24) == Isolation::isolated, "augment-initial at " + std::to_string(x));
    }
    return v;
}

Verdict determinism() {
    Verdict v;
    auto dump = [] {
        std::ostringstream os;
        write_records(os, run_suite("all", 1u << 8, 1));
        return os.str();
    };
    const std::string a = dump(), b = dump();
    v.require(!a.empty() && a == b, "reports differ");
    std::ostringstream serial;
    write_records(serial, run_suite("all", 1u << 8, 1, Execution::serial));
    v.require(serial.str() == a, "serial report differs from parallel");
    return v;
}

Verdict probes() {
    Verdict v;
    std::size_t records = 0;
    for (const auto& claim : probe_claims()) {
        const auto rs = run_probe(claim, 16, 1);
        v.require(!rs.empty(), claim + " emitted nothing");
        for (const auto& r : rs) v.require(r.status != Status::fail && r.evidence.has_value(), claim + " record");
        records += rs.size();
    }
    v.detail = std::to_string(records) + " records";
    return v;
}

}  // namespace

int main() {
    criterion(1, "order axioms", 60, order_axioms);
    criterion(2, "oracle agreement", 0, oracle_agreement_all);
    criterion(3, "figure fidelity", 0, figure_fidelity);
    criterion(4, "school-child modulus", 0, school_child_modulus);
    criterion(5, "ball/suffix/residue and intersection rule", 0, ball_suffix_residue);
    criterion(6, "right-open characterization", 0, right_open);
    criterion(7, "witness soundness", 0, witness_soundness_all);
    criterion(8, "discontinuity witnesses", 0, discontinuity);
    criterion(9, "back-and-forth", 120, back_and_forth);
    criterion(10, "transported arithmetic", 0, transported);
    criterion(11, "pairing", 0, pairing);
    criterion(12, "blend topologies", 0, blend_isolation);
    criterion(13, "determinism", 0, determinism);
    criterion(14, "probes", 120, probes);
    std::printf("%d of 14 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
