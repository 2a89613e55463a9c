#include "topoarith/continuity.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>
#include <unordered_map>

#include "topoarith/fastpath.hpp"

namespace topoarith {

std::string_view to_string(Operation op) {
    switch (op) {
        case Operation::add: return "add";
        case Operation::mul: return "mul";
        case Operation::sub: return "sub";
        case Operation::translate: return "translate";
        case Operation::pairing: return "pairing";
        case Operation::successor: return "successor";
        case Operation::halving: return "halving";
        case Operation::predecessor: return "predecessor";
    }
    return "?";
}

std::string_view to_string(Justification j) {
    switch (j) {
        case Justification::residue_modulus: return "residue-modulus";
        case Justification::monotone_segment: return "monotone-segment";
        case Justification::blend_case: return "blend-case";
        case Justification::isolated_point: return "isolated-point";
        case Justification::zero_section: return "zero-section";
    }
    return "?";
}

Operation parse_operation(std::string_view text) {
    for (Operation op : {Operation::add, Operation::mul, Operation::sub, Operation::translate, Operation::pairing,
                         Operation::successor, Operation::halving, Operation::predecessor})
        if (to_string(op) == text) return op;
    throw ParseError("unknown operation: " + std::string(text));
}

std::size_t arity(Operation op) {
    switch (op) {
        case Operation::add:
        case Operation::mul:
        case Operation::sub:
        case Operation::pairing: return 2;
        default: return 1;
    }
}

std::optional<Integer> apply(Operation op, const std::vector<Integer>& args, Carrier carrier, const Natural& parameter) {
    if (args.size() != arity(op)) throw PreconditionViolation("wrong number of arguments for " + std::string(to_string(op)));
    const bool nat = carrier == Carrier::naturals;
    switch (op) {
        case Operation::add: return args[0] + args[1];
        case Operation::mul: return args[0] * args[1];
        case Operation::sub:
            if (nat && args[1] > args[0]) return std::nullopt;
            return args[0] - args[1];
        case Operation::translate: return args[0] + Integer(parameter);
        case Operation::pairing: {
            const Integer s = args[0] + args[1];
            return s * (s + Integer(1)) + args[1] + args[1];
        }
        case Operation::successor: return args[0] + Integer(1);
        case Operation::halving:
            if (args[0].value() % 2 != 0) return std::nullopt;
            return Integer(BigInt(args[0].value() / 2));
        case Operation::predecessor:
            if (nat && args[0].is_zero()) return std::nullopt;
            return args[0] - Integer(1);
    }
    return std::nullopt;
}

std::string describe(const ContinuityWitness& w) {
    std::ostringstream os;
    os << to_string(w.op);
    if (w.op == Operation::translate) os << '[' << w.parameter.str() << ']';
    os << '(';
    for (std::size_t i = 0; i < w.point.size(); ++i) os << (i ? "," : "") << w.point[i].str();
    os << "): ";
    for (std::size_t i = 0; i < w.neighborhoods.size(); ++i) os << (i ? " x " : "") << to_string(w.neighborhoods[i]);
    os << " -> " << to_string(w.target) << " [" << to_string(w.justification) << ']';
    return os.str();
}

// ---- residue modulus -------------------------------------------------------

std::size_t modulus_residue(Operation op, std::size_t k) {
    if (op != Operation::add && op != Operation::mul && op != Operation::sub)
        throw UnsupportedSpec("no residue modulus for " + std::string(to_string(op)));
    return k;
}

namespace {

// c[a][b] is the coefficient of i^a j^b.
struct Bilinear {
    std::int64_t c[2][2]{};
};

Bilinear combine(Operation op, const Bilinear& x, const Bilinear& y) {
    Bilinear r;
    switch (op) {
        case Operation::add:
        case Operation::sub:
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) r.c[a][b] = op == Operation::add ? x.c[a][b] + y.c[a][b] : x.c[a][b] - y.c[a][b];
            return r;
        case Operation::mul:
            // x has no j terms and y has no i terms.
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) r.c[a][b] = x.c[a][0] * y.c[0][b];
            return r;
        default: throw UnsupportedSpec("no residue modulus for " + std::string(to_string(op)));
    }
}

}  // namespace

std::optional<std::uint64_t> residue_image(Operation op, std::uint64_t a, std::uint64_t b, std::size_t k) {
    if (k > 30) throw PreconditionViolation("residue_image supports k <= 30");
    const std::int64_t m = std::int64_t{1} << k;
    a &= static_cast<std::uint64_t>(m - 1);
    b &= static_cast<std::uint64_t>(m - 1);
    Bilinear x, y;
    x.c[0][0] = static_cast<std::int64_t>(a);
    x.c[1][0] = m;
    y.c[0][0] = static_cast<std::int64_t>(b);
    y.c[0][1] = m;
    const Bilinear r = combine(op, x, y);
    if (r.c[1][0] % m != 0 || r.c[0][1] % m != 0 || r.c[1][1] % m != 0) return std::nullopt;
    std::int64_t c = r.c[0][0] % m;
    if (c < 0) c += m;
    return static_cast<std::uint64_t>(c);
}

// ---- witnesses -------------------------------------------------------------

namespace {

Natural require_natural_result(Operation op, const Natural& x, const Natural& y) {
    auto z = apply(op, {Integer(x), Integer(y)});
    if (!z) throw Underflow(std::string(to_string(op)) + "(" + x.str() + "," + y.str() + ") is not a natural");
    return z->to_natural();
}

const SuffixClass* suffix_target(const BasicOpen& target) {
    if (auto s = target.as<SuffixClass>()) return s;
    return nullptr;
}

bool has_bounded_part(const BasicOpen& U) {
    if (U.as<InitialSegment>() || U.as<Singleton>() || U.as<EmptySet>()) return true;
    if (auto m = U.as<Meet>())
        return std::any_of(m->parts.begin(), m->parts.end(), has_bounded_part);
    return false;
}

ContinuityWitness make_witness(Operation op, const Natural& x, const Natural& y, BasicOpen target,
                               std::vector<BasicOpen> nbhds, Justification j) {
    ContinuityWitness w;
    w.op = op;
    w.point = {Integer(x), Integer(y)};
    w.target = std::move(target);
    w.neighborhoods = std::move(nbhds);
    w.justification = j;
    return w;
}

// A neighborhood of 0 in tau that is exactly {0}, if the hint search finds one.
std::optional<BasicOpen> zero_singleton(const TopologySpec& tau) {
    for (std::size_t h = 0; h <= 64; ++h) {
        BasicOpen U = basic_nbhd(tau, Integer(0), h);
        auto members = finite_members(U);
        if (members && members->size() == 1 && members->front().is_zero()) return U;
    }
    return std::nullopt;
}

struct BlendParts {
    const TopologySpec* fine;
    const TopologySpec* coarse;
    Natural bound;
};

// The blend decomposition shared by Blend, IsolateBelow and Restrict.
BlendParts blend_parts(const TopologySpec& spec) {
    static const TopologySpec discrete = Discrete{};
    static const TopologySpec indiscrete = Indiscrete{};
    if (auto b = spec.as<Blend>()) return {&*b->fine, &*b->coarse, b->bound};
    if (auto b = spec.as<IsolateBelow>()) return {&discrete, &*b->inner, b->bound};
    if (auto r = spec.as<Restrict>()) return {&*r->inner, &indiscrete, r->bound};
    throw UnsupportedSpec("no blend structure: " + to_string(spec));
}

}  // namespace

ContinuityWitness witness_final_digits(Operation op, const Natural& x, const Natural& y, std::size_t target_len) {
    const Natural z = require_natural_result(op, x, y);
    const std::size_t k = modulus_residue(op, target_len);
    return make_witness(op, x, y, SuffixClass{suffix(z, target_len)},
                        {SuffixClass{suffix(x, k)}, SuffixClass{suffix(y, k)}}, Justification::residue_modulus);
}

ContinuityWitness witness_segment(Operation op, const TopologySpec& tau, const Natural& x, const Natural& y,
                                  const Natural& bound) {
    if (op != Operation::add && op != Operation::mul)
        throw UnsupportedSpec("segment witnesses cover add and mul only");
    const Natural z = require_natural_result(op, x, y);
    if (tau.as<InitialSegments>()) {
        if (z > bound) throw PreconditionViolation(std::string(to_string(op)) + " exceeds the segment bound");
        return make_witness(op, x, y, InitialSegment{bound}, {InitialSegment{x}, InitialSegment{y}},
                            Justification::monotone_segment);
    }
    if (tau.as<FinalSegments>()) {
        if (z < bound) throw PreconditionViolation(std::string(to_string(op)) + " falls below the segment bound");
        return make_witness(op, x, y, FinalSegment{bound}, {FinalSegment{x}, FinalSegment{y}},
                            Justification::monotone_segment);
    }
    throw UnsupportedSpec("segment witnesses need initial-segments or final-segments: " + to_string(tau));
}

ContinuityWitness witness_blend(Operation op, const TopologySpec& spec, const Natural& x, const Natural& y,
                                const BasicOpen& target) {
    if (op != Operation::add && op != Operation::mul) throw UnsupportedSpec("blend witnesses cover add and mul only");
    const BlendParts parts = blend_parts(spec);
    const Natural z = require_natural_result(op, x, y);
    if (!member(target, Integer(z))) throw PreconditionViolation("target does not contain " + z.str());
    if (target.as<WholeSpace>())
        return make_witness(op, x, y, target, {WholeSpace{}, WholeSpace{}}, Justification::blend_case);

    const BasicOpen I = InitialSegment{parts.bound};
    if (op == Operation::mul && z.is_zero() && (x > parts.bound || y > parts.bound)) {
        auto zero = zero_singleton(spec);
        if (!zero) throw UnsupportedSpec("0 is not isolated in " + to_string(spec));
        std::vector<BasicOpen> nbhds = x.is_zero() ? std::vector<BasicOpen>{*zero, WholeSpace{}}
                                                   : std::vector<BasicOpen>{WholeSpace{}, *zero};
        return make_witness(op, x, y, target, std::move(nbhds), Justification::zero_section);
    }

    if (has_bounded_part(target)) {
        // The target is an A-set inside I, so both inputs lie in I. Fine
        // neighborhoods cut down to I are finite; take the first hint whose
        // image stays inside the target.
        if (z > parts.bound) throw PreconditionViolation("bounded target but the image lies above the segment");
        for (std::size_t h = 0; h <= 64; ++h) {
            BasicOpen nx = meet(basic_nbhd(*parts.fine, Integer(x), h), I);
            BasicOpen ny = meet(basic_nbhd(*parts.fine, Integer(y), h), I);
            auto mx = finite_members(nx);
            auto my = finite_members(ny);
            if (!mx || !my || mx->size() * my->size() > 1'000'000) continue;
            bool ok = true;
            for (const auto& a : *mx) {
                for (const auto& b : *my)
                    if (!contains_point(target, *apply(op, {a, b}))) {
                        ok = false;
                        break;
                    }
                if (!ok) break;
            }
            if (!ok) continue;
            const bool singles = mx->size() == 1 && my->size() == 1;
            return make_witness(op, x, y, target, {nx, ny},
                                singles ? Justification::isolated_point : Justification::blend_case);
        }
        throw UnsupportedSpec("no fine neighborhood inside the segment maps into " + to_string(target));
    }

    ContinuityWitness w = witness_for(op, *parts.coarse, x, y, target);
    w.justification = Justification::blend_case;
    return w;
}

ContinuityWitness witness_translate(const Natural& k, const Natural& x, std::size_t target_len) {
    ContinuityWitness w;
    w.op = Operation::translate;
    w.parameter = k;
    w.point = {Integer(x)};
    w.target = SuffixClass{suffix(x + k, target_len)};
    w.neighborhoods = {SuffixClass{suffix(x, modulus_residue(Operation::add, target_len))}};
    w.justification = Justification::residue_modulus;
    return w;
}

ContinuityWitness witness_for(Operation op, const TopologySpec& tau, const Natural& x, const Natural& y,
                              const BasicOpen& target) {
    const Natural z = require_natural_result(op, x, y);
    if (!member(target, Integer(z))) throw PreconditionViolation("target does not contain " + z.str());
    if (target.as<WholeSpace>())
        return make_witness(op, x, y, target, {WholeSpace{}, WholeSpace{}}, Justification::blend_case);
    if (tau.as<Discrete>())
        return make_witness(op, x, y, target, {Singleton{Integer(x)}, Singleton{Integer(y)}},
                            Justification::isolated_point);
    if (tau.as<FinalDigits>()) {
        auto s = suffix_target(target);
        if (!s) throw UnsupportedSpec("final-digits witness needs a suffix-class target, got " + to_string(target));
        return witness_final_digits(op, x, y, s->s.size());
    }
    if (tau.as<InitialSegments>()) {
        if (auto seg = target.as<InitialSegment>()) return witness_segment(op, tau, x, y, seg->k);
    }
    if (tau.as<FinalSegments>()) {
        if (auto seg = target.as<FinalSegment>()) return witness_segment(op, tau, x, y, seg->k);
    }
    if (tau.as<Blend>() || tau.as<IsolateBelow>() || tau.as<Restrict>()) return witness_blend(op, tau, x, y, target);
    throw UnsupportedSpec("no witness construction for " + to_string(tau) + " with target " + to_string(target));
}

ContinuityWitness combine_union(const ContinuityWitness& a, const ContinuityWitness& b) {
    if (a.op != b.op || a.point != b.point || a.neighborhoods.size() != b.neighborhoods.size())
        throw PreconditionViolation("union needs witnesses for the same operation and point");
    ContinuityWitness w = a;
    w.target = meet(a.target, b.target);
    for (std::size_t i = 0; i < w.neighborhoods.size(); ++i)
        w.neighborhoods[i] = meet(a.neighborhoods[i], b.neighborhoods[i]);
    w.components = {a, b};
    return w;
}

SoundnessReport check_witness(const ContinuityWitness& w, const Natural& bound) {
    SoundnessReport report;
    std::vector<std::vector<Integer>> members;
    for (const auto& U : w.neighborhoods) members.push_back(elements_up_to(U, bound, w.carrier));
    for (std::size_t i = 0; i < w.point.size(); ++i)
        if (!contains_point(w.neighborhoods[i], w.point[i])) {
            report.counterexample = w.point;
            return report;
        }
    if (w.target.as<WholeSpace>()) {
        report.checked = 1;
        for (const auto& m : members) report.checked *= m.size();
        return report;
    }
    const FastMember fast(w.target);
    std::vector<Integer> args(members.size());
    auto visit = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == members.size()) {
            auto z = apply(w.op, args, w.carrier, w.parameter);
            if (!z) return true;
            ++report.checked;
            if (!fast(*z)) {
                report.counterexample = args;
                return false;
            }
            return true;
        }
        for (const auto& v : members[depth]) {
            args[depth] = v;
            if (!self(self, depth + 1)) return false;
        }
        return true;
    };
    visit(visit, 0);
    return report;
}

// ---- discontinuity ---------------------------------------------------------

Integer refute_variant_successor(const OrderInterval& J) {
    if (J.kind != OrderKind::variant || !contains_point(J, Integer(1)))
        throw PreconditionViolation("refute_variant_successor needs a variant interval containing 1: " + to_string(J));
    // Every element variant-below 1 is even.
    auto e = least_in_interval(OrderKind::variant, J.lo, Integer(1));
    if (!e) throw PreconditionViolation("empty interval below 1");
    return *e;
}

DiscontinuityWitness variant_successor_witness() {
    DiscontinuityWitness w;
    w.op = Operation::successor;
    w.point = {Integer(1)};
    w.target = OrderInterval{OrderKind::variant, Integer(0), Integer(1)};
    w.refuter = [](const BasicOpen& U) -> Integer {
        if (auto J = U.as<OrderInterval>()) return refute_variant_successor(*J);
        if (!contains_point(U, Integer(1))) throw PreconditionViolation("neighborhood misses 1");
        for (std::uint64_t e = 0; e <= (1u << 16); e += 2)
            if (contains_point(U, Integer(e)) && variant_cmp(e, 1) < 0) return Integer(e);
        throw BudgetExceeded("no even element found in " + to_string(U));
    };
    return w;
}

std::string_view to_string(Restrict17Case c) {
    return c == Restrict17Case::halving_at_30 ? "halving-at-30" : "predecessor-at-18";
}

DiscontinuityWitness refute_restrict17(Restrict17Case c) {
    const bool halving = c == Restrict17Case::halving_at_30;
    DiscontinuityWitness w;
    w.op = halving ? Operation::halving : Operation::predecessor;
    const std::int64_t x = halving ? 30 : 18;
    w.point = {Integer(x)};
    w.target = Singleton{Integer(halving ? 15 : 17)};
    const Operation op = w.op;
    w.refuter = [op, x](const BasicOpen& U) -> Integer {
        if (!contains_point(U, Integer(x))) throw PreconditionViolation("neighborhood misses " + std::to_string(x));
        for (std::int64_t y = x + 2; y <= x + (1 << 16); ++y) {
            if (!contains_point(U, Integer(y))) continue;
            auto image = apply(op, {Integer(y)});
            if (image && *image > Integer(17)) return Integer(y);
        }
        throw BudgetExceeded("no escape found in " + to_string(U));
    };
    return w;
}

bool validate_refutation(const DiscontinuityWitness& w, const BasicOpen& U, Integer* escape) {
    const Integer e = w.refuter(U);
    if (escape) *escape = e;
    if (!contains_point(U, e)) return false;
    std::vector<Integer> args = w.point;
    args[0] = e;
    auto image = apply(w.op, args, Carrier::integers);
    return image && !contains_point(w.target, *image);
}

// ---- probes ----------------------------------------------------------------

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::seed_seq seq{seed, a, b};
    std::array<std::uint32_t, 2> out{};
    seq.generate(out.begin(), out.end());
    return (std::uint64_t{out[0]} << 32) | out[1];
}

std::vector<Integer> probe_samples(const BasicOpen& U, const Integer& x, Carrier carrier, const ProbeParams& p,
                                   std::size_t input, std::size_t hint) {
    std::vector<Integer> out{x};
    auto add = [&](const Integer& v) {
        if (carrier == Carrier::naturals && v.is_negative()) return;
        if (contains_point(U, v)) out.push_back(v);
    };
    constexpr std::size_t max_enumerated = 512;
    auto listed = elements_up_to(U, p.sample_bound, carrier);
    std::sort(listed.begin(), listed.end(),
              [](const Integer& a, const Integer& b) { return a.magnitude() < b.magnitude(); });
    if (listed.size() > max_enumerated) listed.resize(max_enumerated);
    out.insert(out.end(), listed.begin(), listed.end());

    for (std::size_t j = 0; j <= p.search_bound; ++j)
        for (int m = -3; m <= 3; ++m)
            if (m != 0) add(x + Integer(m) * Integer(Natural::pow2(j)));

    std::mt19937_64 rng(mix_seed(p.seed, input, hint));
    const BigInt span = p.sample_bound.value();
    for (std::size_t i = 0; i < p.random_samples; ++i) {
        std::uint64_t r = rng();
        Integer v(BigInt(BigInt(r) % (span + 1)));
        if (carrier == Carrier::integers && (rng() & 1u)) v = -v;
        add(v);
    }

    if (auto J = U.as<OrderInterval>()) {
        std::optional<Integer> hi = J->hi;
        std::optional<Integer> lo = J->lo;
        for (int i = 0; i < 4; ++i) {
            if (auto e = least_in_interval(J->kind, x, hi)) {
                add(*e);
                hi = e;
            }
            if (auto e = least_in_interval(J->kind, lo, x)) {
                add(*e);
                lo = e;
            }
        }
    }
    std::sort(out.begin() + 1, out.end(),
              [](const Integer& a, const Integer& b) {
                  return a.magnitude() != b.magnitude() ? a.magnitude() < b.magnitude() : a < b;
              });
    out.erase(std::unique(out.begin() + 1, out.end()), out.end());
    return out;
}

}  // namespace

ProbeOutcome probe_continuity(Operation op, const TopologySpec& tau, const std::vector<Integer>& point,
                              const BasicOpen& target, const ProbeParams& params, const Natural& parameter) {
    const Carrier carrier = carrier_of(tau);
    auto image = apply(op, point, carrier, parameter);
    if (!image || !contains_point(target, *image)) throw PreconditionViolation("target does not contain the image point");
    const FastMember fast(target);
    ProbeOutcome out;
    for (std::size_t h = 1; h <= std::max<std::size_t>(params.search_bound, 1); ++h) {
        out.hint = h;
        out.neighborhoods.clear();
        out.escapes.clear();
        std::vector<std::vector<Integer>> samples;
        for (std::size_t i = 0; i < point.size(); ++i) {
            out.neighborhoods.push_back(basic_nbhd(tau, point[i], h));
            samples.push_back(probe_samples(out.neighborhoods.back(), point[i], carrier, params, i, h));
        }
        std::vector<Integer> args(point.size());
        auto visit = [&](auto&& self, std::size_t depth) -> void {
            if (out.escapes.size() >= params.max_escapes) return;
            if (depth == point.size()) {
                auto z = apply(op, args, carrier, parameter);
                ++out.samples;
                if (z && !fast(*z)) out.escapes.push_back(args);
                return;
            }
            for (const auto& v : samples[depth]) {
                args[depth] = v;
                self(self, depth + 1);
                if (out.escapes.size() >= params.max_escapes) return;
            }
        };
        visit(visit, 0);
        if (out.escapes.empty()) {
            out.witness_found = true;
            return out;
        }
    }
    return out;
}

std::string_view to_string(ExtremeRole r) {
    switch (r) {
        case ExtremeRole::minimum: return "minimum";
        case ExtremeRole::maximum: return "maximum";
        case ExtremeRole::interior: return "interior";
        case ExtremeRole::alone: return "alone";
    }
    return "?";
}

OrderTopologyReport probe_order_topology(const DigitString& s, std::size_t bound) {
    if (bound > 24) throw PreconditionViolation("probe_order_topology: bound above 24");
    OrderTopologyReport r;
    r.s = s;
    r.bound = bound;
    const std::uint64_t top = std::uint64_t{1} << bound;
    const std::size_t len = s.size();
    const std::uint64_t m0 = static_cast<std::uint64_t>(s.value());
    const std::uint64_t mask = len >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1;
    const BasicOpen U = SuffixClass{s};
    auto in_class = [&](std::uint64_t x) { return (x & mask) == m0; };

    std::vector<std::uint64_t> order(top + 1);
    for (std::uint64_t x = 0; x <= top; ++x) order[x] = x;
    std::sort(order.begin(), order.end(), [](std::uint64_t a, std::uint64_t b) { return fd_cmp(a, b) < 0; });

    std::size_t first = order.size(), last = 0, pos_m0 = order.size();
    r.residue_match = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const bool in = in_class(order[i]);
        if (in != member(U, Integer(order[i]))) r.residue_match = false;
        if (!in) continue;
        ++r.class_size;
        first = std::min(first, i);
        last = i;
        if (order[i] == m0) pos_m0 = i;
    }
    r.convex = r.class_size > 0 && last - first + 1 == r.class_size;
    if (pos_m0 < order.size() && r.class_size > 1) {
        if (pos_m0 == first)
            r.convention_role = ExtremeRole::minimum;
        else if (pos_m0 == last)
            r.convention_role = ExtremeRole::maximum;
        else
            r.convention_role = ExtremeRole::interior;
    }

    // 1 0^j s and 1^j s, read as numbers. len + j stays below 49.
    for (std::uint64_t x = 0; x <= top; ++x) {
        if (!in_class(x)) continue;
        bool ok = false;
        for (std::size_t j = 1; j <= bound && !ok; ++j) {
            const std::uint64_t lo = m0 + (std::uint64_t{1} << (len + j));
            const std::uint64_t hi = m0 + (std::uint64_t{1} << len) * ((std::uint64_t{1} << j) - 1);
            ok = fd_cmp(lo, x) < 0 && fd_cmp(x, hi) < 0;
        }
        if (!ok) {
            if (!r.first_sandwich_failure) r.first_sandwich_failure = Natural(x);
            ++r.sandwich_failures;
        }
    }

    const TopologySpec order_top = OrderTopology{OrderKind::final_digits};
    for (std::size_t h = 0; h <= bound; ++h) {
        const BasicOpen N = basic_nbhd(order_top, Integer(m0), h);
        const auto& J = *N.as<OrderInterval>();
        const FastMember in_n(N);
        bool escaped = false;
        for (const auto& candidate : {least_in_interval(J.kind, J.lo, Integer(m0)), least_in_interval(J.kind, Integer(m0), J.hi)})
            if (candidate && !member(U, *candidate)) {
                escaped = true;
                if (!r.order_escape) r.order_escape = candidate->to_natural();
            }
        if (escaped) ++r.order_nbhds_escaping;
        for (std::size_t L = std::max<std::size_t>(Natural(m0).length(), 1); L <= bound; ++L) {
            bool inside = true;
            for (std::uint64_t y = m0 & ((std::uint64_t{1} << L) - 1); y <= top && inside; y += std::uint64_t{1} << L)
                inside = in_n(static_cast<std::int64_t>(y));
            if (inside) {
                ++r.order_nbhds_with_ball;
                break;
            }
        }
    }
    return r;
}

}  // namespace topoarith
