#include "topoarith/topology.hpp"

#include <algorithm>

namespace topoarith {

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

bool order_below(OrderKind kind, const Integer& a, const Integer& b) { return order_cmp(kind, a, b) < 0; }

bool naturals_only(const BasicOpen& U) {
    return std::visit(overloaded{
                          [](const SuffixClass&) { return true; },
                          [](const InitialSegment&) { return true; },
                          [](const FinalSegment&) { return true; },
                          [](const OrderInterval& o) { return carrier_of(o.kind) == Carrier::naturals; },
                          [](const RightOpenInterval& o) { return carrier_of(o.kind) == Carrier::naturals; },
                          [](const Meet& m) {
                              return std::any_of(m.parts.begin(), m.parts.end(), naturals_only);
                          },
                          [](const auto&) { return false; },
                      },
                      U.get());
}

}  // namespace

bool contains_point(const BasicOpen& U, const Integer& x) {
    return std::visit(
        overloaded{
            [&](const SuffixClass& c) {
                if (x.is_negative()) return false;
                return low_bits(x.to_natural(), c.s.size()).value() == c.s.value();
            },
            [&](const SignedSuffixClass& c) {
                return x.sign() == c.sign && low_bits(x.magnitude(), c.s.size()).value() == c.s.value();
            },
            [&](const SignBlock& b) { return x.sign() == b.sign; },
            [&](const ZeroTail& z) { return x.is_zero() || v2(x) >= z.k; },
            [&](const OrderInterval& o) {
                if (x.is_negative() && carrier_of(o.kind) == Carrier::naturals) return false;
                return (!o.lo || order_below(o.kind, *o.lo, x)) && (!o.hi || order_below(o.kind, x, *o.hi));
            },
            [&](const RightOpenInterval& o) {
                if (x.is_negative() && carrier_of(o.kind) == Carrier::naturals) return false;
                return !order_below(o.kind, x, o.lo) && (!o.hi || order_below(o.kind, x, *o.hi));
            },
            [&](const InitialSegment& s) { return !x.is_negative() && x <= Integer(s.k); },
            [&](const FinalSegment& s) { return !x.is_negative() && x >= Integer(s.k); },
            [&](const Singleton& p) { return x == p.x; },
            [](const WholeSpace&) { return true; },
            [](const EmptySet&) { return false; },
            [&](const Meet& m) {
                return std::all_of(m.parts.begin(), m.parts.end(), [&](const BasicOpen& p) { return contains_point(p, x); });
            },
        },
        U.get());
}

namespace {

// Upper bound on |x| over members of U, when U is visibly finite.
std::optional<Natural> finite_extent(const BasicOpen& U) {
    return std::visit(overloaded{
                          [](const Singleton& p) -> std::optional<Natural> { return p.x.magnitude(); },
                          [](const InitialSegment& s) -> std::optional<Natural> { return s.k; },
                          [](const EmptySet&) -> std::optional<Natural> { return Natural(0); },
                          [](const Meet& m) -> std::optional<Natural> {
                              std::optional<Natural> best;
                              for (const auto& p : m.parts)
                                  if (auto e = finite_extent(p); e && (!best || *e < *best)) best = e;
                              return best;
                          },
                          [](const auto&) -> std::optional<Natural> { return std::nullopt; },
                      },
                      U.get());
}

const SuffixClass* suffix_part(const BasicOpen& U) {
    if (auto s = U.as<SuffixClass>()) return s;
    if (auto m = U.as<Meet>())
        for (const auto& p : m->parts)
            if (auto s = p.as<SuffixClass>()) return s;
    return nullptr;
}

const SignedSuffixClass* signed_suffix_part(const BasicOpen& U) {
    if (auto s = U.as<SignedSuffixClass>()) return s;
    if (auto m = U.as<Meet>())
        for (const auto& p : m->parts)
            if (auto s = p.as<SignedSuffixClass>()) return s;
    return nullptr;
}

}  // namespace

BasicOpen suffix_class(std::string_view msb_first) { return SuffixClass{DigitString::parse(msb_first)}; }

BasicOpen meet(const BasicOpen& a, const BasicOpen& b) {
    if (a.as<WholeSpace>()) return b;
    if (b.as<WholeSpace>()) return a;
    if (a.as<EmptySet>() || b.as<EmptySet>()) return EmptySet{};
    if (auto p = a.as<Singleton>()) return contains_point(b, p->x) ? a : BasicOpen(EmptySet{});
    if (auto p = b.as<Singleton>()) return contains_point(a, p->x) ? b : BasicOpen(EmptySet{});
    if (a == b) return a;
    auto sa = a.as<SuffixClass>();
    auto sb = b.as<SuffixClass>();
    if (sa && sb) return intersect_suffix(sa->s, sb->s);
    auto ia = a.as<InitialSegment>();
    auto ib = b.as<InitialSegment>();
    if (ia && ib) return InitialSegment{std::min(ia->k, ib->k)};
    auto fa = a.as<FinalSegment>();
    auto fb = b.as<FinalSegment>();
    if (fa && fb) return FinalSegment{std::max(fa->k, fb->k)};
    Meet out;
    for (const BasicOpen* side : {&a, &b}) {
        if (auto m = side->as<Meet>())
            out.parts.insert(out.parts.end(), m->parts.begin(), m->parts.end());
        else
            out.parts.push_back(*side);
    }
    return out;
}

bool member(const BasicOpen& U, const Integer& x) {
    if (x.is_negative() && naturals_only(U))
        throw CarrierMismatch("negative point " + x.str() + " for an open set of naturals: " + to_string(U));
    return contains_point(U, x);
}

BasicOpen intersect_suffix(const DigitString& s, const DigitString& t) {
    const std::size_t n = std::min(s.size(), t.size());
    for (std::size_t i = 0; i < n; ++i)
        if (s[i] != t[i]) return EmptySet{};
    return SuffixClass{s.size() >= t.size() ? s : t};
}

RightOpenInterval suffix_class_as_right_open(const DigitString& s) {
    BigInt num = 0;
    for (std::size_t i = 0; i < s.size(); ++i) num = num * 2 + (s[i] ? 1 : 0);
    num += 1;
    BigInt den = BigInt(1) << s.size();
    const Rational upper(num, den);
    RightOpenInterval out{OrderKind::variant, Integer(s.value()), std::nullopt};
    if (upper < 1) out.hi = Integer(natural_of_variant_rank(upper));
    return out;
}

std::vector<Integer> elements_up_to(const BasicOpen& U, const Natural& bound, Carrier carrier) {
    std::vector<Integer> out;
    const Integer limit(bound);
    if (auto extent = finite_extent(U); extent && *extent < bound) return elements_up_to(U, *extent, carrier);

    if (auto p = U.as<Singleton>()) {
        if (p->x.magnitude() <= bound && (carrier == Carrier::integers || !p->x.is_negative())) out.push_back(p->x);
        return out;
    }
    if (auto c = suffix_part(U)) {
        const Integer step(Natural::pow2(c->s.size()));
        for (Integer x(c->s.value()); x <= limit; x = x + step)
            if (contains_point(U, x)) out.push_back(x);
        return out;
    }
    if (auto c = signed_suffix_part(U)) {
        const Integer step(Natural::pow2(c->s.size()));
        for (Integer m(c->s.value()); m <= limit; m = m + step) {
            if (m.is_zero()) continue;
            const Integer x = c->sign == Sign::negative ? -m : m;
            if (carrier == Carrier::naturals && x.is_negative()) continue;
            if (contains_point(U, x)) out.push_back(x);
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    const Integer start = carrier == Carrier::integers ? -limit : Integer(0);
    for (Integer x = start; x <= limit; x = x + Integer(1))
        if (contains_point(U, x)) out.push_back(x);
    return out;
}

std::optional<std::vector<Integer>> finite_members(const BasicOpen& U) {
    auto extent = finite_extent(U);
    if (!extent) return std::nullopt;
    return elements_up_to(U, *extent, Carrier::integers);
}

// ---- topology specs --------------------------------------------------------

Carrier carrier_of(const TopologySpec& tau) {
    return std::visit(overloaded{
                          [](const SignedFinalDigits&) { return Carrier::integers; },
                          [](const OrderTopology& o) { return carrier_of(o.kind); },
                          [](const RightOpenTopology& o) { return carrier_of(o.kind); },
                          [](const Discrete&) { return Carrier::naturals; },
                          [](const Indiscrete&) { return Carrier::naturals; },
                          [](const UnionOf& u) {
                              return carrier_of(*u.left) == Carrier::integers && carrier_of(*u.right) == Carrier::integers
                                         ? Carrier::integers
                                         : Carrier::naturals;
                          },
                          [](const auto&) { return Carrier::naturals; },
                      },
                      tau.get());
}

namespace {

std::size_t default_hint(const Integer& x) { return std::max<std::size_t>(x.magnitude().length(), 1); }

// Open ⊲-interval around n whose other members all have length >= len(n)+j+1:
// below by n·0·1^j, above by n·1·0^(j-1)·1 (digits listed from the right).
std::pair<Natural, Natural> fd_interval_around(const Natural& n, std::size_t j) {
    const std::size_t L = n.length();
    const Natural lo = n + Natural::pow2(L + 1) * (Natural::pow2(j) - Natural(1));
    const Natural hi = n + Natural::pow2(L) + Natural::pow2(L + j);
    return {lo, hi};
}

OrderInterval order_interval_around(OrderKind kind, const Integer& x, std::size_t hint) {
    const std::size_t j = hint + 1;
    switch (kind) {
        case OrderKind::final_digits: {
            auto [lo, hi] = fd_interval_around(x.to_natural(), j);
            return {kind, Integer(lo), Integer(hi)};
        }
        case OrderKind::variant: {
            const Natural n = x.to_natural();
            const std::size_t L = n.length();
            const Rational r = rankv(n);
            const Rational d(BigInt(1), BigInt(1) << (L + j));
            OrderInterval out{kind, std::nullopt, std::nullopt};
            if (!n.is_zero()) out.lo = Integer(natural_of_variant_rank(r - d));
            if (r + d < 1) out.hi = Integer(natural_of_variant_rank(r + d));
            return out;
        }
        case OrderKind::signed_final_digits: {
            if (x.is_zero()) {
                const Integer p(Natural::pow2(j));
                return {kind, -p, p};
            }
            auto [lo, hi] = fd_interval_around(x.magnitude(), j);
            if (x.sign() == Sign::positive) return {kind, Integer(lo), Integer(hi)};
            return {kind, -Integer(hi), -Integer(lo)};
        }
    }
    return {kind, std::nullopt, std::nullopt};
}

RightOpenInterval right_open_around(OrderKind kind, const Integer& x, std::size_t hint) {
    OrderInterval o = order_interval_around(kind, x, hint);
    return {kind, x, o.hi};
}

void require_natural(const Integer& x, const char* what) {
    if (x.is_negative()) throw CarrierMismatch(std::string(what) + " is a topology on the naturals; got " + x.str());
}

bool never_isolated(const TopologySpec& tau, const Integer& x) {
    return std::visit(overloaded{
                          [](const Discrete&) { return false; },
                          [&](const InitialSegments&) { return !x.is_zero(); },
                          [&](const Restrict& r) { return x > Integer(r.bound); },
                          [&](const Blend& b) { return x > Integer(b.bound) && never_isolated(*b.coarse, x); },
                          [&](const IsolateBelow& b) { return x > Integer(b.bound) && never_isolated(*b.inner, x); },
                          [](const UnionOf&) { return false; },
                          [](const AugmentInitial&) { return false; },
                          [](const AugmentFinal&) { return false; },
                          // Indiscrete, final-digits, order and right-open
                          // topologies of dense orders, final segments.
                          [](const auto&) { return true; },
                      },
                      tau.get());
}

bool is_singleton_at(const BasicOpen& U, const Integer& x) {
    auto members = finite_members(U);
    return members && members->size() == 1 && members->front() == x;
}

}  // namespace

BasicOpen basic_nbhd(const TopologySpec& tau, const Integer& x, std::optional<std::size_t> hint) {
    const std::size_t h = hint.value_or(default_hint(x));
    return std::visit(
        overloaded{
            [&](const Discrete&) -> BasicOpen { return Singleton{x}; },
            [&](const Indiscrete&) -> BasicOpen { return WholeSpace{}; },
            [&](const FinalDigits&) -> BasicOpen {
                require_natural(x, "final-digits");
                return SuffixClass{suffix(x.to_natural(), h)};
            },
            [&](const SignedFinalDigits&) -> BasicOpen {
                if (x.is_zero()) return ZeroTail{h};
                return SignedSuffixClass{suffix(x.magnitude(), std::max<std::size_t>(h, 1)), x.sign()};
            },
            [&](const OrderTopology& o) -> BasicOpen { return order_interval_around(o.kind, x, h); },
            [&](const RightOpenTopology& o) -> BasicOpen { return right_open_around(o.kind, x, h); },
            [&](const InitialSegments&) -> BasicOpen { return InitialSegment{x.to_natural()}; },
            [&](const FinalSegments&) -> BasicOpen { return FinalSegment{x.to_natural()}; },
            [&](const Restrict& r) -> BasicOpen {
                require_natural(x, "restrict");
                if (x > Integer(r.bound)) return WholeSpace{};
                return meet(basic_nbhd(*r.inner, x, hint), InitialSegment{r.bound});
            },
            [&](const Blend& b) -> BasicOpen {
                require_natural(x, "blend");
                if (x > Integer(b.bound)) return basic_nbhd(*b.coarse, x, hint);
                return meet(basic_nbhd(*b.fine, x, hint), InitialSegment{b.bound});
            },
            [&](const IsolateBelow& b) -> BasicOpen {
                require_natural(x, "isolate-below");
                if (x <= Integer(b.bound)) return Singleton{x};
                return basic_nbhd(*b.inner, x, hint);
            },
            [&](const UnionOf& u) -> BasicOpen { return meet(basic_nbhd(*u.left, x, hint), basic_nbhd(*u.right, x, hint)); },
            [&](const AugmentInitial& a) -> BasicOpen {
                return meet(basic_nbhd(*a.inner, x, hint), InitialSegment{x.to_natural()});
            },
            [&](const AugmentFinal& a) -> BasicOpen {
                return meet(basic_nbhd(*a.inner, x, hint), FinalSegment{x.to_natural()});
            },
        },
        tau.get());
}

std::string_view to_string(Isolation i) {
    switch (i) {
        case Isolation::isolated: return "isolated";
        case Isolation::not_isolated: return "not-isolated";
        case Isolation::inconclusive: return "inconclusive";
    }
    return "?";
}

Isolation is_isolated(const TopologySpec& tau, const Integer& x, std::size_t search_bound) {
    // Larger hints give smaller neighborhoods, so try them first.
    for (std::size_t h = search_bound + 1; h-- > 0;)
        if (is_singleton_at(basic_nbhd(tau, x, h), x)) return Isolation::isolated;
    return never_isolated(tau, x) ? Isolation::not_isolated : Isolation::inconclusive;
}

}  // namespace topoarith
