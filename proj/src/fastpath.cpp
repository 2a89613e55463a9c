#include "topoarith/fastpath.hpp"

#include <algorithm>
#include <bit>

namespace topoarith {

namespace {

bool fits(const Integer& x) { return x.to_i64().has_value(); }

bool compilable(const BasicOpen& U) {
    if (auto s = U.as<SuffixClass>()) return s->s.size() < 63;
    if (auto s = U.as<SignedSuffixClass>()) return s->s.size() < 63;
    if (U.as<SignBlock>() || U.as<WholeSpace>() || U.as<EmptySet>()) return true;
    if (auto z = U.as<ZeroTail>()) return z->k < 63;
    if (auto o = U.as<OrderInterval>()) return (!o->lo || fits(*o->lo)) && (!o->hi || fits(*o->hi));
    if (auto o = U.as<RightOpenInterval>()) return fits(o->lo) && (!o->hi || fits(*o->hi));
    if (auto s = U.as<InitialSegment>()) return fits(Integer(s->k));
    if (auto s = U.as<FinalSegment>()) return fits(Integer(s->k));
    if (auto p = U.as<Singleton>()) return fits(p->x);
    if (auto m = U.as<Meet>()) return std::all_of(m->parts.begin(), m->parts.end(), compilable);
    return false;
}

std::uint64_t magnitude(std::int64_t x) {
    return x < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(x) : static_cast<std::uint64_t>(x);
}

bool less(OrderKind kind, std::int64_t a, std::int64_t b) {
    switch (kind) {
        case OrderKind::final_digits: return fd_cmp(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)) < 0;
        case OrderKind::variant: return variant_cmp(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)) < 0;
        case OrderKind::signed_final_digits: return signed_cmp(a, b) < 0;
    }
    return false;
}

std::int64_t word(const Integer& x) { return *x.to_i64(); }

bool word_member(const BasicOpen& U, std::int64_t x) {
    if (auto s = U.as<SuffixClass>()) {
        if (x < 0) return false;
        const std::uint64_t mask = (std::uint64_t{1} << s->s.size()) - 1;
        return (static_cast<std::uint64_t>(x) & mask) == static_cast<std::uint64_t>(s->s.value());
    }
    if (auto s = U.as<SignedSuffixClass>()) {
        const Sign sg = x < 0 ? Sign::negative : (x == 0 ? Sign::zero : Sign::positive);
        const std::uint64_t mask = (std::uint64_t{1} << s->s.size()) - 1;
        return sg == s->sign && (magnitude(x) & mask) == static_cast<std::uint64_t>(s->s.value());
    }
    if (auto b = U.as<SignBlock>()) {
        const Sign sg = x < 0 ? Sign::negative : (x == 0 ? Sign::zero : Sign::positive);
        return sg == b->sign;
    }
    if (auto z = U.as<ZeroTail>()) return x == 0 || std::countr_zero(magnitude(x)) >= static_cast<int>(z->k);
    if (auto o = U.as<OrderInterval>()) {
        if (x < 0 && carrier_of(o->kind) == Carrier::naturals) return false;
        return (!o->lo || less(o->kind, word(*o->lo), x)) && (!o->hi || less(o->kind, x, word(*o->hi)));
    }
    if (auto o = U.as<RightOpenInterval>()) {
        if (x < 0 && carrier_of(o->kind) == Carrier::naturals) return false;
        return !less(o->kind, x, word(o->lo)) && (!o->hi || less(o->kind, x, word(*o->hi)));
    }
    if (auto s = U.as<InitialSegment>()) return x >= 0 && x <= word(Integer(s->k));
    if (auto s = U.as<FinalSegment>()) return x >= 0 && x >= word(Integer(s->k));
    if (auto p = U.as<Singleton>()) return x == word(p->x);
    if (U.as<WholeSpace>()) return true;
    if (U.as<EmptySet>()) return false;
    const auto& parts = U.as<Meet>()->parts;
    return std::all_of(parts.begin(), parts.end(), [x](const BasicOpen& p) { return word_member(p, x); });
}

}  // namespace

FastMember::FastMember(BasicOpen U) : U_(std::move(U)), compiled_(compilable(U_)) {}

bool FastMember::operator()(std::int64_t x) const {
    return compiled_ ? word_member(U_, x) : contains_point(U_, Integer(x));
}

bool FastMember::operator()(const Integer& x) const {
    if (compiled_)
        if (auto w = x.to_i64()) return word_member(U_, *w);
    return contains_point(U_, x);
}

}  // namespace topoarith
