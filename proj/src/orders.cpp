#include "topoarith/orders.hpp"

#include <algorithm>
#include <bit>
#include <vector>

namespace topoarith {

namespace mp = boost::multiprecision;

std::string_view to_string(OrderKind k) {
    switch (k) {
        case OrderKind::final_digits: return "fd";
        case OrderKind::variant: return "variant";
        case OrderKind::signed_final_digits: return "signed";
    }
    return "?";
}

OrderKind parse_order_kind(std::string_view text) {
    if (text == "fd" || text == "final-digits") return OrderKind::final_digits;
    if (text == "variant") return OrderKind::variant;
    if (text == "signed" || text == "signed-final-digits") return OrderKind::signed_final_digits;
    throw ParseError("unknown order kind: " + std::string(text));
}

Carrier carrier_of(OrderKind k) {
    return k == OrderKind::signed_final_digits ? Carrier::integers : Carrier::naturals;
}

Ordering fd_cmp(std::uint64_t n, std::uint64_t m) noexcept {
    if (n == m) return Ordering::equal;
    const int i = std::countr_zero(n ^ m);
    const int ln = 64 - std::countl_zero(n);
    const int lm = 64 - std::countl_zero(m);
    if (i < std::min(ln, lm)) return ((n >> i) & 1u) ? Ordering::greater : Ordering::less;
    // One digit string is a proper final segment of the other.
    if (ln < lm) return ((m >> ln) & 1u) ? Ordering::less : Ordering::greater;
    return ((n >> lm) & 1u) ? Ordering::greater : Ordering::less;
}

Ordering fd_cmp(const Natural& n, const Natural& m) {
    auto a = n.to_u64();
    auto b = m.to_u64();
    if (a && b) return fd_cmp(*a, *b);
    if (n == m) return Ordering::equal;
    const BigInt diff = n.value() ^ m.value();
    const std::size_t i = mp::lsb(diff);
    const std::size_t ln = n.length();
    const std::size_t lm = m.length();
    if (i < std::min(ln, lm)) return n.bit(i) ? Ordering::greater : Ordering::less;
    if (ln < lm) return m.bit(ln) ? Ordering::less : Ordering::greater;
    return n.bit(lm) ? Ordering::greater : Ordering::less;
}

Ordering variant_cmp(std::uint64_t n, std::uint64_t m) noexcept {
    if (n == m) return Ordering::equal;
    const int i = std::countr_zero(n ^ m);
    return ((n >> i) & 1u) ? Ordering::greater : Ordering::less;
}

Ordering variant_cmp(const Natural& n, const Natural& m) {
    auto a = n.to_u64();
    auto b = m.to_u64();
    if (a && b) return variant_cmp(*a, *b);
    if (n == m) return Ordering::equal;
    const BigInt diff = n.value() ^ m.value();
    return n.bit(mp::lsb(diff)) ? Ordering::greater : Ordering::less;
}

namespace {

int sign_rank(Sign s) { return s == Sign::negative ? -1 : (s == Sign::zero ? 0 : 1); }

}  // namespace

Ordering signed_cmp(const Integer& x, const Integer& y) {
    const int sx = sign_rank(x.sign());
    const int sy = sign_rank(y.sign());
    if (sx != sy) return sx <=> sy;
    if (sx == 0) return Ordering::equal;
    if (sx > 0) return fd_cmp(x.magnitude(), y.magnitude());
    return fd_cmp(y.magnitude(), x.magnitude());
}

Ordering signed_cmp(std::int64_t x, std::int64_t y) noexcept {
    const int sx = (x > 0) - (x < 0);
    const int sy = (y > 0) - (y < 0);
    if (sx != sy) return sx <=> sy;
    if (sx == 0) return Ordering::equal;
    // Magnitudes as unsigned so INT64_MIN is handled.
    const auto mx = sx > 0 ? static_cast<std::uint64_t>(x) : 0 - static_cast<std::uint64_t>(x);
    const auto my = sy > 0 ? static_cast<std::uint64_t>(y) : 0 - static_cast<std::uint64_t>(y);
    return sx > 0 ? fd_cmp(mx, my) : fd_cmp(my, mx);
}

Ordering order_cmp(OrderKind kind, const Integer& a, const Integer& b) {
    switch (kind) {
        case OrderKind::final_digits: return fd_cmp(a.to_natural(), b.to_natural());
        case OrderKind::variant: return variant_cmp(a.to_natural(), b.to_natural());
        case OrderKind::signed_final_digits: return signed_cmp(a, b);
    }
    return Ordering::equal;
}

Rational rank3(const Natural& n) {
    const std::size_t k = n.length();
    BigInt num = 0;
    BigInt den = 1;
    for (std::size_t i = 0; i < k; ++i) {
        num = num * 3 + (n.bit(i) ? 2 : 0);
        den *= 3;
    }
    num = num * 3 + 1;
    den *= 3;
    return Rational(num, den);
}

Rational rankv(const Natural& n) {
    const std::size_t k = n.length();
    BigInt num = 0;
    for (std::size_t i = 0; i < k; ++i) num = num * 2 + (n.bit(i) ? 1 : 0);
    BigInt den;
    mp::bit_set(den, static_cast<unsigned>(k));
    return Rational(num, den);
}

Rational ranks(const Integer& x) {
    switch (x.sign()) {
        case Sign::zero: return Rational(0);
        case Sign::positive: return rank3(x.magnitude());
        case Sign::negative: return -rank3(x.magnitude());
    }
    return Rational(0);
}

Rational rank_of(OrderKind kind, const Integer& x) {
    switch (kind) {
        case OrderKind::final_digits: return rank3(x.to_natural());
        case OrderKind::variant: return rankv(x.to_natural());
        case OrderKind::signed_final_digits: return ranks(x);
    }
    return Rational(0);
}

Natural natural_of_variant_rank(const Rational& q) {
    if (q < 0 || q >= 1) throw std::domain_error("variant rank must lie in [0, 1): " + to_string(q));
    const BigInt& num = mp::numerator(q);
    const BigInt& den = mp::denominator(q);
    if (num.is_zero()) return Natural(0);
    const std::size_t m = mp::msb(den);
    if (den != (BigInt(1) << m)) throw std::domain_error("variant rank must be dyadic: " + to_string(q));
    BigInt out;
    for (std::size_t i = 1; i <= m; ++i)
        if (mp::bit_test(num, static_cast<unsigned>(m - i))) mp::bit_set(out, static_cast<unsigned>(i - 1));
    return Natural(std::move(out));
}

namespace {

using Bits = std::vector<bool>;

// Candidate numerals of a fixed length L: positions below `free_below` are
// free, positions from `free_below` to L-1 hold `bits`. The two search
// models below return the order-least candidate strictly above a bound, or
// nullopt if none exists.

// Final-digits keys are digit symbols followed by an end marker that sits
// between digit 0 and digit 1. Symbols: 0 -> 0, end -> 1, 1 -> 2.
struct FinalDigitsModel {
    static int cand_sym(const Bits& bits, std::size_t L, std::size_t j) { return j == L ? 1 : (bits[j] ? 2 : 0); }
    static int key_sym(const Bits& a, std::size_t j) { return j == a.size() ? 1 : (a[j] ? 2 : 0); }

    static std::optional<Bits> min_above(const Bits& bits, std::size_t free_below, const Bits& a) {
        const std::size_t L = bits.size();
        const std::size_t La = a.size();
        const std::size_t n = std::min(L, La) + 1;
        auto matchable = [&](std::size_t j) {
            if (j < free_below) return j < La;
            return cand_sym(bits, L, j) == key_sym(a, j);
        };
        auto can_exceed = [&](std::size_t j) {
            const int as = key_sym(a, j);
            if (j < free_below) return as < 2;
            return cand_sym(bits, L, j) > as;
        };
        std::size_t m = 0;
        while (m < n && matchable(m)) ++m;
        for (std::size_t i = std::min(m, n - 1) + 1; i-- > 0;) {
            if (!can_exceed(i)) continue;
            Bits out = bits;
            for (std::size_t j = 0; j < free_below; ++j) out[j] = j < i ? a[j] : (j == i);
            return out;
        }
        return std::nullopt;
    }

    static Ordering cmp(const Bits& x, const Bits& y) {
        for (std::size_t j = 0;; ++j) {
            const int sx = key_sym(x, j);
            const int sy = key_sym(y, j);
            if (sx != sy) return sx <=> sy;
            if (sx == 1) return Ordering::equal;
        }
    }
};

// Variant keys are the digits followed by infinitely many zeros.
struct VariantModel {
    static bool sym(const Bits& a, std::size_t j) { return j < a.size() && a[j]; }

    static std::optional<Bits> min_above(const Bits& bits, std::size_t free_below, const Bits& a) {
        const std::size_t n = std::max(bits.size(), a.size());
        auto matchable = [&](std::size_t j) { return j < free_below || sym(bits, j) == sym(a, j); };
        auto can_exceed = [&](std::size_t j) {
            if (j < free_below) return !sym(a, j);
            return sym(bits, j) && !sym(a, j);
        };
        std::size_t m = 0;
        while (m < n && matchable(m)) ++m;
        if (n == 0) return std::nullopt;
        for (std::size_t i = std::min(m, n - 1) + 1; i-- > 0;) {
            if (!can_exceed(i)) continue;
            Bits out = bits;
            for (std::size_t j = 0; j < free_below; ++j) out[j] = j < i ? sym(a, j) : (j == i);
            return out;
        }
        return std::nullopt;
    }

    static Ordering cmp(const Bits& x, const Bits& y) {
        const std::size_t n = std::max(x.size(), y.size());
        for (std::size_t j = 0; j < n; ++j)
            if (sym(x, j) != sym(y, j)) return sym(x, j) ? Ordering::greater : Ordering::less;
        return Ordering::equal;
    }
};

Natural natural_of_bits(const Bits& bits) {
    BigInt v;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) mp::bit_set(v, static_cast<unsigned>(i));
    return Natural(std::move(v));
}

// Least natural in magnitude order strictly inside (lo, hi). Shorter
// numerals are smaller, so lengths are tried in increasing order; within a
// length the digits are fixed greedily from the most significant end.
template <class Model>
std::optional<Natural> least_natural_between(const std::optional<Natural>& lo, const std::optional<Natural>& hi,
                                             bool exclude_zero) {
    const Bits lo_bits = lo ? lo->digits() : Bits{};
    const Bits hi_bits = hi ? hi->digits() : Bits{};
    if (lo && hi && Model::cmp(lo_bits, hi_bits) >= 0) return std::nullopt;

    auto exists = [&](const Bits& bits, std::size_t free_below) {
        std::optional<Bits> cand;
        if (lo) {
            cand = Model::min_above(bits, free_below, lo_bits);
        } else {
            Bits least = bits;
            for (std::size_t j = 0; j < free_below; ++j) least[j] = false;
            cand = std::move(least);
        }
        if (!cand) return false;
        return !hi || Model::cmp(*cand, hi_bits) < 0;
    };

    const std::size_t max_len = std::max(lo_bits.size(), hi_bits.size()) + 3;
    for (std::size_t L = exclude_zero ? 1 : 0; L <= max_len; ++L) {
        Bits bits(L, false);
        if (L == 0) {
            if (exists(bits, 0)) return Natural(0);
            continue;
        }
        bits[L - 1] = true;
        if (!exists(bits, L - 1)) continue;
        for (std::size_t pos = L - 1; pos-- > 0;) {
            bits[pos] = false;
            if (!exists(bits, pos)) bits[pos] = true;
        }
        return natural_of_bits(bits);
    }
    return std::nullopt;
}

std::optional<Natural> least_naturals(OrderKind kind, const std::optional<Natural>& lo,
                                      const std::optional<Natural>& hi, bool exclude_zero) {
    if (kind == OrderKind::variant) return least_natural_between<VariantModel>(lo, hi, exclude_zero);
    return least_natural_between<FinalDigitsModel>(lo, hi, exclude_zero);
}

std::optional<Natural> natural_bound(const std::optional<Integer>& x) {
    if (!x) return std::nullopt;
    return x->to_natural();
}

}  // namespace

std::optional<Integer> least_in_interval(OrderKind kind, const std::optional<Integer>& lo,
                                         const std::optional<Integer>& hi) {
    if (kind != OrderKind::signed_final_digits) {
        auto n = least_naturals(kind, natural_bound(lo), natural_bound(hi), false);
        if (!n) return std::nullopt;
        return Integer(*n);
    }
    if (lo && hi && signed_cmp(*lo, *hi) >= 0) return std::nullopt;
    auto below = [&](const Integer& x) { return !hi || signed_cmp(x, *hi) < 0; };
    auto above = [&](const Integer& x) { return !lo || signed_cmp(*lo, x) < 0; };
    if (above(Integer(0)) && below(Integer(0))) return Integer(0);

    // Positive block: +m with m ⊲-between the positive bounds.
    std::optional<Natural> pos;
    if (!hi || hi->sign() == Sign::positive) {
        std::optional<Natural> plo = (lo && lo->sign() == Sign::positive) ? std::optional(lo->magnitude()) : std::nullopt;
        std::optional<Natural> phi = hi ? std::optional(hi->magnitude()) : std::nullopt;
        pos = least_naturals(OrderKind::final_digits, plo, phi, true);
    }
    // Negative block: -m > lo  ⟺  m ⊲ |lo|;  -m < hi  ⟺  |hi| ⊲ m.
    std::optional<Natural> neg;
    if (!lo || lo->sign() == Sign::negative) {
        std::optional<Natural> nlo = (hi && hi->sign() == Sign::negative) ? std::optional(hi->magnitude()) : std::nullopt;
        std::optional<Natural> nhi = lo ? std::optional(lo->magnitude()) : std::nullopt;
        neg = least_naturals(OrderKind::final_digits, nlo, nhi, true);
    }
    if (pos && (!neg || *pos <= *neg)) return Integer(*pos);
    if (neg) return -Integer(*neg);
    return std::nullopt;
}

Integer between(OrderKind kind, const Integer& a, const Integer& b) {
    if (order_cmp(kind, a, b) >= 0)
        throw EmptyInterval("between: " + a.str() + " is not below " + b.str() + " in the " +
                            std::string(to_string(kind)) + " order");
    auto x = least_in_interval(kind, a, b);
    if (!x) throw EmptyInterval("between: no element found between " + a.str() + " and " + b.str());
    return *x;
}

UnboundedWitnesses unbounded_witnesses(OrderKind kind, const Integer& a) {
    if (kind != OrderKind::signed_final_digits) (void)a.to_natural();
    auto above = least_in_interval(kind, a, std::nullopt);
    if (!above) throw std::logic_error("order has no element above " + a.str());
    return {least_in_interval(kind, std::nullopt, a), *above};
}

}  // namespace topoarith
