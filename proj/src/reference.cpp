#include "topoarith/reference.hpp"

#include "topoarith/embedding.hpp"

namespace topoarith::reference {

Integer nth_in_magnitude_order(OrderKind kind, std::uint64_t i) {
    if (kind != OrderKind::signed_final_digits) return Integer(Natural(i));
    if (i == 0) return Integer(0);
    const Integer m(Natural((i + 1) / 2));
    return i % 2 == 1 ? m : -m;
}

std::optional<Integer> least_in_interval_scan(OrderKind kind, const std::optional<Integer>& lo,
                                              const std::optional<Integer>& hi, std::uint64_t budget) {
    for (std::uint64_t i = 0; i < budget; ++i) {
        const Integer x = nth_in_magnitude_order(kind, i);
        if ((!lo || order_cmp(kind, *lo, x) < 0) && (!hi || order_cmp(kind, x, *hi) < 0)) return x;
    }
    return std::nullopt;
}

std::optional<Rational> first_rational_scan(const std::optional<Rational>& lo, const std::optional<Rational>& hi,
                                            std::uint64_t budget) {
    for (std::uint64_t i = 0; i < budget; ++i) {
        const Rational q = enumerate_rational(Natural(i));
        if ((!lo || *lo < q) && (!hi || q < *hi)) return q;
    }
    return std::nullopt;
}

bool in_suffix_class_by_digits(const DigitString& s, const Natural& x) {
    const DigitString t = suffix(x, s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] != t[i]) return false;
    return true;
}

}  // namespace topoarith::reference
