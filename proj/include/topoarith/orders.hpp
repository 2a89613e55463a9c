#pragma once

// The three definable total orders:
//
//   final_digits         n ⊲ m on ℕ: compare binary digits from the right; when
//                        one numeral runs out, the longer one is lower if its
//                        next digit is 0 and higher if it is 1.
//   variant              on ℕ: compare from the right, missing digits read as 0.
//   signed_final_digits  on ℤ: negatives < 0 < positives; positives by ⊲ on the
//                        magnitude, negatives by ⊲ reversed.
//
// rank3 / rankv / ranks embed each order into the rationals and serve as
// independent oracles for the comparators.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "topoarith/numerals.hpp"

namespace topoarith {

enum class OrderKind { final_digits, variant, signed_final_digits };

enum class Carrier { naturals, integers };

using Ordering = std::strong_ordering;

std::string_view to_string(OrderKind k);
/// Accepts "fd", "variant", "signed" (and the long names).
OrderKind parse_order_kind(std::string_view text);
Carrier carrier_of(OrderKind k);

Ordering fd_cmp(const Natural& n, const Natural& m);
Ordering fd_cmp(std::uint64_t n, std::uint64_t m) noexcept;
Ordering variant_cmp(const Natural& n, const Natural& m);
Ordering variant_cmp(std::uint64_t n, std::uint64_t m) noexcept;
Ordering signed_cmp(const Integer& x, const Integer& y);
Ordering signed_cmp(std::int64_t x, std::int64_t y) noexcept;

/// Dispatch by kind. Throws CarrierMismatch for negative arguments to an
/// order on ℕ.
Ordering order_cmp(OrderKind kind, const Integer& a, const Integer& b);

/// Σ 2·d_i·3^-i + 3^-(k+1) over the k digits of n.
Rational rank3(const Natural& n);
/// Σ d_i·2^-i.
Rational rankv(const Natural& n);
/// 0, +rank3(|x|) or -rank3(|x|) by sign.
Rational ranks(const Integer& x);
Rational rank_of(OrderKind kind, const Integer& x);

/// The natural whose binary digits d_1..d_k read as the dyadic fraction
/// 0.d_1d_2...d_k equal q. Requires q dyadic in [0, 1).
Natural natural_of_variant_rank(const Rational& q);

/// Least element in magnitude order strictly inside the open interval
/// (lo, hi) of the given order; an absent bound is unbounded. For ℤ the
/// magnitude order is 0, 1, -1, 2, -2, ... Returns nullopt when the
/// interval is empty.
std::optional<Integer> least_in_interval(OrderKind kind, const std::optional<Integer>& lo,
                                         const std::optional<Integer>& hi);

/// Least element strictly between a and b. Throws EmptyInterval unless a is
/// strictly below b.
Integer between(OrderKind kind, const Integer& a, const Integer& b);

struct UnboundedWitnesses {
    std::optional<Integer> below;  // absent only for the variant order at 0
    Integer above;
};

UnboundedWitnesses unbounded_witnesses(OrderKind kind, const Integer& a);

/// Strict-weak-ordering adaptor so ⊲ can key standard containers.
struct FinalDigitsLess {
    bool operator()(const Natural& a, const Natural& b) const { return fd_cmp(a, b) < 0; }
};

}  // namespace topoarith
