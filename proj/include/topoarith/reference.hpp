#pragma once

// Brute-force reference implementations, kept for cross-checking the
// constructive algorithms.

#include <cstdint>
#include <optional>

#include "topoarith/numerals.hpp"
#include "topoarith/orders.hpp"

namespace topoarith::reference {

/// Carrier elements in magnitude order: 0, 1, 2, ... or 0, 1, -1, 2, -2, ...
Integer nth_in_magnitude_order(OrderKind kind, std::uint64_t i);

/// First element in magnitude order strictly inside (lo, hi), scanning at
/// most `budget` candidates.
std::optional<Integer> least_in_interval_scan(OrderKind kind, const std::optional<Integer>& lo,
                                              const std::optional<Integer>& hi, std::uint64_t budget);

/// The first rational in enumeration order strictly inside (lo, hi).
std::optional<Rational> first_rational_scan(const std::optional<Rational>& lo, const std::optional<Rational>& hi,
                                            std::uint64_t budget);

/// suffix(x, |s|) = s, digit by digit.
bool in_suffix_class_by_digits(const DigitString& s, const Natural& x);

}  // namespace topoarith::reference
