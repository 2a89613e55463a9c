#pragma once

// Arbitrary-precision naturals and integers with binary-digit access,
// the 2-adic valuation and the 2-adic metric.
//
// Digits are indexed from the least significant end: bit(0) is the last
// binary digit. Zero has no digits at all.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "topoarith/errors.hpp"

namespace topoarith {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Finite bit string, least significant bit first. Leading zeros are kept:
/// "00110" and "110" are different strings.
class DigitString {
public:
    DigitString() = default;
    explicit DigitString(std::vector<bool> lsb_first) : bits_(std::move(lsb_first)) {}

    /// Parses the conventional written form, most significant digit first.
    /// The empty string and "e" both denote the empty digit string.
    static DigitString parse(std::string_view msb_first);
    static DigitString zeros(std::size_t k) { return DigitString(std::vector<bool>(k, false)); }

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    bool operator[](std::size_t i) const { return bits_[i]; }
    const std::vector<bool>& bits() const noexcept { return bits_; }

    /// Value with leading zeros dropped (the "convention member" of U_s).
    BigInt value() const;
    /// Written form, most significant digit first; empty for the empty string.
    std::string str() const;

    friend bool operator==(const DigitString&, const DigitString&) = default;

private:
    std::vector<bool> bits_;
};

enum class Sign { negative, zero, positive };

/// Non-negative integer of unbounded size.
class Natural {
public:
    Natural() = default;
    Natural(std::uint64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    explicit Natural(BigInt v);

    static Natural parse(std::string_view decimal);
    static Natural from_digits(const DigitString& s) { return Natural(s.value()); }
    static Natural pow2(std::size_t k);

    const BigInt& value() const noexcept { return v_; }
    bool is_zero() const { return v_.is_zero(); }
    /// Number of binary digits; 0 for zero.
    std::size_t length() const;
    bool bit(std::size_t i) const { return boost::multiprecision::bit_test(v_, static_cast<unsigned>(i)); }
    /// Canonical digit sequence, lsb first, last element 1 unless empty.
    std::vector<bool> digits() const;
    DigitString digit_string() const { return DigitString(digits()); }
    bool is_even() const { return !bit(0); }

    std::optional<std::uint64_t> to_u64() const;
    std::string str() const { return v_.str(); }
    /// Binary, most significant digit first; empty for zero.
    std::string binary() const;

    friend bool operator==(const Natural& a, const Natural& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
        return a.v_.compare(b.v_) <=> 0;
    }

private:
    BigInt v_;
};

Natural operator+(const Natural& a, const Natural& b);
Natural operator*(const Natural& a, const Natural& b);
/// Throws Underflow when b > a.
Natural operator-(const Natural& a, const Natural& b);
Natural floor_div(const Natural& a, std::uint64_t divisor);
/// x mod 2^k.
Natural low_bits(const Natural& x, std::size_t k);

/// Signed integer viewed as a sign plus a binary magnitude.
class Integer {
public:
    Integer() = default;
    Integer(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Integer(const Natural& n) : v_(n.value()) {}  // NOLINT(google-explicit-constructor)
    explicit Integer(BigInt v) : v_(std::move(v)) {}
    Integer(Sign s, const Natural& magnitude);

    static Integer parse(std::string_view decimal);

    const BigInt& value() const noexcept { return v_; }
    Sign sign() const;
    Natural magnitude() const;
    bool is_negative() const { return v_.sign() < 0; }
    bool is_zero() const { return v_.is_zero(); }
    /// Throws CarrierMismatch when negative.
    Natural to_natural() const;
    std::optional<std::int64_t> to_i64() const;
    std::string str() const { return v_.str(); }

    friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        return a.v_.compare(b.v_) <=> 0;
    }

private:
    BigInt v_;
};

Integer operator+(const Integer& a, const Integer& b);
Integer operator-(const Integer& a, const Integer& b);
Integer operator*(const Integer& a, const Integer& b);
Integer operator-(const Integer& a);

/// The last k binary digits of n, zero-padded on the left to exactly k.
DigitString suffix(const Natural& n, std::size_t k);

/// Largest k with 2^k | n. Throws UndefinedValuation for n = 0.
std::size_t v2(const Natural& n);
std::size_t v2(const Integer& n);

/// 2^-v2(|x - y|), and 0 when x = y.
Rational metric2(const Natural& x, const Natural& y);
Rational metric2(const Integer& x, const Integer& y);

/// The last k digits of x in the given base, zero-padded to length k.
std::string trailing_digits(const Natural& x, std::size_t k, unsigned base);

std::string to_string(Sign s);

/// Exact rational rendered as "p/q", or "p" for integers.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

}  // namespace topoarith
