#pragma once

// Test-side oracles, written from the definitions without the library.

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>

namespace oracle {

inline std::string binary(std::uint64_t n) {
    std::string s;
    for (; n; n >>= 1) s.insert(s.begin(), char('0' + (n & 1)));
    return s;
}

inline int length(std::uint64_t n) { return n ? 64 - __builtin_clzll(n) : 0; }

// Digit rule, read straight off the strings: walk from the right; where one
// numeral runs out, the longer one is lower iff its next digit is 0.
inline bool fd_less(std::uint64_t n, std::uint64_t m) {
    const std::string a = binary(n), b = binary(m);
    std::size_t i = 0;
    while (i < a.size() && i < b.size()) {
        const char da = a[a.size() - 1 - i], db = b[b.size() - 1 - i];
        if (da != db) return da < db;
        ++i;
    }
    if (a.size() == b.size()) return false;
    if (a.size() > b.size()) return a[a.size() - 1 - i] == '0';
    return b[b.size() - 1 - i] == '1';
}

// rankv(n) = reverse(n) / 2^64 exactly.
inline bool variant_less(std::uint64_t n, std::uint64_t m) {
    auto rev = [](std::uint64_t x) {
        std::uint64_t r = 0;
        for (int i = 0; i < 64; ++i) r |= ((x >> i) & 1) << (63 - i);
        return r;
    };
    return rev(n) < rev(m);
}

// rank3(n) = (sum 2 d_i 3^(k-i+1) + 1) / 3^(k+1), compared by cross-multiplying.
inline std::pair<__int128, __int128> rank3(std::uint64_t n) {
    __int128 num = 0, den = 1;
    for (int i = 0; i < length(n); ++i) {
        num = num * 3 + 2 * ((n >> i) & 1);
        den *= 3;
    }
    return {num * 3 + 1, den * 3};
}

inline bool rank3_less(std::uint64_t n, std::uint64_t m) {
    auto [a, b] = rank3(n);
    auto [c, d] = rank3(m);
    return a * d < c * b;
}

// Negatives, then 0, then positives; negatives by the digit rule reversed.
inline bool signed_less(std::int64_t x, std::int64_t y) {
    auto block = [](std::int64_t v) { return v < 0 ? 0 : v == 0 ? 1 : 2; };
    if (block(x) != block(y)) return block(x) < block(y);
    if (x == 0) return false;
    if (x > 0) return fd_less(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(y));
    return fd_less(static_cast<std::uint64_t>(-y), static_cast<std::uint64_t>(-x));
}

struct Fraction {
    std::int64_t p, q;
};

// Calkin-Wilf by the Newman recurrence q' = 1 / (2 floor(q) - q + 1).
inline Fraction calkin_wilf(std::uint64_t i) {
    Fraction f{1, 1};
    for (std::uint64_t k = 1; k < i; ++k) {
        const std::int64_t fl = f.p / f.q;
        const std::int64_t num = (2 * fl + 1) * f.q - f.p;
        f = {f.q, num};
        const std::int64_t g = std::gcd(f.p, f.q);
        f = {f.p / g, f.q / g};
    }
    return f;
}

inline std::uint64_t pair_double(std::uint64_t n, std::uint64_t m) { return (n + m) * (n + m + 1) + 2 * m; }

}  // namespace oracle
