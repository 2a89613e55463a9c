#include "topoarith/numerals.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace topoarith {

namespace mp = boost::multiprecision;

DigitString DigitString::parse(std::string_view msb_first) {
    if (msb_first == "e") return {};
    std::vector<bool> bits;
    bits.reserve(msb_first.size());
    for (auto it = msb_first.rbegin(); it != msb_first.rend(); ++it) {
        if (*it != '0' && *it != '1') throw ParseError("digit string must be binary: " + std::string(msb_first));
        bits.push_back(*it == '1');
    }
    return DigitString(std::move(bits));
}

BigInt DigitString::value() const {
    BigInt v;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) mp::bit_set(v, static_cast<unsigned>(i));
    return v;
}

std::string DigitString::str() const {
    std::string out;
    out.reserve(bits_.size());
    for (auto it = bits_.rbegin(); it != bits_.rend(); ++it) out.push_back(*it ? '1' : '0');
    return out;
}

Natural::Natural(BigInt v) : v_(std::move(v)) {
    if (v_.sign() < 0) throw CarrierMismatch("negative value for a natural: " + v_.str());
}

Natural Natural::parse(std::string_view decimal) {
    if (decimal.empty() || !std::all_of(decimal.begin(), decimal.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("not a natural number: " + std::string(decimal));
    return Natural(BigInt(std::string(decimal)));
}

Natural Natural::pow2(std::size_t k) {
    BigInt v;
    mp::bit_set(v, static_cast<unsigned>(k));
    return Natural(std::move(v));
}

std::size_t Natural::length() const {
    if (v_.is_zero()) return 0;
    return mp::msb(v_) + 1;
}

std::vector<bool> Natural::digits() const {
    std::vector<bool> out(length());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = bit(i);
    return out;
}

std::optional<std::uint64_t> Natural::to_u64() const {
    if (length() > 64) return std::nullopt;
    return v_.convert_to<std::uint64_t>();
}

std::string Natural::binary() const {
    std::string out;
    for (std::size_t i = length(); i-- > 0;) out.push_back(bit(i) ? '1' : '0');
    return out;
}

Natural operator+(const Natural& a, const Natural& b) { return Natural(BigInt(a.value() + b.value())); }
Natural operator*(const Natural& a, const Natural& b) { return Natural(BigInt(a.value() * b.value())); }

Natural operator-(const Natural& a, const Natural& b) {
    if (b > a) throw Underflow("natural subtraction " + a.str() + " - " + b.str());
    return Natural(BigInt(a.value() - b.value()));
}

Natural floor_div(const Natural& a, std::uint64_t divisor) {
    if (divisor == 0) throw std::domain_error("division by zero");
    return Natural(BigInt(a.value() / divisor));
}

Natural low_bits(const Natural& x, std::size_t k) {
    if (k >= x.length()) return x;
    BigInt mask = (BigInt(1) << k) - 1;
    return Natural(BigInt(x.value() & mask));
}

Integer::Integer(Sign s, const Natural& magnitude) : v_(magnitude.value()) {
    if ((s == Sign::zero) != magnitude.is_zero())
        throw std::invalid_argument("sign zero must go with an empty magnitude");
    if (s == Sign::negative) v_ = -v_;
}

Integer Integer::parse(std::string_view decimal) {
    bool neg = false;
    if (!decimal.empty() && (decimal.front() == '-' || decimal.front() == '+')) {
        neg = decimal.front() == '-';
        decimal.remove_prefix(1);
    }
    Natural m = Natural::parse(decimal);
    return neg ? Integer(BigInt(-m.value())) : Integer(m);
}

Sign Integer::sign() const {
    int s = v_.sign();
    return s < 0 ? Sign::negative : (s == 0 ? Sign::zero : Sign::positive);
}

Natural Integer::magnitude() const { return Natural(BigInt(mp::abs(v_))); }

Natural Integer::to_natural() const {
    if (v_.sign() < 0) throw CarrierMismatch("expected a natural, got " + v_.str());
    return Natural(v_);
}

std::optional<std::int64_t> Integer::to_i64() const {
    if (v_ > std::numeric_limits<std::int64_t>::max() || v_ < std::numeric_limits<std::int64_t>::min()) return std::nullopt;
    return v_.convert_to<std::int64_t>();
}

Integer operator+(const Integer& a, const Integer& b) { return Integer(BigInt(a.value() + b.value())); }
Integer operator-(const Integer& a, const Integer& b) { return Integer(BigInt(a.value() - b.value())); }
Integer operator*(const Integer& a, const Integer& b) { return Integer(BigInt(a.value() * b.value())); }
Integer operator-(const Integer& a) { return Integer(BigInt(-a.value())); }

DigitString suffix(const Natural& n, std::size_t k) {
    std::vector<bool> bits(k);
    for (std::size_t i = 0; i < k; ++i) bits[i] = n.bit(i);
    return DigitString(std::move(bits));
}

std::size_t v2(const Natural& n) {
    if (n.is_zero()) throw UndefinedValuation();
    return mp::lsb(n.value());
}

std::size_t v2(const Integer& n) { return v2(n.magnitude()); }

namespace {

Rational inverse_power_of_two(std::size_t k) {
    BigInt den;
    mp::bit_set(den, static_cast<unsigned>(k));
    return Rational(BigInt(1), den);
}

}  // namespace

Rational metric2(const Natural& x, const Natural& y) { return metric2(Integer(x), Integer(y)); }

Rational metric2(const Integer& x, const Integer& y) {
    if (x == y) return Rational(0);
    return inverse_power_of_two(v2(x - y));
}

std::string trailing_digits(const Natural& x, std::size_t k, unsigned base) {
    if (base < 2 || base > 36) throw std::invalid_argument("base must be in [2, 36]");
    static constexpr std::string_view symbols = "0123456789abcdefghijklmnopqrstuvwxyz";
    std::string out(k, '0');
    BigInt v = x.value();
    for (std::size_t i = k; i-- > 0 && !v.is_zero();) {
        out[i] = symbols[static_cast<std::size_t>(static_cast<unsigned>(v % base))];
        v /= base;
    }
    return out;
}

std::string to_string(Sign s) {
    switch (s) {
        case Sign::negative: return "-";
        case Sign::zero: return "0";
        case Sign::positive: return "+";
    }
    return "?";
}

std::string to_string(const Rational& q) {
    const BigInt& num = mp::numerator(q);
    const BigInt& den = mp::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    Integer num = Integer::parse(text.substr(0, slash));
    if (slash == std::string_view::npos) return Rational(num.value());
    Natural den = Natural::parse(text.substr(slash + 1));
    if (den.is_zero()) throw ParseError("zero denominator: " + std::string(text));
    return Rational(num.value(), den.value());
}

}  // namespace topoarith
