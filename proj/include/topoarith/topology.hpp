#pragma once

// Symbolic basic open sets and topology descriptors.
//
// Carriers are infinite, so no topology is ever enumerated. A TopologySpec
// answers two kinds of question: which basic open of its canonical basis
// surrounds a point (basic_nbhd), and whether a point is isolated.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "topoarith/box.hpp"
#include "topoarith/numerals.hpp"
#include "topoarith/orders.hpp"

namespace topoarith {

// ---- basic open sets -------------------------------------------------------

/// U_s: naturals ≡ value(s) mod 2^|s|. Includes the convention member
/// value(s) itself, e.g. 6 ∈ U_{00110}.
struct SuffixClass {
    DigitString s;
    friend bool operator==(const SuffixClass&, const SuffixClass&) = default;
};

/// U_{s+} / U_{s-}: integers of the given sign whose magnitude ends in s.
struct SignedSuffixClass {
    DigitString s;  // nonempty
    Sign sign;      // positive or negative
    friend bool operator==(const SignedSuffixClass&, const SignedSuffixClass&) = default;
};

/// U_+ / U_-.
struct SignBlock {
    Sign sign;
    friend bool operator==(const SignBlock&, const SignBlock&) = default;
};

/// U_{0...0}: integers divisible by 2^k, of either sign, and 0.
struct ZeroTail {
    std::size_t k;
    friend bool operator==(const ZeroTail&, const ZeroTail&) = default;
};

/// Open interval (lo, hi) in an order; an absent end is unbounded.
struct OrderInterval {
    OrderKind kind;
    std::optional<Integer> lo;
    std::optional<Integer> hi;
    friend bool operator==(const OrderInterval&, const OrderInterval&) = default;
};

/// Half-open interval [lo, hi); an absent hi is unbounded.
struct RightOpenInterval {
    OrderKind kind;
    Integer lo;
    std::optional<Integer> hi;
    friend bool operator==(const RightOpenInterval&, const RightOpenInterval&) = default;
};

/// [0, k] in the usual order of ℕ.
struct InitialSegment {
    Natural k;
    friend bool operator==(const InitialSegment&, const InitialSegment&) = default;
};

/// [k, ∞) in the usual order of ℕ.
struct FinalSegment {
    Natural k;
    friend bool operator==(const FinalSegment&, const FinalSegment&) = default;
};

struct Singleton {
    Integer x;
    friend bool operator==(const Singleton&, const Singleton&) = default;
};

struct WholeSpace {
    friend bool operator==(const WholeSpace&, const WholeSpace&) = default;
};

struct EmptySet {
    friend bool operator==(const EmptySet&, const EmptySet&) = default;
};

class BasicOpen;

/// Intersection of finitely many basic opens (U ∩ I, product refinements).
struct Meet {
    std::vector<BasicOpen> parts;
    friend bool operator==(const Meet&, const Meet&);
};

class BasicOpen {
public:
    using Variant = std::variant<SuffixClass, SignedSuffixClass, SignBlock, ZeroTail, OrderInterval, RightOpenInterval,
                                 InitialSegment, FinalSegment, Singleton, WholeSpace, EmptySet, Meet>;

    BasicOpen() : v_(WholeSpace{}) {}
    template <class T, class = std::enable_if_t<std::is_constructible_v<Variant, T&&> &&
                                                !std::is_same_v<std::decay_t<T>, BasicOpen>>>
    BasicOpen(T&& alt) : v_(std::forward<T>(alt)) {}  // NOLINT(google-explicit-constructor)

    const Variant& get() const noexcept { return v_; }
    template <class T>
    const T* as() const noexcept { return std::get_if<T>(&v_); }

    friend bool operator==(const BasicOpen& a, const BasicOpen& b) { return a.v_ == b.v_; }

private:
    Variant v_;
};

inline bool operator==(const Meet& a, const Meet& b) { return a.parts == b.parts; }

/// Convenience: U_s from the written (msb-first) form.
BasicOpen suffix_class(std::string_view msb_first);
/// Intersection with trivial simplifications (whole space dropped,
/// singletons absorb, nested meets flattened).
BasicOpen meet(const BasicOpen& a, const BasicOpen& b);

/// Exact membership. Throws CarrierMismatch when x is negative and U only
/// contains naturals.
bool member(const BasicOpen& U, const Integer& x);
/// Like member, but a negative x is simply not in a set of naturals.
bool contains_point(const BasicOpen& U, const Integer& x);

/// U_s ∩ U_t: EmptySet when s and t disagree on a digit (compared from the
/// right), otherwise the class of the longer string.
BasicOpen intersect_suffix(const DigitString& s, const DigitString& t);

/// U_s as a half-open interval [m0, m1) of the variant order, where m0 is
/// the convention member and m1 is absent when s is all ones.
RightOpenInterval suffix_class_as_right_open(const DigitString& s);

/// All members x of U with |x| <= bound (x >= 0 for the naturals), in
/// increasing order.
std::vector<Integer> elements_up_to(const BasicOpen& U, const Natural& bound, Carrier carrier);

/// If U is a finite set, its members; nullopt when U is infinite.
std::optional<std::vector<Integer>> finite_members(const BasicOpen& U);

// ---- topology descriptors --------------------------------------------------

class TopologySpec;

struct Discrete {
    friend bool operator==(const Discrete&, const Discrete&) = default;
};
struct Indiscrete {
    friend bool operator==(const Indiscrete&, const Indiscrete&) = default;
};
/// Basic opens U_s on ℕ (the 2-adic topology).
struct FinalDigits {
    friend bool operator==(const FinalDigits&, const FinalDigits&) = default;
};
/// Basic opens U_{s±}, U_±, U_{0...0} on ℤ.
struct SignedFinalDigits {
    friend bool operator==(const SignedFinalDigits&, const SignedFinalDigits&) = default;
};
struct OrderTopology {
    OrderKind kind;
    friend bool operator==(const OrderTopology&, const OrderTopology&) = default;
};
/// Generated by half-open intervals [a, b).
struct RightOpenTopology {
    OrderKind kind;
    friend bool operator==(const RightOpenTopology&, const RightOpenTopology&) = default;
};
struct InitialSegments {
    friend bool operator==(const InitialSegments&, const InitialSegments&) = default;
};
struct FinalSegments {
    friend bool operator==(const FinalSegments&, const FinalSegments&) = default;
};
/// τ↾I for I = [0, bound]: opens U ∩ I for U ∈ τ, plus the whole space.
struct Restrict {
    Box<TopologySpec> inner;
    Natural bound;
    friend bool operator==(const Restrict&, const Restrict&) = default;
};
/// Generated by U ∪ A with U ∈ coarse and A a fine-open subset of [0, bound].
struct Blend {
    Box<TopologySpec> fine;
    Box<TopologySpec> coarse;
    Natural bound;
    friend bool operator==(const Blend&, const Blend&) = default;
};
/// inner with every a <= bound made isolated.
struct IsolateBelow {
    Box<TopologySpec> inner;
    Natural bound;
    friend bool operator==(const IsolateBelow&, const IsolateBelow&) = default;
};
/// Generated by left ∪ right.
struct UnionOf {
    Box<TopologySpec> left;
    Box<TopologySpec> right;
    friend bool operator==(const UnionOf&, const UnionOf&) = default;
};
/// inner plus every initial segment.
struct AugmentInitial {
    Box<TopologySpec> inner;
    friend bool operator==(const AugmentInitial&, const AugmentInitial&) = default;
};
/// inner plus every final segment.
struct AugmentFinal {
    Box<TopologySpec> inner;
    friend bool operator==(const AugmentFinal&, const AugmentFinal&) = default;
};

class TopologySpec {
public:
    using Variant = std::variant<Discrete, Indiscrete, FinalDigits, SignedFinalDigits, OrderTopology, RightOpenTopology,
                                 InitialSegments, FinalSegments, Restrict, Blend, IsolateBelow, UnionOf, AugmentInitial,
                                 AugmentFinal>;

    template <class T, class = std::enable_if_t<std::is_constructible_v<Variant, T&&> &&
                                                !std::is_same_v<std::decay_t<T>, TopologySpec>>>
    TopologySpec(T&& alt) : v_(std::forward<T>(alt)) {}  // NOLINT(google-explicit-constructor)

    const Variant& get() const noexcept { return v_; }
    template <class T>
    const T* as() const noexcept { return std::get_if<T>(&v_); }

    friend bool operator==(const TopologySpec& a, const TopologySpec& b) { return a.v_ == b.v_; }

private:
    Variant v_;
};

Carrier carrier_of(const TopologySpec& tau);

/// A basic open of tau containing x. Where tau has no least basic
/// neighborhood at x, `hint` picks a member of the canonical shrinking
/// family (a suffix length for final-digits topologies, an interval depth
/// for order topologies); larger hints give smaller neighborhoods.
BasicOpen basic_nbhd(const TopologySpec& tau, const Integer& x, std::optional<std::size_t> hint = std::nullopt);

enum class Isolation { isolated, not_isolated, inconclusive };

std::string_view to_string(Isolation i);

/// Searches basic neighborhoods of x with hints 0..search_bound for {x}.
/// Answers not_isolated only when the structure of tau rules isolation out.
Isolation is_isolated(const TopologySpec& tau, const Integer& x, std::size_t search_bound);

// ---- canonical text form ---------------------------------------------------
//
//   suffix(00110)  signed-suffix(0110,+)  sign(-)  zero-tail(3)
//   interval(fd,2,0)  interval(variant,-inf,6)  right-open(variant,6,inf)
//   initial(17) = [0,17]  final(17) = [17,∞)  point(15)  whole  empty
//   meet(suffix(110),initial(17))
//
//   discrete  indiscrete  final-digits  signed-final-digits  order(fd)
//   right-open(variant)  initial-segments  final-segments
//   restrict(discrete,[0,17])  blend(discrete,final-digits,[0,17])
//   isolate-below(final-digits,17)  union(final-digits,initial-segments)
//   augment-initial(final-digits)  augment-final(final-digits)

std::string to_string(const BasicOpen& U);
std::string to_string(const TopologySpec& tau);
BasicOpen parse_basic_open(std::string_view text);
TopologySpec parse_topology(std::string_view text);

}  // namespace topoarith
