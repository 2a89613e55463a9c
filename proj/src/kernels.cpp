#include "topoarith/kernels.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <sstream>
#include <vector>

#include "topoarith/fastpath.hpp"

namespace topoarith {

namespace {

constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();

bool par(Execution e) { return e == Execution::parallel; }

// splitmix64: counter-based, so sample i is the same under any schedule.
std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t sample(std::uint64_t seed, std::uint64_t i, std::uint64_t j) {
    return splitmix(splitmix(seed ^ splitmix(i)) + j);
}

template <class... Ts>
std::string join(const Ts&... parts) {
    std::ostringstream os;
    ((os << parts), ...);
    return os.str();
}

// Carrier element number i for a kind: 0..max, or -max..max for ℤ.
std::int64_t element(OrderKind kind, std::uint64_t max, std::uint64_t i) {
    if (kind == OrderKind::signed_final_digits) return static_cast<std::int64_t>(i) - static_cast<std::int64_t>(max);
    return static_cast<std::int64_t>(i);
}

std::uint64_t carrier_size(OrderKind kind, std::uint64_t max) {
    return kind == OrderKind::signed_final_digits ? 2 * max + 1 : max + 1;
}

int word_cmp(OrderKind kind, std::int64_t a, std::int64_t b) {
    Ordering o = Ordering::equal;
    switch (kind) {
        case OrderKind::final_digits: o = fd_cmp(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)); break;
        case OrderKind::variant: o = variant_cmp(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)); break;
        case OrderKind::signed_final_digits: o = signed_cmp(a, b); break;
    }
    return o < 0 ? -1 : (o > 0 ? 1 : 0);
}

std::uint64_t suffix_code(const DigitString& s) {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i]) code |= std::uint64_t{1} << i;
    return code;
}

// Bitset over [0, max_x].
struct Bits {
    std::vector<std::uint64_t> w;
    explicit Bits(std::uint64_t n = 0) : w((n + 63) / 64, 0) {}
    void set(std::uint64_t i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool get(std::uint64_t i) const { return (w[i / 64] >> (i % 64)) & 1u; }
};

Bits membership(const BasicOpen& U, std::uint64_t max_x) {
    Bits b(max_x + 1);
    const FastMember fm(U);
    for (std::uint64_t x = 0; x <= max_x; ++x)
        if (fm(static_cast<std::int64_t>(x))) b.set(x);
    return b;
}

std::vector<DigitString> strings_up_to(std::size_t max_len) {
    std::vector<DigitString> out;
    for (std::size_t len = 0; len <= max_len; ++len) {
        auto layer = digit_strings(len);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

// op on words. Overflow or a parameter beyond a word sends the caller to
// the exact path.
struct WordResult {
    bool defined = true;
    bool exact_needed = false;
    std::int64_t value = 0;
};

WordResult word_apply(Operation op, std::int64_t a, std::int64_t b, Carrier carrier, const Natural& parameter) {
    using i128 = __int128;
    const bool nat = carrier == Carrier::naturals;
    i128 z = 0;
    switch (op) {
        case Operation::add: z = i128{a} + b; break;
        case Operation::mul: z = i128{a} * b; break;
        case Operation::sub:
            if (nat && b > a) return {false, false, 0};
            z = i128{a} - b;
            break;
        case Operation::translate: {
            auto k = Integer(parameter).to_i64();
            if (!k) return {true, true, 0};
            z = i128{a} + *k;
            break;
        }
        case Operation::pairing: {
            const i128 s = i128{a} + b;
            if (s > (i128{1} << 40) || s < -(i128{1} << 40)) return {true, true, 0};
            z = s * (s + 1) + 2 * i128{b};
            break;
        }
        case Operation::successor: z = i128{a} + 1; break;
        case Operation::halving:
            if (a % 2 != 0) return {false, false, 0};
            z = a / 2;
            break;
        case Operation::predecessor:
            if (nat && a == 0) return {false, false, 0};
            z = i128{a} - 1;
            break;
    }
    if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min())
        return {true, true, 0};
    return {true, false, static_cast<std::int64_t>(z)};
}

}  // namespace

std::vector<DigitString> digit_strings(std::size_t len) {
    std::vector<DigitString> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << len); ++code) {
        std::vector<bool> bits(len);
        for (std::size_t i = 0; i < len; ++i) bits[i] = (code >> i) & 1u;
        out.emplace_back(std::move(bits));
    }
    return out;
}

KernelResult numeral_round_trip(std::uint64_t max, Execution exec) {
    KernelResult r;
    std::uint64_t first = none, failures = 0;
#pragma omp parallel for if (par(exec)) reduction(min : first) reduction(+ : failures) schedule(static)
    for (std::uint64_t v = 0; v <= max; ++v) {
        const Natural n(v);
        const auto digits = n.digits();
        const bool canonical = digits.empty() || digits.back();
        if (!canonical || Natural::from_digits(DigitString(digits)) != n || digits.size() != n.length()) {
            ++failures;
            first = std::min(first, v);
        }
    }
    r.checked = max + 1;
    r.failures = failures;
    if (failures) r.counterexample = join("v=", first);
    return r;
}

KernelResult ultrametric(std::uint64_t max, Execution exec) {
    const std::uint64_t n = max + 1;
    // rank[x*n+y]: 0 for d = 0, else 64 - v2, so larger rank = larger distance.
    std::vector<std::uint8_t> rank(n * n);
#pragma omp parallel for if (par(exec)) schedule(static)
    for (std::uint64_t x = 0; x < n; ++x)
        for (std::uint64_t y = 0; y < n; ++y) {
            const Rational d = metric2(Natural(x), Natural(y));
            std::uint8_t k = 0;
            if (d != 0) {
                const BigInt den = boost::multiprecision::denominator(d);
                k = static_cast<std::uint8_t>(64 - boost::multiprecision::msb(den));
            }
            rank[x * n + y] = k;
        }
    KernelResult r;
    std::uint64_t first = none, failures = 0;
#pragma omp parallel for if (par(exec)) reduction(min : first) reduction(+ : failures) schedule(static)
    for (std::uint64_t x = 0; x < n; ++x)
        for (std::uint64_t y = 0; y < n; ++y) {
            const std::uint8_t* rx = &rank[x * n];
            const std::uint8_t* ry = &rank[y * n];
            const std::uint8_t dxy = rx[y];
            for (std::uint64_t z = 0; z < n; ++z)
                if (rx[z] > std::max(dxy, ry[z])) {
                    ++failures;
                    first = std::min(first, (x * n + y) * n + z);
                }
        }
    r.checked = n * n * n;
    r.failures = failures;
    if (failures) r.counterexample = join("x=", first / (n * n), " y=", first / n % n, " z=", first % n);
    return r;
}

KernelResult metric_suffix_equivalence(std::uint64_t max, std::size_t max_k, Execution exec) {
    const std::uint64_t n = max + 1;
    std::vector<std::uint64_t> codes((max_k + 1) * n);
#pragma omp parallel for if (par(exec)) schedule(static)
    for (std::uint64_t x = 0; x < n; ++x)
        for (std::size_t k = 0; k <= max_k; ++k) codes[k * n + x] = suffix_code(suffix(Natural(x), k));
    KernelResult r;
    std::uint64_t first = none, failures = 0;
#pragma omp parallel for if (par(exec)) reduction(min : first) reduction(+ : failures) schedule(dynamic, 16)
    for (std::uint64_t x = 0; x < n; ++x)
        for (std::uint64_t y = 0; y < n; ++y) {
            // d = 2^-v, or v = infinity when d = 0; anything else is a failure.
            const Rational d = metric2(Natural(x), Natural(y));
            std::size_t v = std::numeric_limits<std::size_t>::max();
            bool dyadic = true;
            if (d != 0) {
                const BigInt num = boost::multiprecision::numerator(d);
                const BigInt den = boost::multiprecision::denominator(d);
                const std::size_t e = boost::multiprecision::msb(den);
                dyadic = num == 1 && den == (BigInt(1) << e);
                v = e;
            }
            for (std::size_t k = 0; k <= max_k; ++k) {
                const bool ball = dyadic && v >= k;
                const bool congruent = x % (std::uint64_t{1} << k) == y % (std::uint64_t{1} << k);
                const bool same_suffix = codes[k * n + x] == codes[k * n + y];
                if (ball != congruent || congruent != same_suffix) {
                    ++failures;
                    first = std::min(first, (x * n + y) * (max_k + 1) + k);
                }
            }
        }
    r.checked = n * n * (max_k + 1);
    r.failures = failures;
    if (failures) {
        const std::uint64_t k = first % (max_k + 1), xy = first / (max_k + 1);
        r.counterexample = join("x=", xy / n, " y=", xy % n, " k=", k);
    }
    return r;
}

KernelResult order_trichotomy(OrderKind kind, std::uint64_t max, Execution exec) {
    const std::uint64_t n = carrier_size(kind, max);
    KernelResult r;
    std::uint64_t first = none, failures = 0;
#pragma omp parallel for if (par(exec)) reduction(min : first) reduction(+ : failures) schedule(static)
    for (std::uint64_t i = 0; i < n; ++i) {
        const std::int64_t a = element(kind, max, i);
        for (std::uint64_t j = 0; j < n; ++j) {
            const std::int64_t b = element(kind, max, j);
            const int ab = word_cmp(kind, a, b);
            const int ba = word_cmp(kind, b, a);
            if (ab != -ba || (ab == 0) != (a == b)) {
                ++failures;
                first = std::min(first, i * n + j);
            }
        }
    }
    r.checked = n * n;
    r.failures = failures;
    if (failures) r.counterexample = join("a=", element(kind, max, first / n), " b=", element(kind, max, first % n));
    return r;
}

KernelResult order_transitivity(OrderKind kind, std::uint64_t max, std::uint64_t count, std::uint64_t seed,
                                Execution exec) {
    const std::uint64_t n = carrier_size(kind, max);
    KernelResult r;
    std::uint64_t first = none, failures = 0;
#pragma omp parallel for if (par(exec)) reduction(min : first) reduction(+ : failures) schedule(static)
    for (std::uint64_t t = 0; t < count; ++t) {
        const std::int64_t a = element(kind, max, sample(seed, t, 0) % n);
        const std::int64_t b = element(kind, max, sample(seed, t, 1) % n);
        const std::int64_t c = element(kind, max, sample(seed, t, 2) % n);
        const int ab = word_cmp(kind, a, b), bc = word_cmp(kind, b, c), ac = word_cmp(kind, a, c);
        const bool bad = (ab < 0 && bc < 0 && ac >= 0) || (ab > 0 && bc > 0 && ac <= 0) ||
                         (ab == 0 && bc != ac) || (bc == 0 && ab != ac);
        if (bad) {
            ++failures;
            first = std::min(first, t);
        }
    }
    r.checked = count;
    r.failures = failures;
    if (failures)
        r.counterexample = join("a=", element(kind, max, sample(seed, first, 0) % n),
                                " b=", element(kind, max, sample(seed, first, 1) % n),
                                " c=", element(kind, max, sample(seed, first, 2) % n));
    return r;
}

KernelResult oracle_agreement(OrderKind kind, std::uint64_t max, Execution exec) {
    const std::uint64_t n = carrier_size(kind, max);
    std::vector<Rational> ranks(n);
#pragma omp parallel for if (par(exec)) schedule(static)
    for (std::uint64_t i = 0; i < n; ++i) ranks[i] = rank_of(kind, Integer(element(kind, max, i)));
    // Position of each element when sorted by its exact rank.
    std::vector<std::uint64_t> order(n), pos(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) { return ranks[a] < ranks[b]; });
    KernelResult r;
    std::uint64_t ties = 0;
    for (std::uint64_t k = 0; k < n; ++k) {
        pos[order[k]] = k;
        if (k && ranks[order[k]] == ranks[order[k - 1]]) ++ties;
    }
    if (ties) {
        r.failures = ties;
        r.counterexample = "rank map is not injective";
        return r;
    }
    std::uint64_t first = none, failures = 0;
#pragma omp parallel for if (par(exec)) reduction(min : first) reduction(+ : failures) schedule(static)
    for (std::uint64_t i = 0; i < n; ++i) {
        const std::int64_t a = element(kind, max, i);
        const std::uint64_t pa = pos[i];
        for (std::uint64_t j = 0; j < n; ++j) {
            const int c = word_cmp(kind, a, element(kind, max, j));
            const int o = pa < pos[j] ? -1 : (pa > pos[j] ? 1 : 0);
            if (c != o) {
                ++failures;
                first = std::min(first, i * n + j);
            }
        }
    }
    r.checked = n * n;
    r.failures = failures;
    if (failures) r.counterexample = join("a=", element(kind, max, first / n), " b=", element(kind, max, first % n));
    return r;
}

KernelResult parity_blocks(std::uint64_t max, Execution exec) {
    KernelResult r;
    std::uint64_t first = none, failures = 0;
#pragma omp parallel for if (par(exec)) reduction(min : first) reduction(+ : failures) schedule(static)
    for (std::uint64_t v = 1; v <= max; ++v) {
        const bool ok = v % 2 == 0 ? fd_cmp(v, 0) < 0 : fd_cmp(std::uint64_t{0}, v) < 0;
        if (!ok) {
            ++failures;
            first = std::min(first, v);
        }
    }
    r.checked = max;
    r.failures = failures;
    if (failures) r.counterexample = join("v=", first);
    return r;
}

KernelResult residue_modulus(std::size_t max_k, Execution exec) {
    KernelResult r;
    for (std::size_t k = 0; k <= max_k && r.failures == 0; ++k) {
        const std::uint64_t m = std::uint64_t{1} << k;
        std::uint64_t first = none, failures = 0;
#pragma omp parallel for if (par(exec)) reduction(min : first) reduction(+ : failures) schedule(static)
        for (std::uint64_t a = 0; a < m; ++a)
            for (std::uint64_t b = 0; b < m; ++b) {
                bool ok = true;
                for (Operation op : {Operation::add, Operation::mul}) {
                    auto img = residue_image(op, a, b, k);
                    if (!img) {
                        ok = false;
                        break;
                    }
                    // Lifted representatives land on the same residue.
                    for (std::uint64_t t = 0; t < 2 && ok; ++t) {
                        const std::uint64_t i = sample(k, a * m + b, 2 * t) % 4096;
                        const std::uint64_t j = sample(k, a * m + b, 2 * t + 1) % 4096;
                        const std::uint64_t x = a + m * i, y = b + m * j;
                        const std::uint64_t z = op == Operation::add ? x + y : x * y;
                        ok = z % m == *img;
                    }
                    if (!ok) break;
                }
                if (!ok) {
                    ++failures;
                    first = std::min(first, a * m + b);
                }
            }
        r.checked += m * m;
        r.failures += failures;
        if (failures) r.counterexample = join("k=", k, " a=", first / m, " b=", first % m);
    }
    return r;
}

KernelResult suffix_ball_residue(std::size_t max_len, std::uint64_t max_x, Execution exec) {
    const auto strings = strings_up_to(max_len);
    const std::uint64_t n = strings.size();
    KernelResult r;
    std::uint64_t first = none, failures = 0;
#pragma omp parallel for if (par(exec)) reduction(min : first) reduction(+ : failures) schedule(dynamic, 4)
    for (std::uint64_t si = 0; si < n; ++si) {
        const DigitString& s = strings[si];
        const FastMember fm(SuffixClass{s});
        const std::uint64_t m0 = static_cast<std::uint64_t>(s.value());
        const std::uint64_t mod = std::uint64_t{1} << s.size();
        for (std::uint64_t x = 0; x <= max_x; ++x) {
            const bool in = fm(static_cast<std::int64_t>(x));
            const bool congruent = x % mod == m0;
            const std::uint64_t diff = x > m0 ? x - m0 : m0 - x;
            const bool ball = diff == 0 || static_cast<std::size_t>(std::countr_zero(diff)) >= s.size();
            if (in != congruent || congruent != ball) {
                ++failures;
                first = std::min(first, si * (max_x + 1) + x);
            }
        }
    }
    r.checked = n * (max_x + 1);
    r.failures = failures;
    if (failures)
        r.counterexample = join("s=", strings[first / (max_x + 1)].str(), " x=", first % (max_x + 1));
    return r;
}

KernelResult intersection_rule(std::size_t max_len, std::uint64_t max_x, Execution exec) {
    const auto strings = strings_up_to(max_len);
    const std::uint64_t n = strings.size();
    std::vector<Bits> sets(n);
#pragma omp parallel for if (par(exec)) schedule(dynamic, 4)
    for (std::uint64_t i = 0; i < n; ++i) sets[i] = membership(SuffixClass{strings[i]}, max_x);
    // Index of each string for looking up the set named by the rule.
    auto index_of = [&](const DigitString& s) {
        std::uint64_t base = (std::uint64_t{1} << s.size()) - 1;
        return base + suffix_code(s);
    };
    const std::size_t words = sets.empty() ? 0 : sets[0].w.size();
    KernelResult r;
    std::uint64_t first = none, failures = 0;
#pragma omp parallel for if (par(exec)) reduction(min : first) reduction(+ : failures) schedule(dynamic, 4)
    for (std::uint64_t i = 0; i < n; ++i)
        for (std::uint64_t j = 0; j < n; ++j) {
            const BasicOpen rule = intersect_suffix(strings[i], strings[j]);
            const Bits* named = nullptr;
            if (auto c = rule.as<SuffixClass>()) named = &sets[index_of(c->s)];
            bool ok = rule.as<SuffixClass>() || rule.as<EmptySet>();
            for (std::size_t w = 0; w < words && ok; ++w) {
                const std::uint64_t actual = sets[i].w[w] & sets[j].w[w];
                ok = actual == (named ? named->w[w] : 0);
            }
            if (!ok) {
                ++failures;
                first = std::min(first, i * n + j);
            }
        }
    r.checked = n * n;
    r.failures = failures;
    if (failures) r.counterexample = join("s=", strings[first / n].str(), " t=", strings[first % n].str());
    return r;
}

KernelResult right_open_characterization(std::size_t max_len, std::uint64_t max_x, Execution exec) {
    const auto strings = strings_up_to(max_len);
    const std::uint64_t n = strings.size();
    KernelResult r;
    std::uint64_t first = none, failures = 0;
#pragma omp parallel for if (par(exec)) reduction(min : first) reduction(+ : failures) schedule(dynamic, 4)
    for (std::uint64_t si = 0; si < n; ++si) {
        const FastMember suffix_set(SuffixClass{strings[si]});
        const FastMember interval(suffix_class_as_right_open(strings[si]));
        for (std::uint64_t x = 0; x <= max_x; ++x)
            if (suffix_set(static_cast<std::int64_t>(x)) != interval(static_cast<std::int64_t>(x))) {
                ++failures;
                first = std::min(first, si * (max_x + 1) + x);
            }
    }
    r.checked = n * (max_x + 1);
    r.failures = failures;
    if (failures)
        r.counterexample = join("s=", strings[first / (max_x + 1)].str(), " x=", first % (max_x + 1));
    return r;
}

KernelResult witness_soundness(const ContinuityWitness& w, std::uint64_t bound, Execution exec) {
    KernelResult r;
    for (std::size_t i = 0; i < w.point.size(); ++i)
        if (!contains_point(w.neighborhoods[i], w.point[i])) {
            r.failures = 1;
            r.counterexample = "neighborhood " + std::to_string(i) + " misses the point";
            return r;
        }
    std::vector<std::vector<Integer>> members;
    for (const auto& U : w.neighborhoods) members.push_back(elements_up_to(U, Natural(bound), w.carrier));
    if (w.target.as<WholeSpace>()) {
        r.checked = 1;
        for (const auto& m : members) r.checked *= m.size();
        return r;
    }
    std::vector<std::vector<std::int64_t>> words;
    for (const auto& m : members) {
        words.emplace_back();
        for (const auto& v : m) words.back().push_back(*v.to_i64());
    }
    const FastMember target(w.target);
    const std::uint64_t outer = members[0].size();
    const std::uint64_t inner = members.size() > 1 ? members[1].size() : 1;
    std::uint64_t first = none, failures = 0, checked = 0;
#pragma omp parallel for if (par(exec)) reduction(min : first) reduction(+ : failures, checked) schedule(dynamic, 8)
    for (std::uint64_t i = 0; i < outer; ++i)
        for (std::uint64_t j = 0; j < inner; ++j) {
            const std::int64_t a = words[0][i];
            const std::int64_t b = members.size() > 1 ? words[1][j] : 0;
            const WordResult fast = word_apply(w.op, a, b, w.carrier, w.parameter);
            if (!fast.defined) continue;
            bool in;
            if (fast.exact_needed) {
                std::vector<Integer> args{members[0][i]};
                if (members.size() > 1) args.push_back(members[1][j]);
                auto z = apply(w.op, args, w.carrier, w.parameter);
                if (!z) continue;
                in = target(*z);
            } else {
                in = target(fast.value);
            }
            ++checked;
            if (!in) {
                ++failures;
                first = std::min(first, i * inner + j);
            }
        }
    r.checked = checked;
    r.failures = failures;
    if (failures) {
        std::ostringstream os;
        os << "(" << members[0][first / inner].str();
        if (members.size() > 1) os << "," << members[1][first % inner].str();
        os << ")";
        r.counterexample = os.str();
    }
    return r;
}

}  // namespace topoarith
