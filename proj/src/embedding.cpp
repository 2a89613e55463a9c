#include "topoarith/embedding.hpp"

#include <algorithm>
#include <utility>

namespace topoarith {

namespace mp = boost::multiprecision;

// ---- rational enumeration --------------------------------------------------

Rational calkin_wilf(const Natural& i) {
    if (i.is_zero()) throw PreconditionViolation("calkin_wilf is indexed from 1");
    BigInt a = 1, b = 1;
    for (std::size_t k = i.length() - 1; k-- > 0;) {
        if (i.bit(k))
            a += b;
        else
            b += a;
    }
    return Rational(a, b);
}

Natural calkin_wilf_index(const Rational& q) {
    if (q <= 0) throw PreconditionViolation("calkin_wilf_index needs a positive rational");
    BigInt p = mp::numerator(q), d = mp::denominator(q);
    // Runs of equal moves from q up to 1/1, leaf first.
    std::vector<std::pair<bool, BigInt>> runs;
    while (p != d) {
        if (p < d) {
            BigInt k = (d - 1) / p;
            d -= k * p;
            runs.emplace_back(false, k);
        } else {
            BigInt k = (p - 1) / d;
            p -= k * d;
            runs.emplace_back(true, k);
        }
    }
    BigInt index = 1;
    for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
        const auto k = static_cast<unsigned>(it->second);
        index <<= k;
        if (it->first) index |= (BigInt(1) << k) - 1;
    }
    return Natural(index);
}

Rational enumerate_rational(const Natural& index) {
    if (index.is_zero()) return 0;
    const BigInt& v = index.value();
    if (v % 2 == 1) return calkin_wilf(Natural(BigInt((v + 1) / 2)));
    return -calkin_wilf(Natural(BigInt(v / 2)));
}

Natural rational_index(const Rational& q) {
    if (q == 0) return Natural(0);
    if (q > 0) return Natural(BigInt(calkin_wilf_index(q).value() * 2 - 1));
    return Natural(BigInt(calkin_wilf_index(-q).value() * 2));
}

namespace {

BigInt floor_nonneg(const Rational& x) { return mp::numerator(x) / mp::denominator(x); }

// Simplest rational in (x, y) for 0 <= x < y; y absent is +∞.
Rational simplest_nonneg(Rational x, std::optional<Rational> y) {
    BigInt whole = 0;
    std::vector<BigInt> terms;
    // Continued-fraction descent; unwound below as whole + 1/(...).
    for (;;) {
        const BigInt f = floor_nonneg(x);
        const Rational n(f + 1);
        if (!y || n < *y) {
            Rational r = n;
            for (auto it = terms.rbegin(); it != terms.rend(); ++it) r = Rational(*it) + 1 / r;
            return r;
        }
        terms.push_back(f);
        const Rational xf = x - f;
        const Rational yf = *y - f;
        x = 1 / yf;
        y = xf == 0 ? std::nullopt : std::optional<Rational>(1 / xf);
    }
}

}  // namespace

Rational simplest_between(const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
    if (lo && hi && *lo >= *hi) throw EmptyInterval("simplest_between: empty interval");
    const bool zero_above_lo = !lo || *lo < 0;
    const bool zero_below_hi = !hi || *hi > 0;
    if (zero_above_lo && zero_below_hi) return 0;
    if (!zero_below_hi) {
        std::optional<Rational> nhi;
        if (lo) nhi = -*lo;
        return -simplest_nonneg(-*hi, nhi);
    }
    return simplest_nonneg(*lo, hi);
}

// ---- back-and-forth --------------------------------------------------------

BackAndForth::BackAndForth(Strategy strategy, std::uint64_t scan_budget)
    : strategy_(strategy), scan_budget_(scan_budget) {}

std::optional<Rational> BackAndForth::image(const Natural& n) const {
    auto it = forward_.find(n);
    if (it == forward_.end()) return std::nullopt;
    return it->second;
}

std::optional<Natural> BackAndForth::preimage(const Rational& q) const {
    auto it = backward_.find(q);
    if (it == backward_.end()) return std::nullopt;
    return it->second;
}

Rational BackAndForth::forth_image(const Natural& n) const {
    std::optional<Rational> lo, hi;
    auto it = forward_.upper_bound(n);
    if (it != forward_.end()) hi = it->second;
    if (it != forward_.begin()) lo = std::prev(it)->second;
    if (strategy_ == Strategy::direct) return simplest_between(lo, hi);
    for (std::uint64_t i = 0; i < scan_budget_; ++i) {
        Rational q = enumerate_rational(Natural(i));
        if ((!lo || *lo < q) && (!hi || q < *hi)) return q;
    }
    throw BudgetExceeded("forth step: no rational found within the scan budget");
}

Natural BackAndForth::back_preimage(const Rational& q) const {
    std::optional<Integer> lo, hi;
    auto it = backward_.upper_bound(q);
    if (it != backward_.end()) hi = Integer(it->second);
    if (it != backward_.begin()) lo = Integer(std::prev(it)->second);
    if (strategy_ == Strategy::direct) {
        auto n = least_in_interval(OrderKind::final_digits, lo, hi);
        if (!n) throw std::logic_error("back step: empty ⊲-interval");
        return n->to_natural();
    }
    for (std::uint64_t n = 0; n < scan_budget_; ++n) {
        const Natural c(n);
        if ((!lo || fd_cmp(lo->to_natural(), c) < 0) && (!hi || fd_cmp(c, hi->to_natural()) < 0)) return c;
    }
    throw BudgetExceeded("back step: no natural found within the scan budget");
}

void BackAndForth::assign(const Natural& n, const Rational& q, bool forth) {
    forward_.emplace(n, q);
    backward_.emplace(q, n);
    log_.push_back({log_.size(), forth, n, q});
}

void BackAndForth::step() {
    if (steps() >= max_steps) throw BudgetExceeded("back-and-forth step budget exhausted");
    if (steps() % 2 == 0) {
        while (forward_.count(next_natural_)) next_natural_ = next_natural_ + Natural(1);
        assign(next_natural_, forth_image(next_natural_), true);
    } else {
        Rational q = enumerate_rational(next_index_);
        while (backward_.count(q)) {
            next_index_ = next_index_ + Natural(1);
            q = enumerate_rational(next_index_);
        }
        assign(back_preimage(q), q, false);
    }
}

void BackAndForth::run(std::uint64_t steps) {
    for (std::uint64_t i = 0; i < steps; ++i) step();
}

Rational BackAndForth::embed(const Natural& n) {
    const Natural limit = Natural(2) * n + Natural(2);
    while (true) {
        if (auto q = image(n)) return *q;
        if (Natural(steps()) >= limit) throw BudgetExceeded("embed: " + n.str() + " unmapped after " + limit.str() + " steps");
        step();
    }
}

Natural BackAndForth::inverse(const Rational& q) {
    std::optional<Natural> limit;
    while (true) {
        if (auto n = preimage(q)) return *n;
        if (!limit) limit = Natural(2) * rational_index(q) + Natural(2);
        if (Natural(steps()) >= *limit)
            throw BudgetExceeded("inverse: " + to_string(q) + " unhit after " + limit->str() + " steps");
        step();
    }
}

Rational transported_add(const Rational& q1, const Rational& q2, BackAndForth& state) {
    return state.embed(state.inverse(q1) + state.inverse(q2));
}

Rational transported_mul(const Rational& q1, const Rational& q2, BackAndForth& state) {
    return state.embed(state.inverse(q1) * state.inverse(q2));
}

// ---- pairing ---------------------------------------------------------------

Natural pair_cantor(const Natural& n, const Natural& m) {
    const Natural s = n + m;
    return Natural(BigInt(s.value() * (s.value() + 1) / 2)) + m;
}

Natural pair_double(const Natural& n, const Natural& m) {
    const Natural s = n + m;
    return s * (s + Natural(1)) + m + m;
}

std::pair<Natural, Natural> unpair_cantor(const Natural& z) {
    const BigInt w = (mp::sqrt(BigInt(8 * z.value() + 1)) - 1) / 2;
    const BigInt t = w * (w + 1) / 2;
    const BigInt m = z.value() - t;
    return {Natural(BigInt(w - m)), Natural(m)};
}

ContinuityWitness witness_pairing(const Natural& n, const Natural& m, std::size_t target_len) {
    const Natural s = n + m;
    ContinuityWitness sum = witness_final_digits(Operation::add, n, m, target_len);
    ContinuityWitness succ = witness_translate(Natural(1), s, target_len);
    ContinuityWitness prod = witness_final_digits(Operation::mul, s, s + Natural(1), target_len);
    ContinuityWitness twice = witness_final_digits(Operation::add, m, m, target_len);
    ContinuityWitness out = witness_final_digits(Operation::add, s * (s + Natural(1)), m + m, target_len);
    // Each stage's neighborhoods must be the previous stages' targets.
    if (!(succ.neighborhoods[0] == sum.target && prod.neighborhoods[0] == sum.target &&
          prod.neighborhoods[1] == succ.target && out.neighborhoods[0] == prod.target &&
          out.neighborhoods[1] == twice.target))
        throw std::logic_error("witness_pairing: stages do not compose");

    ContinuityWitness w;
    w.op = Operation::pairing;
    w.point = {Integer(n), Integer(m)};
    w.target = out.target;
    w.neighborhoods = {sum.neighborhoods[0], sum.neighborhoods[1]};
    w.justification = Justification::residue_modulus;
    w.components = {sum, succ, prod, twice, out};
    return w;
}

}  // namespace topoarith
