#pragma once

// Back-and-forth isomorphism between (ℕ, ⊲) and (ℚ, <), transported
// arithmetic, and the pairing functions.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "topoarith/continuity.hpp"
#include "topoarith/numerals.hpp"
#include "topoarith/orders.hpp"

namespace topoarith {

// ---- rational enumeration --------------------------------------------------

/// The i-th Calkin–Wilf rational, i >= 1: 1, 1/2, 2, 1/3, 3/2, 2/3, 3, ...
Rational calkin_wilf(const Natural& i);
/// Inverse of calkin_wilf on positive rationals.
Natural calkin_wilf_index(const Rational& q);

/// 0, then cw(1), -cw(1), cw(2), -cw(2), ...
Rational enumerate_rational(const Natural& index);
Natural rational_index(const Rational& q);

/// The rational of least enumeration index strictly inside (lo, hi); absent
/// ends are unbounded.
Rational simplest_between(const std::optional<Rational>& lo, const std::optional<Rational>& hi);

// ---- back-and-forth --------------------------------------------------------

enum class Strategy {
    direct,  // simplest rational, least natural by digit construction
    scan,    // ascending scans through the enumeration and through ℕ
};

class BackAndForth {
public:
    struct Step {
        std::uint64_t t;
        bool forth;
        Natural n;
        Rational q;
    };

    explicit BackAndForth(Strategy strategy = Strategy::direct, std::uint64_t scan_budget = 1'000'000);

    /// Step t (0-based): even t maps the least unmapped natural, odd t hits
    /// the first unused rational in enumeration order.
    void step();
    void run(std::uint64_t steps);

    std::uint64_t steps() const noexcept { return log_.size(); }
    std::optional<Rational> image(const Natural& n) const;
    std::optional<Natural> preimage(const Rational& q) const;

    /// Advance until n (resp. q) is mapped; at most 2n+2 (resp. 2·index+2)
    /// steps in total. Throws BudgetExceeded beyond that or beyond max_steps.
    Rational embed(const Natural& n);
    Natural inverse(const Rational& q);

    const std::map<Natural, Rational, FinalDigitsLess>& forward() const noexcept { return forward_; }
    const std::map<Rational, Natural>& backward() const noexcept { return backward_; }
    const std::vector<Step>& log() const noexcept { return log_; }

    std::uint64_t max_steps = 50'000'000;

private:
    Rational forth_image(const Natural& n) const;
    Natural back_preimage(const Rational& q) const;
    void assign(const Natural& n, const Rational& q, bool forth);

    Strategy strategy_;
    std::uint64_t scan_budget_;
    std::map<Natural, Rational, FinalDigitsLess> forward_;
    std::map<Rational, Natural> backward_;
    std::vector<Step> log_;
    Natural next_natural_;
    Natural next_index_;
};

Rational transported_add(const Rational& q1, const Rational& q2, BackAndForth& state);
Rational transported_mul(const Rational& q1, const Rational& q2, BackAndForth& state);

// ---- pairing ---------------------------------------------------------------

/// (n+m)(n+m+1)/2 + m.
Natural pair_cantor(const Natural& n, const Natural& m);
/// 2·pair_cantor(n, m) = (n+m)(n+m+1) + 2m.
Natural pair_double(const Natural& n, const Natural& m);
std::pair<Natural, Natural> unpair_cantor(const Natural& z);

/// Residue witness for pair_double at (n, m), assembled from add and mul
/// witnesses along (n+m)·(n+m+1) + (m+m).
ContinuityWitness witness_pairing(const Natural& n, const Natural& m, std::size_t target_len);

}  // namespace topoarith
