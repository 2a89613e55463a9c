#pragma once

// Exhaustive checkers. Each runs its outer loop under OpenMP when asked to;
// Execution::serial runs the same loop on one thread and is the reference.
// Results do not depend on the execution mode: the reported counterexample
// is always the one with the least loop index.

#include <cstdint>
#include <optional>
#include <string>

#include "topoarith/continuity.hpp"
#include "topoarith/orders.hpp"

namespace topoarith {

enum class Execution { serial, parallel };

struct KernelResult {
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::optional<std::string> counterexample;
    bool ok() const { return failures == 0; }
};

/// value(digits(v)) = v and canonical digits, for v <= max.
KernelResult numeral_round_trip(std::uint64_t max, Execution exec);
/// d(x,z) <= max(d(x,y), d(y,z)) for all x, y, z <= max, distances from metric2.
KernelResult ultrametric(std::uint64_t max, Execution exec);
/// metric2(x,y) <= 2^-k  ⟺  x ≡ y mod 2^k  ⟺  suffix(x,k) = suffix(y,k).
KernelResult metric_suffix_equivalence(std::uint64_t max, std::size_t max_k, Execution exec);

/// Trichotomy and antisymmetry over all pairs with magnitude <= max.
KernelResult order_trichotomy(OrderKind kind, std::uint64_t max, Execution exec);
/// No 3-cycles among `count` seeded triples with magnitude <= max.
KernelResult order_transitivity(OrderKind kind, std::uint64_t max, std::uint64_t count, std::uint64_t seed,
                                Execution exec);
/// cmp agrees with the exact rank oracle on all pairs with magnitude <= max.
KernelResult oracle_agreement(OrderKind kind, std::uint64_t max, Execution exec);
/// 0 < e even ⇒ e ⊲ 0, o odd ⇒ 0 ⊲ o, for e, o <= max.
KernelResult parity_blocks(std::uint64_t max, Execution exec);

/// Sum and product residues mod 2^k are functions of the input residues,
/// for every k <= max_k and every residue pair; lifted representatives
/// confirm each image.
KernelResult residue_modulus(std::size_t max_k, Execution exec);

/// member(U_s, x) ⟺ x ≡ value(s) mod 2^|s| ⟺ ball of radius 2^-|s| about
/// value(s), for |s| <= max_len and x <= max_x.
KernelResult suffix_ball_residue(std::size_t max_len, std::uint64_t max_x, Execution exec);
/// intersect_suffix(s,t) equals U_s ∩ U_t pointwise on [0, max_x].
KernelResult intersection_rule(std::size_t max_len, std::uint64_t max_x, Execution exec);
/// suffix_class_as_right_open(s) equals U_s pointwise on [0, max_x].
KernelResult right_open_characterization(std::size_t max_len, std::uint64_t max_x, Execution exec);

/// Pointwise soundness of a witness on neighborhood members with |x| <= bound.
KernelResult witness_soundness(const ContinuityWitness& w, std::uint64_t bound, Execution exec);

/// All digit strings of length exactly len, in counting order.
std::vector<DigitString> digit_strings(std::size_t len);

}  // namespace topoarith
