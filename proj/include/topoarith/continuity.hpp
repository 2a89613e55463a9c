#pragma once

// Continuity witnesses, discontinuity refuters and bounded probes.
//
// A ContinuityWitness says: every input tuple drawn from `neighborhoods`
// maps into `target`. Witnesses are plain data; check_witness (and the
// parallel kernel in kernels.hpp) validate them pointwise.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "topoarith/topology.hpp"

namespace topoarith {

enum class Operation { add, mul, sub, translate, pairing, successor, halving, predecessor };

enum class Justification { residue_modulus, monotone_segment, blend_case, isolated_point, zero_section };

std::string_view to_string(Operation op);
std::string_view to_string(Justification j);
Operation parse_operation(std::string_view text);

std::size_t arity(Operation op);

/// op applied to args (translate adds `parameter`). nullopt outside the
/// domain on the given carrier: natural subtraction below zero, halving an
/// odd number, the predecessor of 0.
std::optional<Integer> apply(Operation op, const std::vector<Integer>& args, Carrier carrier = Carrier::naturals,
                             const Natural& parameter = Natural(0));

struct ContinuityWitness {
    Operation op = Operation::add;
    Natural parameter;  // the k of translate(k)
    Carrier carrier = Carrier::naturals;
    std::vector<Integer> point;
    BasicOpen target;
    std::vector<BasicOpen> neighborhoods;
    Justification justification = Justification::residue_modulus;
    /// Intermediate witnesses for composite operations (pairing).
    std::vector<ContinuityWitness> components;
};

std::string describe(const ContinuityWitness& w);

struct DiscontinuityWitness {
    Operation op = Operation::add;
    std::vector<Integer> point;
    BasicOpen target;
    /// Given a basic neighborhood of the point, an element of it whose image
    /// misses the target.
    std::function<Integer(const BasicOpen&)> refuter;
};

/// The identity modulus: agreement mod 2^k in the inputs forces agreement
/// mod 2^k in the output of add, mul and sub.
std::size_t modulus_residue(Operation op, std::size_t k);

/// Symbolic check over residues: lifting x = a + 2^k·i, y = b + 2^k·j, every
/// coefficient of i, j and i·j in op(x, y) is divisible by 2^k, and the
/// constant term is op(a, b). Returns op(a, b) mod 2^k when sound.
std::optional<std::uint64_t> residue_image(Operation op, std::uint64_t a, std::uint64_t b, std::size_t k);

ContinuityWitness witness_final_digits(Operation op, const Natural& x, const Natural& y, std::size_t target_len);
ContinuityWitness witness_segment(Operation op, const TopologySpec& tau, const Natural& x, const Natural& y,
                                  const Natural& bound);
ContinuityWitness witness_blend(Operation op, const TopologySpec& spec, const Natural& x, const Natural& y,
                                const BasicOpen& target);
ContinuityWitness witness_translate(const Natural& k, const Natural& x, std::size_t target_len);
/// A witness for the binary operation in the given topology, dispatching to
/// the constructions above.
ContinuityWitness witness_for(Operation op, const TopologySpec& tau, const Natural& x, const Natural& y,
                              const BasicOpen& target);
/// Union lemma: neighborhoods and targets are met pairwise.
ContinuityWitness combine_union(const ContinuityWitness& a, const ContinuityWitness& b);

struct SoundnessReport {
    std::uint64_t checked = 0;
    std::optional<std::vector<Integer>> counterexample;
    bool sound() const { return !counterexample.has_value(); }
};

/// Serial pointwise check over neighborhood members with |x| <= bound.
SoundnessReport check_witness(const ContinuityWitness& w, const Natural& bound);

/// successor at 1 in the variant order topology, target (0,1)_variant.
/// J must be a variant interval containing 1.
Integer refute_variant_successor(const OrderInterval& J);
DiscontinuityWitness variant_successor_witness();

enum class Restrict17Case { halving_at_30, predecessor_at_18 };
std::string_view to_string(Restrict17Case c);
/// Halving at 30 (target {15}) or predecessor at 18 (target {17}) in
/// restrict(discrete,[0,17]). The refuter returns the least y >= x+2 in the
/// neighborhood, inside the operation's domain, whose image exceeds 17.
DiscontinuityWitness refute_restrict17(Restrict17Case c);

/// Checks that the refuter's answer lies in U and its image misses the target.
bool validate_refutation(const DiscontinuityWitness& w, const BasicOpen& U, Integer* escape = nullptr);

// ---- probes ----------------------------------------------------------------

struct ProbeOutcome {
    bool witness_found = false;
    std::size_t hint = 0;                       // hint of the witness, or the last one tried
    std::vector<BasicOpen> neighborhoods;       // of the witness, or at the last hint
    std::vector<std::vector<Integer>> escapes;  // inputs whose image misses the target
    std::uint64_t samples = 0;
};

struct ProbeParams {
    std::size_t search_bound = 8;
    Natural sample_bound = 4096;
    std::uint64_t seed = 1;
    std::size_t random_samples = 256;
    std::size_t max_escapes = 8;
};

/// Searches basic neighborhoods at hints 1..search_bound for one whose
/// sampled image stays in the target. Samples are carrier elements up to
/// sample_bound, structured points x + 2^j·m (j <= search_bound, |m| <= 3),
/// seeded random points, and least elements of the order intervals on
/// either side of x.
ProbeOutcome probe_continuity(Operation op, const TopologySpec& tau, const std::vector<Integer>& point,
                              const BasicOpen& target, const ProbeParams& params,
                              const Natural& parameter = Natural(0));

enum class ExtremeRole { minimum, maximum, interior, alone };
std::string_view to_string(ExtremeRole r);

struct OrderTopologyReport {
    DigitString s;
    std::size_t bound = 0;
    std::uint64_t class_size = 0;  // |U_s ∩ [0, 2^bound]|
    bool convex = false;           // a ⊲-interval of the truncation
    ExtremeRole convention_role = ExtremeRole::alone;
    /// Members x with no j <= bound such that 1 0^j s ⊲ x ⊲ 1^j s.
    std::uint64_t sandwich_failures = 0;
    std::optional<Natural> first_sandwich_failure;
    bool residue_match = false;
    /// Order neighborhoods of the convention member (hints 0..bound) with a
    /// member outside U_s, and the first such member.
    std::uint64_t order_nbhds_escaping = 0;
    std::optional<Natural> order_escape;
    /// Order neighborhoods of the convention member containing some ball
    /// U_{suffix(m0, L)} on the truncation, L <= bound.
    std::uint64_t order_nbhds_with_ball = 0;
};

OrderTopologyReport probe_order_topology(const DigitString& s, std::size_t bound);

}  // namespace topoarith
