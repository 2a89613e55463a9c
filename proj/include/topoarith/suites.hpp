#pragma once

// Verification suites and probes behind `verify` and `probe`.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "topoarith/kernels.hpp"
#include "topoarith/report.hpp"

namespace topoarith {

/// numerals, orders, topology, continuity, embedding or all. Records come
/// back in canonical sorted order. Throws PreconditionViolation for an
/// unknown suite name.
std::vector<ReportRecord> run_suite(std::string_view name, std::uint64_t max, std::uint64_t seed,
                                    Execution exec = Execution::parallel);

/// order-topology-equality, signed-add-continuity or transported-continuity.
/// Records are pass or inconclusive, never fail.
std::vector<ReportRecord> run_probe(std::string_view claim, std::size_t bound, std::uint64_t seed);

const std::vector<std::string>& suite_names();
const std::vector<std::string>& probe_claims();

}  // namespace topoarith
