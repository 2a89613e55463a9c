#pragma once

// Machine-word membership for basic opens, used by the exhaustive checkers.

#include <cstdint>
#include <optional>

#include "topoarith/topology.hpp"

namespace topoarith {

/// Membership predicate compiled from a BasicOpen. Points that fit in an
/// int64 take the word path when every part of U has one; everything else
/// falls back to contains_point.
class FastMember {
public:
    explicit FastMember(BasicOpen U);

    bool operator()(std::int64_t x) const;
    bool operator()(const Integer& x) const;
    bool compiled() const noexcept { return compiled_; }

private:
    BasicOpen U_;
    bool compiled_;
};

}  // namespace topoarith
