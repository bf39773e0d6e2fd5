#pragma once

#include "polyperm/rational.hpp"

#include <cstdint>
#include <vector>

namespace polyperm {

/// Outcome of maximize c.x subject to A x = b, x >= 0.
struct LpResult
{
    enum class Status
    {
        optimal,
        infeasible,
        unbounded
    };

    Status status = Status::infeasible;
    Rational value;
    /// An optimal basic solution (empty unless optimal).
    std::vector<Rational> x;
    std::uint64_t pivots = 0;
};

/// Two-phase dense tableau simplex over exact rationals with Bland's rule, so it terminates
/// on degenerate problems. Rows of A may be linearly dependent; redundant rows are dropped
/// after phase one.
LpResult maximize(const std::vector<std::vector<Rational>> &A, const std::vector<Rational> &b,
                  const std::vector<Rational> &c);

} // namespace polyperm
