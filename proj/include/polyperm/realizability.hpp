#pragma once

#include "polyperm/hypermatrix.hpp"
#include "polyperm/support_set.hpp"

#include <optional>

namespace polyperm {

/// True iff every line of every direction sums to exactly 1 (entries are nonnegative by construction).
bool is_polystochastic(const HyperMatrix &m);

/// A polystochastic matrix whose support is exactly the queried set.
struct Realization
{
    HyperMatrix matrix;
};

/// Decides whether some polystochastic matrix has support exactly s by maximizing the
/// smallest entry on s over the line-sum polytope (exact simplex, Bland's rule).
/// Returns the optimal vertex when that minimum is positive.
std::optional<Realization> realize_polystochastic(const SupportSet &s);

/// The forced {0, 1/2, 1} matrix of a sesquialteral support: every line holds one or two members,
/// and each member lies on singleton lines only (entry 1) or doubleton lines only (entry 1/2).
std::optional<HyperMatrix> realize_sesquialteral(const SupportSet &s);

/// Every line holds exactly two members.
bool is_double_permutation_support(const SupportSet &s);

} // namespace polyperm
