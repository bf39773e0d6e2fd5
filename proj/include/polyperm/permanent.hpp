#pragma once

#include "polyperm/hypermatrix.hpp"
#include "polyperm/rational.hpp"
#include "polyperm/support_set.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace polyperm {

/// n cells pairwise distinct in every coordinate, listed by increasing first coordinate.
struct Diagonal
{
    std::vector<Index> indices;

    friend bool operator==(const Diagonal &, const Diagonal &) = default;
    std::string to_string() const;
};

/// True iff `diag` has n indices of the shape that pairwise differ in every coordinate.
bool is_diagonal(const Shape &shape, const Diagonal &diag);

/// Default bound on diagonals visited by enumerating routines: (4!)^6, enough for d = 7 at n = 4.
inline constexpr std::uint64_t default_diagonal_budget = 191102976;

/// (n!)^(d-1), saturating at UINT64_MAX.
std::uint64_t diagonal_count(const Shape &shape);

/// Calls f for every diagonal: the cell with first coordinate 0 comes first, and
/// diagonals appear in lexicographic order of the permutations of the remaining positions.
/// Stops early when f returns false. Throws CapacityError when the diagonal count exceeds the budget.
void for_each_diagonal(const Shape &shape, const std::function<bool(const Diagonal &)> &f,
                       std::uint64_t budget = default_diagonal_budget);

/// All diagonals in the order of for_each_diagonal.
std::vector<Diagonal> diagonals(const Shape &shape, std::uint64_t budget = default_diagonal_budget);

struct PermanentResult
{
    Rational value;
    /// Diagonals whose product was accumulated; diagonals through a zero prefix are skipped.
    std::uint64_t diagonals_visited = 0;
};

/// Exact permanent by summing over diagonals. Throws CapacityError when (n!)^(d-1) exceeds the budget.
PermanentResult permanent_exact(const HyperMatrix &m, std::uint64_t budget = default_diagonal_budget);

/// Either a positive diagonal, or the statement that the exhausted search found none.
struct PositivityWitness
{
    std::optional<Diagonal> diagonal;
    /// Search nodes visited (replayable: the search is deterministic).
    std::uint64_t nodes = 0;

    bool positive() const { return diagonal.has_value(); }
};

/// Searches for a diagonal inside s.
///
/// Each step completes the hyperplane (position, unused value) with the fewest remaining
/// candidate cells, ties going to the smaller position and then the smaller value, and tries
/// the candidates in lexicographic order. Hyperplanes left without candidates prune the branch.
PositivityWitness has_positive_diagonal(const SupportSet &s);

/// A diagonal inside s union {forced} that contains `forced`, if one exists.
std::optional<Diagonal> diagonal_through(const SupportSet &s, const Index &forced);

/// per(m) as the sum, over all n-tuples of pairwise diagonally located planes obtained by fixing
/// `fixed_positions`, of the permanents of the stochastic matrices stacked from those planes.
/// Requires 1 <= d - |fixed_positions| <= d - 1.
Rational plane_decomposition_permanent(const HyperMatrix &m, const std::vector<int> &fixed_positions,
                                       std::uint64_t budget = default_diagonal_budget);

/// Same decomposition applied to positivity: a diagonal of s exists iff some tuple of pairwise
/// diagonally located planes stacks into a support with a diagonal.
PositivityWitness plane_decomposition_positivity(const SupportSet &s, const std::vector<int> &fixed_positions);

} // namespace polyperm
