#pragma once

#include "polyperm/hypermatrix.hpp"
#include "polyperm/support_set.hpp"

#include <optional>
#include <vector>

namespace polyperm {

/// Every line meets the set in zero or two cells.
bool is_unitrade(const SupportSet &s);

/// Connected components of the same-line graph of a unitrade, ordered by their smallest member.
/// Throws MalformedInput unless s is a unitrade.
std::vector<SupportSet> unitrade_components(const SupportSet &s);

/// A +1/-1 labelling of a unitrade that alternates along every line.
struct SignFunction
{
    SupportSet plus;
    SupportSet minus;

    /// +1, -1, or 0 off the unitrade.
    int sign(std::size_t offset) const { return plus.test(offset) ? 1 : (minus.test(offset) ? -1 : 0); }
};

/// Two-colours the same-line graph, each component's smallest member getting +1.
/// Empty when the graph is not bipartite. Throws MalformedInput unless s is a unitrade.
std::optional<SignFunction> bitrade_sign(const SupportSet &s);

/// The union of the direction-i lines meeting s, minus s. Throws MalformedInput unless s is a unitrade.
SupportSet complement_in_direction(const SupportSet &s, int direction);

/// Union over all even-size direction sets y of the iterated complements along y (applied in
/// increasing position order). Throws MalformedInput unless u is a unitrade.
SupportSet even_completion(const SupportSet &u);

/// Same union with the complements along y applied in the given position order.
SupportSet iterated_complement(const SupportSet &u, const std::vector<int> &directions);

enum class PlaneType
{
    F,
    H,
    Other
};

const char *to_string(PlaneType t);

/// The printed block pattern (F) and cyclic pattern (H) of order 4.
SupportSet plane_pattern_F();
SupportSet plane_pattern_H();

/// Type of a 2-dimensional order-4 support by canonical-form comparison with (F) and (H).
PlaneType classify_plane_2d(const SupportSet &s);

/// Edge colouring of K_d by the common type of the 2-dimensional planes of each direction pair.
struct DirectionColoring
{
    int d = 0;
    /// color[i][j] for i != j, symmetric.
    std::vector<std::vector<PlaneType>> color;

    PlaneType at(int i, int j) const { return color[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

    /// Connected components of the H-coloured edges, each sorted, ordered by smallest position.
    std::vector<std::vector<int>> h_cliques() const;
};

/// Throws MalformedInput when s is not a double permutation, when some 2-plane is neither F nor H,
/// when parallel 2-planes disagree, or when the H edges do not form cliques.
DirectionColoring direction_coloring(const SupportSet &dp);

/// Partition of the positions by "the complements of the first connected component agree".
std::vector<std::vector<int>> direction_equivalence_classes(const SupportSet &dp);

/// c(alpha, beta) = a(alpha) xor b(beta); positions of a come first. Throws ShapeError on an order mismatch.
SupportSet direct_sum(const SupportSet &a, const SupportSet &b);

struct DirectSumDecomposition
{
    /// Position classes, sorted, ordered by smallest position.
    std::vector<std::vector<int>> classes;
    /// One factor per class over that class's positions (in increasing order).
    std::vector<SupportSet> factors;

    /// Direct sum of the factors, positions moved back to their original places.
    SupportSet recombine() const;
};

/// Splits a double permutation into factors over its direction-equivalence classes.
/// Throws MalformedInput when s is not a double permutation or does not split over those classes.
DirectSumDecomposition direct_sum_decompose(const SupportSet &dp);

/// The cells with 0 < a < 1. Throws MalformedInput unless m is a sesquialteral permutation.
SupportSet fractional_unitrade(const HyperMatrix &m);

} // namespace polyperm
