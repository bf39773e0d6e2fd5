#pragma once

#include "polyperm/hypermatrix.hpp"
#include "polyperm/support_set.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace polyperm {

/// A position permutation plus one symbol permutation per position.
///
/// Applying it sends index alpha to beta with beta[position_perm[i]] = symbol_perms[i][alpha[i]].
struct EquivalenceElement
{
    std::vector<int> position_perm;
    std::vector<std::vector<int>> symbol_perms;

    static EquivalenceElement identity(const Shape &shape);
    static EquivalenceElement random(const Shape &shape, std::mt19937_64 &rng);
    /// Swaps two positions, no symbol relabelling.
    static EquivalenceElement transposition(const Shape &shape, int a, int b);

    friend bool operator==(const EquivalenceElement &, const EquivalenceElement &) = default;
};

/// Throws ShapeError unless g is a valid element for the shape.
void check_element(const Shape &shape, const EquivalenceElement &g);

/// The element "apply g, then h".
EquivalenceElement compose(const EquivalenceElement &h, const EquivalenceElement &g);
EquivalenceElement inverse(const EquivalenceElement &g);

Index apply_equivalence(const EquivalenceElement &g, const Index &idx);
HyperMatrix apply_equivalence(const HyperMatrix &m, const EquivalenceElement &g);
SupportSet apply_equivalence(const SupportSet &s, const EquivalenceElement &g);

/// Image cell offset of every source offset under g.
std::vector<std::size_t> cell_mapping(const Shape &shape, const EquivalenceElement &g);

struct CanonicalResult
{
    SupportSet form;
    /// apply_equivalence(input, transform) == form.
    EquivalenceElement transform;
    /// Search tree nodes visited.
    std::uint64_t nodes = 0;
};

/// Lexicographically smallest member of the orbit of s under the full equivalence group.
SupportSet canonical_form(const SupportSet &s);
CanonicalResult canonical_form_with_transform(const SupportSet &s);

bool equivalent(const SupportSet &a, const SupportSet &b);

/// Calls f(g) for every element of the group (d! * (n!)^d of them); stops early when f returns false.
void for_each_element(const Shape &shape, const std::function<bool(const EquivalenceElement &)> &f);

/// All permutations of 0..k-1 in lexicographic order.
std::vector<std::vector<int>> all_permutations(int k);

} // namespace polyperm
