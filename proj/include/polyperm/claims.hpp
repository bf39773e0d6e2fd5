#pragma once

#include "polyperm/report.hpp"
#include "polyperm/support_set.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polyperm {

/// Identifiers accepted by run_claim, in a fixed order.
const std::vector<std::string> &claim_ids();

/// Dispatches to the verifier registered under the id. Throws MalformedInput on an unknown id.
EnumerationReport run_claim(const std::string &claim_id, const VerifyOptions &options = {});

/// census-44: classes of supports of 3-dimensional sesquialteral permutations of order 4.
EnumerationReport census_sesquialteral_3d(const VerifyOptions &options = {});

/// census-double3: every 3-dimensional double permutation support of order 4 has a positive diagonal.
EnumerationReport census_double_perm_3d_positive(const VerifyOptions &options = {});

/// claim-ab: zero-permanent stochastic matrices (A, B, C1, C2) of order 4 with a line of three
/// nonzeros in A, a line of two nonzeros in B and permutations C1, C2.
EnumerationReport verify_claim_AB(const VerifyOptions &options = {});

/// A 4-dimensional stochastic support of order 4 given by its four first-direction hyperplanes.
struct PlaneConfiguration
{
    std::array<SupportSet, 4> hyperplanes;

    /// The stacked 4-dimensional support.
    SupportSet stacked() const;
};

struct ConfigurationSearch
{
    std::optional<PlaneConfiguration> configuration;
    std::uint64_t nodes = 0;
    /// The node budget ran out before the search space was exhausted.
    bool exhausted_budget = false;
};

/// Searches three sesquialteral supports that, stacked after `first` (itself a 3-dimensional
/// sesquialteral support of order 4), give a 4-dimensional support without diagonals.
/// node_budget 0 means unlimited.
ConfigurationSearch find_zero_permanent_configuration(const SupportSet &first, std::uint64_t node_budget = 0);

/// claim-planes: which of the 44 classes occur as a hyperplane of a zero-permanent 4-dimensional
/// stochastic matrix whose first-direction hyperplanes are all sesquialteral.
EnumerationReport verify_claim_planes(const VerifyOptions &options = {});

/// claim-planes-directed: each catalogued type (a)..(h) is the first hyperplane of such a matrix.
EnumerationReport verify_plane_types_embed(const VerifyOptions &options = {});

/// addtofilled-3 / addtofilled-5: every index with coordinate sum 2 mod 4 completes to a diagonal
/// with cells of m4d(d); the catalogued completions are diagonals.
EnumerationReport verify_addtofilled(int d, const VerifyOptions &options = {});

/// nonewinfilled-3: configurations of permutations equivalent to m4d(3) none of which adds a cell
/// to another's filled subcubes.
EnumerationReport verify_nonewinfilled_base(const VerifyOptions &options = {});

/// theorem-small-d: m4d(d) and the l4d support have no diagonal, m4d(d -+ 1) have one. d odd, 3..7.
EnumerationReport verify_theorem_small(int d, const VerifyOptions &options = {});

/// Re-checks every representative and certificate of the report against its claim's defining
/// predicate. Returns an empty string on success, otherwise the first failure.
std::string replay_report(const EnumerationReport &report);

} // namespace polyperm
