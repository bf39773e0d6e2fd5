#pragma once

#include "polyperm/hypermatrix.hpp"
#include "polyperm/support_set.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polyperm {

/// p_i(a): the part of partition i (1: 01|23, 2: 02|13, 3: 03|12) holding a, with p_i(0) = 0.
int part_function(int partition, int a);
/// mu_i(a): the parity function of partition i, taking both values on each part, mu_i(0) = 0.
int parity_function(int partition, int a);

/// Subcube label y in {0,1}^d packed as a bit mask, bit i holding y_i of position i.
using SubcubeId = std::uint32_t;

std::string subcube_to_string(SubcubeId y, int d);

/// Partition labels (each in 1..3), one per position.
using PartitionTuple = std::vector<int>;

/// Parameters (E, lambda, s) of an order-4 block permutation.
struct BlockParams
{
    PartitionTuple eps;
    int s = 0;
    /// lambda[y] for every y in {0,1}^d; entries whose weight parity differs from s are kept at 0.
    std::vector<std::uint8_t> lambda;

    int d() const { return static_cast<int>(eps.size()); }

    friend bool operator==(const BlockParams &, const BlockParams &) = default;
};

/// Throws ShapeError unless the tuple, parity bit and lambda table fit together.
void check_block_params(const BlockParams &p);

/// Builds params from lambda values listed over the parity-s vectors in increasing mask order.
BlockParams make_block_params(PartitionTuple eps, int s, const std::vector<std::uint8_t> &lambda_on_parity_class);

/// The cells alpha with p_{eps_i}(alpha_i) = y_i for all i.
SupportSet subcube_cells(const PartitionTuple &eps, SubcubeId y);

/// The block permutation with the given parameters.
SupportSet block_permutation(const BlockParams &p);

/// lambda_M on even-weight vectors: 0 when w(x) = 0 mod 4, 1 when w(x) = 2 mod 4.
std::vector<std::uint8_t> lambda_M(int d);

/// {alpha : alpha_1 + ... + alpha_d = 0 mod 4}.
SupportSet m4d(int d);
/// {alpha : alpha_1 + ... + alpha_{d-1} + pi(alpha_d) = 0 mod 4} with pi = (01).
SupportSet l4d_partner(int d);
/// lambda * m4d + (1 - lambda) * l4d_partner. Throws MalformedInput unless 0 < lambda < 1.
HyperMatrix l4d_member(int d, const Rational &lambda);

/// Recovers (lambda, s) of a permutation under a fixed partition tuple, if it is a block permutation there.
std::optional<BlockParams> extract_block_params(const SupportSet &perm, const PartitionTuple &eps);

/// Every partition tuple under which the permutation is a block permutation, with its parameters.
std::vector<BlockParams> all_block_presentations(const SupportSet &perm);

/// The subcubes of weight parity s, in increasing mask order.
std::vector<SubcubeId> filled_subcubes(const BlockParams &p);

/// Dimension of the intersection of subcube y1 under eps1 with subcube y2 under eps2, or empty when disjoint.
std::optional<int> subcube_intersection_dimension(const PartitionTuple &eps1, SubcubeId y1, const PartitionTuple &eps2,
                                                  SubcubeId y2);

struct TesselationProfile
{
    /// Largest intersection dimension over pairs of filled subcubes, or empty for minus infinity.
    std::optional<int> index;
    /// For every filled subcube of the first matrix (in filled_subcubes order): the dimensions of its
    /// nonempty intersections with filled subcubes of the second, in the second's order.
    std::vector<std::vector<int>> intersections;
};

TesselationProfile tesselation_profile(const BlockParams &b1, const BlockParams &b2);
/// Largest intersection dimension of filled subcubes, or empty for minus infinity.
std::optional<int> tesselation_index(const BlockParams &b1, const BlockParams &b2);

/// True iff the support is equivalent to m4d(d) (by canonical forms).
bool equivalent_to_m4d(const SupportSet &s);

} // namespace polyperm
