#include "generators.hpp"

#include "polyperm/block.hpp"
#include "polyperm/equivalence.hpp"
#include "polyperm/errors.hpp"
#include "polyperm/permanent.hpp"
#include "polyperm/realizability.hpp"

#include <doctest.h>

#include <bit>

using namespace polyperm;

namespace {

/// Every partition tuple of length d, in lexicographic order.
std::vector<PartitionTuple> all_tuples(int d)
{
    std::vector<PartitionTuple> out;
    PartitionTuple eps(static_cast<std::size_t>(d), 1);
    for (;;) {
        out.push_back(eps);
        int i = d;
        while (i > 0 && ++eps[static_cast<std::size_t>(i - 1)] > 3)
            eps[static_cast<std::size_t>(--i)] = 1;
        if (i == 0)
            return out;
    }
}

} // namespace

TEST_CASE("part and parity tables")
{
    const int parts[3][4] = {{0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}};
    const int parity[3][4] = {{0, 1, 0, 1}, {0, 0, 1, 1}, {0, 1, 0, 1}};
    for (int e = 1; e <= 3; ++e)
        for (int a = 0; a < 4; ++a) {
            CHECK(part_function(e, a) == parts[e - 1][a]);
            CHECK(parity_function(e, a) == parity[e - 1][a]);
        }
    // Each parity function takes both values on each part of partitions 1 and 2.
    for (int e = 1; e <= 2; ++e)
        for (int part = 0; part < 2; ++part) {
            int sum = 0;
            for (int a = 0; a < 4; ++a)
                if (part_function(e, a) == part)
                    sum += parity_function(e, a);
            CHECK(sum == 1);
        }
    CHECK_THROWS_AS(part_function(4, 0), ShapeError);
    CHECK_THROWS_AS(parity_function(1, 4), ShapeError);
}

TEST_CASE("subcube cells")
{
    CHECK(subcube_cells({2}, 0).indices() == std::vector<Index>{{0}, {2}});
    CHECK(subcube_cells({1}, 1).indices() == std::vector<Index>{{2}, {3}});
    CHECK(subcube_cells({3}, 1).indices() == std::vector<Index>{{1}, {2}});
    // The 2^d subcubes of a tuple tile the cube.
    const PartitionTuple eps{1, 2, 3};
    SupportSet all(Shape(3, 4));
    for (SubcubeId y = 0; y < 8; ++y) {
        const SupportSet c = subcube_cells(eps, y);
        CHECK(c.count() == 8);
        CHECK((all & c).empty());
        all |= c;
    }
    CHECK(all == SupportSet::full(Shape(3, 4)));
    CHECK(subcube_to_string(5, 3) == "101");
}

TEST_CASE("every parameter choice gives a permutation with those parameters")
{
    for (int d = 1; d <= 3; ++d)
        for (const auto &eps : all_tuples(d))
            for (int s = 0; s < 2; ++s)
                for (unsigned bits = 0; bits < (1u << (std::size_t{1} << (d - 1))); ++bits) {
                    std::vector<std::uint8_t> lambda(std::size_t{1} << (d - 1));
                    for (std::size_t k = 0; k < lambda.size(); ++k)
                        lambda[k] = static_cast<std::uint8_t>((bits >> k) & 1u);
                    const BlockParams p = make_block_params(eps, s, lambda);
                    const SupportSet perm = block_permutation(p);
                    REQUIRE(is_permutation_support(perm));
                    // Parameters are unique once the tuple is fixed.
                    const auto back = extract_block_params(perm, eps);
                    REQUIRE(back);
                    CHECK(*back == p);
                    // Filled subcubes carry a 2-element permutation each.
                    for (SubcubeId y : filled_subcubes(p))
                        CHECK((perm & subcube_cells(eps, y)).count() == (std::size_t{1} << (d - 1)));
                }
}

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS(make_block_params({1, 4}, 0, {0, 0}), ShapeError);
    CHECK_THROWS_AS(make_block_params({1, 2}, 2, {0, 0}), ShapeError);
    CHECK_THROWS_AS(make_block_params({1, 2}, 0, {0, 0, 0}), ShapeError);
    BlockParams p = make_block_params({1, 2}, 0, {1, 0});
    p.lambda[1] = 1; // weight 1 is outside the parity class of s = 0
    CHECK_THROWS_AS(check_block_params(p), ShapeError);
}

TEST_CASE("the congruence permutation has unique block parameters")
{
    // In two dimensions the cyclic square has further presentations.
    CHECK(all_block_presentations(m4d(2)).size() > 1);
    for (int d = 3; d <= 5; ++d) {
        const SupportSet m = m4d(d);
        CHECK(m.count() == (std::size_t{1} << (2 * (d - 1))));
        CHECK(is_permutation_support(m));
        const auto presentations = all_block_presentations(m);
        REQUIRE(presentations.size() == 1);
        CHECK(presentations[0].eps == PartitionTuple(static_cast<std::size_t>(d), 2));
        CHECK(presentations[0].s == 0);
        CHECK(presentations[0].lambda == lambda_M(d));
        CHECK(equivalent_to_m4d(m));
    }
    CHECK_FALSE(equivalent_to_m4d(l4d_partner(3) | m4d(3)));
    std::mt19937_64 rng(71);
    for (int round = 0; round < 10; ++round)
        CHECK(equivalent_to_m4d(apply_equivalence(m4d(3), EquivalenceElement::random(Shape(3, 4), rng))));
}

TEST_CASE("the convex family")
{
    const HyperMatrix l = l4d_member(3, Rational(1, 3));
    CHECK(is_polystochastic(l));
    CHECK(l.support() == (m4d(3) | l4d_partner(3)));
    CHECK(is_permutation_support(l4d_partner(3)));
    CHECK(equivalent_to_m4d(l4d_partner(3)));
    CHECK_THROWS_AS(l4d_member(3, Rational(1)), MalformedInput);
    CHECK_THROWS_AS(l4d_member(3, Rational(0)), MalformedInput);
    // Zero permanent for odd dimension; the exact permanent agrees.
    CHECK_FALSE(has_positive_diagonal(l.support()).positive());
    CHECK(permanent_exact(l).value == 0);
}

TEST_CASE("intersection dimensions of subcubes")
{
    CHECK(subcube_intersection_dimension({2, 2}, 0, {2, 2}, 0) == 2);
    CHECK_FALSE(subcube_intersection_dimension({2, 2}, 0, {2, 2}, 1).has_value());
    CHECK(subcube_intersection_dimension({2, 1}, 0, {2, 3}, 2) == 1);
    // Brute-force oracle on cell sets.
    const auto tuples = all_tuples(3);
    for (std::size_t a = 0; a < tuples.size(); a += 5)
        for (std::size_t b = 0; b < tuples.size(); b += 3)
            for (SubcubeId y1 = 0; y1 < 8; ++y1)
                for (SubcubeId y2 = 0; y2 < 8; ++y2) {
                    const auto common = subcube_cells(tuples[a], y1) & subcube_cells(tuples[b], y2);
                    const auto dim = subcube_intersection_dimension(tuples[a], y1, tuples[b], y2);
                    if (common.empty())
                        CHECK_FALSE(dim.has_value());
                    else
                        CHECK(common.count() == (std::size_t{1} << *dim));
                }
}

TEST_CASE("filled subcube profile against the congruence permutation")
{
    for (int d = 3; d <= 4; ++d) {
        const BlockParams m{PartitionTuple(static_cast<std::size_t>(d), 2), 0, lambda_M(d)};
        for (const auto &eps : all_tuples(d))
            for (int s = 0; s < 2; ++s) {
                const BlockParams other = make_block_params(eps, s, std::vector<std::uint8_t>(std::size_t{1} << (d - 1)));
                const int k = static_cast<int>(std::count(eps.begin(), eps.end(), 2));
                const auto prof = tesselation_profile(m, other);
                for (const auto &dims : prof.intersections) {
                    if (k < d) {
                        CHECK(dims.size() == (std::size_t{1} << (d - k - 1)));
                        for (int dim : dims)
                            CHECK(dim == k);
                    } else {
                        CHECK(dims.size() == (s == 0 ? 1u : 0u));
                    }
                }
                if (k == d && s == 1)
                    CHECK_FALSE(prof.index.has_value());
                else
                    CHECK(prof.index == k);
            }
    }
}
