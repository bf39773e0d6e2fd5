#include "generators.hpp"

#include "polyperm/block.hpp"
#include "polyperm/errors.hpp"
#include "polyperm/permanent.hpp"

#include <doctest.h>

using namespace polyperm;

TEST_CASE("diagonal enumeration")
{
    const Shape s(3, 4);
    CHECK(diagonal_count(s) == 576);
    const auto all = diagonals(s);
    CHECK(all.size() == 576);
    for (const auto &dg : all)
        CHECK(is_diagonal(s, dg));
    CHECK(all.front().indices.front() == Index{0, 0, 0});
    CHECK_FALSE(is_diagonal(s, Diagonal{{{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {3, 3, 2}}}));
    CHECK_THROWS_AS(diagonals(Shape(8, 4)), CapacityError);
}

TEST_CASE("exact permanent matches the independent oracle")
{
    std::mt19937_64 rng(101);
    for (int d = 1; d <= 4; ++d)
        for (int round = 0; round < 6; ++round) {
            const auto m = testgen::random_rational_matrix(Shape(d, d == 4 ? 3 : 4), rng);
            CHECK(permanent_exact(m).value == testgen::naive_permanent(m));
        }
}

TEST_CASE("closed forms")
{
    // per(J/4) for a 2-dimensional matrix of order 4 is 4!/4^4.
    CHECK(permanent_exact(HyperMatrix::constant(Shape(2, 4), Rational(1, 4))).value == Rational(3, 32));
    // Each of the (4!)^2 diagonals of the constant 1/16 cube has product 16^-4.
    CHECK(permanent_exact(HyperMatrix::constant(Shape(3, 4), Rational(1, 16))).value == Rational(9, 1024));
    CHECK(permanent_exact(HyperMatrix::indicator(m4d(3))).value == 0);
    CHECK(permanent_exact(HyperMatrix::indicator(m4d(2))).value == 1);
}

TEST_CASE("positivity search agrees with the oracle on random supports")
{
    std::mt19937_64 rng(7);
    int positive = 0;
    for (int round = 0; round < 300; ++round) {
        const int d = 2 + round % 3;
        const SupportSet s = testgen::random_support(Shape(d, 4), rng, 0.25 + 0.05 * (round % 5));
        const auto w = has_positive_diagonal(s);
        REQUIRE(w.positive() == testgen::naive_has_diagonal(s));
        if (w.diagonal) {
            ++positive;
            CHECK(is_diagonal(s.shape(), *w.diagonal));
            for (const auto &idx : w.diagonal->indices)
                CHECK(s.contains(idx));
        }
    }
    CHECK(positive > 20);
    CHECK(positive < 280);
}

TEST_CASE("positivity is deterministic and equivalence invariant")
{
    std::mt19937_64 rng(8);
    const SupportSet s = m4d(3) | testgen::random_permutation(3, rng);
    const auto a = has_positive_diagonal(s);
    const auto b = has_positive_diagonal(s);
    CHECK(a.diagonal == b.diagonal);
    CHECK(a.nodes == b.nodes);
    for (int round = 0; round < 20; ++round) {
        const auto g = EquivalenceElement::random(Shape(3, 4), rng);
        CHECK(has_positive_diagonal(apply_equivalence(m4d(3), g)).positive() == false);
    }
}

TEST_CASE("zero pattern of the congruence permutations")
{
    for (int d = 2; d <= 6; ++d)
        CHECK(has_positive_diagonal(m4d(d)).positive() == (d % 2 == 0));
}

TEST_CASE("diagonal through a forced cell")
{
    const SupportSet m = m4d(3);
    const auto dg = diagonal_through(m, Index{2, 2, 2});
    REQUIRE(dg);
    CHECK(is_diagonal(m.shape(), *dg));
    int outside = 0;
    for (const auto &idx : dg->indices)
        outside += m.contains(idx) ? 0 : 1;
    CHECK(outside == 1);
    // A member of m4d(3) lies on no diagonal of m4d(3).
    CHECK_FALSE(diagonal_through(m, Index{0, 0, 0}));
}

TEST_CASE("plane decomposition reproduces the permanent")
{
    std::mt19937_64 rng(31);
    for (int round = 0; round < 4; ++round) {
        const auto m = testgen::random_rational_matrix(Shape(3, 4), rng, 0.5);
        const Rational expected = testgen::naive_permanent(m);
        CHECK(plane_decomposition_permanent(m, {2}) == expected);
        CHECK(plane_decomposition_permanent(m, {0, 1}) == expected);
        const SupportSet s = m.support();
        CHECK(plane_decomposition_positivity(s, {1}).positive() == (expected != 0));
    }
    const auto m4 = HyperMatrix::indicator(m4d(4));
    CHECK(plane_decomposition_permanent(m4, {2, 3}) == permanent_exact(m4).value);
}
