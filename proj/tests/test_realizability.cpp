#include "generators.hpp"

#include "polyperm/block.hpp"
#include "polyperm/catalog.hpp"
#include "polyperm/permanent.hpp"
#include "polyperm/realizability.hpp"
#include "polyperm/simplex.hpp"

#include <doctest.h>

using namespace polyperm;

namespace {

std::vector<Rational> row(std::initializer_list<int> v)
{
    std::vector<Rational> out;
    for (int x : v)
        out.emplace_back(x);
    return out;
}

} // namespace

TEST_CASE("simplex on small programs")
{
    // max x + y  s.t.  x + 2y + s1 = 4,  3x + y + s2 = 6.  Optimum at (8/5, 6/5).
    auto r = maximize({row({1, 2, 1, 0}), row({3, 1, 0, 1})}, row({4, 6}), row({1, 1, 0, 0}));
    REQUIRE(r.status == LpResult::Status::optimal);
    CHECK(r.value == Rational(14, 5));
    CHECK(r.x[0] == Rational(8, 5));
    CHECK(r.x[1] == Rational(6, 5));

    r = maximize({row({1, 1}), row({1, 1})}, row({1, 2}), row({1, 0}));
    CHECK(r.status == LpResult::Status::infeasible);

    r = maximize({row({1, -1})}, row({0}), row({1, 0}));
    CHECK(r.status == LpResult::Status::unbounded);

    // Redundant equal rows.
    r = maximize({row({1, 1}), row({2, 2})}, row({1, 2}), row({0, 1}));
    REQUIRE(r.status == LpResult::Status::optimal);
    CHECK(r.value == 1);
}

TEST_CASE("degenerate programs terminate")
{
    // Classic cycling example for the textbook pivot rule.
    std::vector<std::vector<Rational>> A = {
        {Rational(1, 2), Rational(-11, 2), Rational(-5, 2), Rational(9), 1, 0, 0},
        {Rational(1, 2), Rational(-3, 2), Rational(-1, 2), Rational(1), 0, 1, 0},
        {Rational(1), Rational(0), Rational(0), Rational(0), 0, 0, 1},
    };
    const auto r = maximize(A, row({0, 0, 1}), {Rational(10), Rational(-57), Rational(-9), Rational(-24), 0, 0, 0});
    REQUIRE(r.status == LpResult::Status::optimal);
    CHECK(r.value == 1);
}

TEST_CASE("polystochastic realization")
{
    // A permutation is realized by itself.
    const auto p = realize_polystochastic(m4d(3));
    REQUIRE(p);
    CHECK(p->matrix == HyperMatrix::indicator(m4d(3)));

    // The full square is realized by J/4 or another interior point; check the defining properties.
    const auto full = realize_polystochastic(SupportSet::full(Shape(2, 4)));
    REQUIRE(full);
    CHECK(is_polystochastic(full->matrix));
    CHECK(full->matrix.support() == SupportSet::full(Shape(2, 4)));

    // A permutation plus one extra cell cannot be the support of a doubly stochastic matrix.
    SupportSet extra = m4d(2);
    extra.insert(Index{0, 1});
    CHECK_FALSE(realize_polystochastic(extra));

    // Both minimal supports with a line of three are realizable.
    for (const auto &a : catalog_minimal_a()) {
        const auto r = realize_polystochastic(a.support);
        REQUIRE(r);
        CHECK(is_polystochastic(r->matrix));
        CHECK(r->matrix.support() == a.support);
    }
}

TEST_CASE("realization agrees with a union-of-permutations oracle in two dimensions")
{
    // Birkhoff: a 0/1 square pattern is a doubly stochastic support iff every member lies on a
    // permutation inside the pattern.
    std::mt19937_64 rng(3);
    const Shape s(2, 4);
    const auto perms = diagonals(s);
    for (int round = 0; round < 200; ++round) {
        const SupportSet x = testgen::random_support(s, rng, 0.55);
        SupportSet covered(s);
        for (const auto &dg : perms) {
            SupportSet cells(s, dg.indices);
            if (cells.is_subset_of(x))
                covered |= cells;
        }
        const bool oracle = !x.empty() && covered == x;
        const auto r = realize_polystochastic(x);
        REQUIRE(r.has_value() == oracle);
        if (r)
            CHECK(is_polystochastic(r->matrix));
    }
}

TEST_CASE("sesquialteral realization")
{
    const auto type_f = catalog_plane_types()[5].support;
    const auto m = realize_sesquialteral(type_f);
    REQUIRE(m);
    CHECK(is_polystochastic(*m));
    CHECK(is_double_permutation_support(type_f));

    const auto c = catalog_plane_types()[2].support;
    const auto mc = realize_sesquialteral(c);
    REQUIRE(mc);
    CHECK(is_polystochastic(*mc));
    CHECK_FALSE(is_double_permutation_support(c));

    // A cell lying on a singleton line and on a doubleton line cannot be sesquialteral.
    SupportSet bad = m4d(2);
    bad.insert(Index{0, 1});
    CHECK_FALSE(realize_sesquialteral(bad));
}
