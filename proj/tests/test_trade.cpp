#include "generators.hpp"

#include "polyperm/catalog.hpp"
#include "polyperm/equivalence.hpp"
#include "polyperm/errors.hpp"
#include "polyperm/realizability.hpp"
#include "polyperm/trade.hpp"

#include <doctest.h>

using namespace polyperm;

TEST_CASE("unitrades and bitrade signs")
{
    std::mt19937_64 rng(41);
    for (int round = 0; round < 50; ++round) {
        const int d = 2 + round % 4;
        const SupportSet u = testgen::random_permutation_difference(d, rng);
        REQUIRE(is_unitrade(u));
        // A difference of two permutations is a bitrade: one side is a subset of each permutation.
        const auto sign = bitrade_sign(u);
        REQUIRE(sign);
        CHECK((sign->plus | sign->minus) == u);
        CHECK((sign->plus & sign->minus).empty());
        // Along every line the two members carry opposite signs.
        u.for_each([&](std::size_t off) {
            for (int dir = 0; dir < d; ++dir) {
                int total = 0;
                for (auto c : line_offsets(u.shape(), off, dir))
                    total += sign->sign(c);
                CHECK(total == 0);
            }
        });
        std::size_t members = 0;
        for (const auto &comp : unitrade_components(u)) {
            CHECK(is_unitrade(comp));
            members += comp.count();
        }
        CHECK(members == u.count());
    }
    SupportSet not_trade(Shape(2, 4), {{0, 0}});
    CHECK_FALSE(is_unitrade(not_trade));
    CHECK_THROWS_AS(bitrade_sign(not_trade), MalformedInput);
}

TEST_CASE("unions of two disjoint permutations are bitrades")
{
    std::mt19937_64 rng(43);
    for (int round = 0; round < 30; ++round) {
        const SupportSet dp = testgen::random_double_permutation(2 + round % 4, rng);
        CHECK(is_unitrade(dp));
        CHECK(bitrade_sign(dp).has_value());
    }
}

TEST_CASE("the line complement of a six-cycle is not a unitrade")
{
    // Three rows and three columns of a square of order 4: the complements pile up in the free row.
    const SupportSet six(Shape(2, 4), {{0, 0}, {0, 3}, {1, 0}, {1, 1}, {2, 1}, {2, 3}});
    REQUIRE(is_unitrade(six));
    const SupportSet c = complement_in_direction(six, 0);
    CHECK(c.count() == 6);
    CHECK_FALSE(is_unitrade(c));
    CHECK_THROWS_AS(even_completion(six), MalformedInput);
}

TEST_CASE("line complements")
{
    std::mt19937_64 rng(47);
    for (int round = 0; round < 40; ++round) {
        const int d = 2 + round % 4;
        const SupportSet u = testgen::random_unitrade(d, rng);
        for (int dir = 0; dir < d; ++dir) {
            const SupportSet c = complement_in_direction(u, dir);
            CHECK(is_unitrade(c));
            CHECK((c & u).empty());
            CHECK(complement_in_direction(c, dir) == u);
        }
    }
    CHECK_THROWS_AS(complement_in_direction(testgen::random_unitrade(3, rng), 3), ShapeError);
}

TEST_CASE("even completion is a double permutation containing the unitrade")
{
    std::mt19937_64 rng(53);
    for (int round = 0; round < 40; ++round) {
        const int d = 2 + round % 4;
        const SupportSet u = testgen::random_unitrade(d, rng);
        const SupportSet e = even_completion(u);
        CHECK(is_double_permutation_support(e));
        CHECK(u.is_subset_of(e));
        // The order of the complements inside one even set does not matter.
        if (d >= 2)
            CHECK(iterated_complement(u, {0, 1}) == iterated_complement(u, {1, 0}));
    }
}

TEST_CASE("plane classification")
{
    CHECK(classify_plane_2d(plane_pattern_F()) == PlaneType::F);
    CHECK(classify_plane_2d(plane_pattern_H()) == PlaneType::H);
    CHECK(classify_plane_2d(SupportSet::full(Shape(2, 4))) == PlaneType::Other);
    CHECK(std::string(to_string(PlaneType::H)) == "H");
}

TEST_CASE("direction colouring of catalogued double permutations")
{
    const auto types = catalog_plane_types();
    // (f) is a direct sum of three order-2 structures: all pairs F.
    const auto f = direction_coloring(types[5].support);
    CHECK(f.at(0, 1) == PlaneType::F);
    CHECK(f.h_cliques().size() == 3);
    // (h) is connected: all pairs H.
    const auto h = direction_coloring(types[7].support);
    CHECK(h.at(0, 1) == PlaneType::H);
    CHECK(h.at(1, 2) == PlaneType::H);
    CHECK(h.h_cliques().size() == 1);
    // (i) has two F pairs and one H pair.
    const auto i = direction_coloring(catalog_type_i().support);
    int h_edges = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            h_edges += i.at(a, b) == PlaneType::H ? 1 : 0;
    CHECK(h_edges == 1);
    CHECK_THROWS_AS(direction_coloring(m4d(3)), MalformedInput);
}

TEST_CASE("direction classes equal the H cliques")
{
    std::mt19937_64 rng(59);
    for (int round = 0; round < 40; ++round) {
        const int d = 2 + round % 4;
        std::vector<std::vector<int>> expected;
        const SupportSet dp = testgen::random_structured_double_permutation(d, rng, &expected);
        REQUIRE(is_double_permutation_support(dp));
        CHECK(direction_coloring(dp).h_cliques() == expected);
        CHECK(direction_equivalence_classes(dp) == expected);
    }
}

TEST_CASE("double permutations outside the coloured class are rejected")
{
    std::mt19937_64 rng(60);
    int rejected = 0;
    for (int round = 0; round < 40; ++round) {
        try {
            direction_coloring(testgen::random_double_permutation(4, rng));
        } catch (const MalformedInput &) {
            ++rejected;
        }
    }
    CHECK(rejected > 0);
}

TEST_CASE("direct sums split and recombine")
{
    std::mt19937_64 rng(61);
    for (int round = 0; round < 30; ++round) {
        const int d = 2 + round % 4;
        std::vector<std::vector<int>> expected;
        const SupportSet dp = testgen::random_structured_double_permutation(d, rng, &expected);
        const auto dec = direct_sum_decompose(dp);
        CHECK(dec.recombine() == dp);
        CHECK(dec.classes == expected);
        for (const auto &f : dec.factors)
            CHECK(is_double_permutation_support(f));
    }
    const SupportSet f2 = plane_pattern_F();
    const SupportSet sum = direct_sum(f2, SupportSet(Shape(1, 4), {{0}, {1}}));
    CHECK(sum.shape() == Shape(3, 4));
    CHECK(is_double_permutation_support(sum));
    CHECK_THROWS_AS(direct_sum(f2, SupportSet(Shape(1, 3))), ShapeError);
}

TEST_CASE("even completions of the catalogued fractional unitrades")
{
    const auto types = catalog_plane_types();
    const SupportSet f = types[5].support;
    const SupportSet h = types[7].support;
    const SupportSet i = catalog_type_i().support;
    const char *expected = "--ffffih";
    for (std::size_t k = 0; k < types.size(); ++k) {
        const auto m = realize_sesquialteral(types[k].support);
        REQUIRE(m);
        const SupportSet u = fractional_unitrade(*m);
        if (expected[k] == '-') {
            CHECK(u.empty());
            continue;
        }
        const SupportSet e = even_completion(u);
        const SupportSet &target = expected[k] == 'f' ? f : (expected[k] == 'h' ? h : i);
        CHECK(equivalent(e, target));
    }
}

TEST_CASE("fractional unitrade of a sesquialteral permutation")
{
    const auto c = catalog_plane_types()[2].support;
    const auto m = realize_sesquialteral(c);
    REQUIRE(m);
    const SupportSet u = fractional_unitrade(*m);
    CHECK(is_unitrade(u));
    CHECK(u.count() == 8);
    CHECK_THROWS_AS(fractional_unitrade(HyperMatrix::constant(Shape(2, 4), Rational(1, 4))), MalformedInput);
}
