#pragma once

#include "polyperm/block.hpp"
#include "polyperm/equivalence.hpp"
#include "polyperm/hypermatrix.hpp"
#include "polyperm/latin.hpp"
#include "polyperm/support_set.hpp"
#include "polyperm/trade.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace testgen {

using polyperm::Rational;
using polyperm::Shape;
using polyperm::SupportSet;

inline int uniform_int(std::mt19937_64 &rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// A random order-4 permutation: a block permutation with random parameters, or the cyclic
/// latin permutation, moved by a random equivalence.
inline SupportSet random_permutation(int d, std::mt19937_64 &rng)
{
    const Shape shape(d, 4);
    SupportSet base(shape);
    if (d >= 2 && uniform_int(rng, 0, 3) == 0) {
        base = polyperm::latin_to_permutation(polyperm::cyclic_latin_hypercube(Shape(d - 1, 4)));
    } else {
        polyperm::PartitionTuple eps(static_cast<std::size_t>(d));
        for (auto &e : eps)
            e = uniform_int(rng, 1, 3);
        std::vector<std::uint8_t> lambda(std::size_t{1} << (d - 1));
        for (auto &l : lambda)
            l = static_cast<std::uint8_t>(uniform_int(rng, 0, 1));
        base = polyperm::block_permutation(polyperm::make_block_params(eps, uniform_int(rng, 0, 1), lambda));
    }
    return polyperm::apply_equivalence(base, polyperm::EquivalenceElement::random(shape, rng));
}

/// The symmetric difference of two random permutations: every line keeps 0 or 2 cells.
inline SupportSet random_permutation_difference(int d, std::mt19937_64 &rng)
{
    for (;;) {
        SupportSet u = random_permutation(d, rng) ^ random_permutation(d, rng);
        if (!u.empty())
            return u;
    }
}

/// The union of two disjoint random permutations.
inline SupportSet random_double_permutation(int d, std::mt19937_64 &rng)
{
    for (;;) {
        const SupportSet p = random_permutation(d, rng);
        const SupportSet q = random_permutation(d, rng);
        if ((p & q).empty())
            return p | q;
    }
}

/// A double permutation with known direction classes: positions get random class labels, a
/// class K contributes the indicator [sum of its coordinates = 0 or 1 mod 4], the cell is in the
/// support iff an odd number of classes contribute, and every position gets a random symbol
/// relabelling. `classes` receives the partition, sorted, ordered by smallest position.
inline SupportSet random_structured_double_permutation(int d, std::mt19937_64 &rng,
                                                       std::vector<std::vector<int>> *classes = nullptr)
{
    std::vector<int> label(static_cast<std::size_t>(d));
    for (auto &l : label)
        l = uniform_int(rng, 0, d - 1);
    std::vector<std::vector<int>> symbol(static_cast<std::size_t>(d), {0, 1, 2, 3});
    for (auto &perm : symbol)
        std::shuffle(perm.begin(), perm.end(), rng);
    const Shape shape(d, 4);
    SupportSet out(shape);
    for (std::size_t off = 0; off < shape.cell_count(); ++off) {
        const polyperm::Index idx = polyperm::index_of(shape, off);
        std::vector<int> sums(static_cast<std::size_t>(d), 0);
        std::vector<bool> used(static_cast<std::size_t>(d), false);
        for (int i = 0; i < d; ++i) {
            sums[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])] +=
                symbol[static_cast<std::size_t>(i)][static_cast<std::size_t>(idx[i])];
            used[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])] = true;
        }
        int parity = 0;
        for (int k = 0; k < d; ++k)
            if (used[static_cast<std::size_t>(k)] && sums[static_cast<std::size_t>(k)] % 4 < 2)
                parity ^= 1;
        if (parity)
            out.set(off);
    }
    if (classes) {
        classes->clear();
        std::vector<int> seen(static_cast<std::size_t>(d), -1);
        for (int i = 0; i < d; ++i) {
            int &slot = seen[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])];
            if (slot < 0) {
                slot = static_cast<int>(classes->size());
                classes->emplace_back();
            }
            (*classes)[static_cast<std::size_t>(slot)].push_back(i);
        }
    }
    return out;
}

/// A union of a random nonempty subset of the same-line components of a random double
/// permutation (plain or structured).
inline SupportSet random_unitrade(int d, std::mt19937_64 &rng)
{
    const SupportSet dp =
        uniform_int(rng, 0, 1) ? random_double_permutation(d, rng) : random_structured_double_permutation(d, rng);
    const auto comps = polyperm::unitrade_components(dp);
    SupportSet u(dp.shape());
    for (const auto &c : comps)
        if (uniform_int(rng, 0, 1))
            u |= c;
    if (u.empty())
        u = comps[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(comps.size()) - 1))];
    return u;
}

/// Entries p/q with p in 0..max_num (zero with the given probability) and q in 1..max_den.
inline polyperm::HyperMatrix random_rational_matrix(const Shape &shape, std::mt19937_64 &rng, double zero_rate = 0.2,
                                                     int max_num = 9, int max_den = 7)
{
    std::bernoulli_distribution zero(zero_rate);
    std::vector<Rational> entries(shape.cell_count());
    for (auto &e : entries) {
        if (zero(rng))
            continue;
        e = Rational(uniform_int(rng, 1, max_num), uniform_int(rng, 1, max_den));
        e.canonicalize();
    }
    return polyperm::HyperMatrix(shape, std::move(entries));
}

inline SupportSet random_support(const Shape &shape, std::mt19937_64 &rng, double density)
{
    std::bernoulli_distribution on(density);
    SupportSet s(shape);
    for (std::size_t off = 0; off < shape.cell_count(); ++off)
        if (on(rng))
            s.set(off);
    return s;
}

/// Independent permanent oracle: sums over all (d-1)-tuples of permutations of the order,
/// the cell of row i being (i, sigma_1(i), ..., sigma_{d-1}(i)).
inline Rational naive_permanent(const polyperm::HyperMatrix &m)
{
    const Shape &shape = m.shape();
    const int d = shape.d();
    const int n = shape.n();
    std::vector<int> base(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        base[static_cast<std::size_t>(i)] = i;
    std::vector<std::vector<int>> perms;
    do
        perms.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));

    Rational total = 0;
    std::vector<std::size_t> choice(static_cast<std::size_t>(d - 1), 0);
    for (;;) {
        Rational prod = 1;
        for (int i = 0; i < n && prod != 0; ++i) {
            std::size_t off = static_cast<std::size_t>(i);
            for (int k = 0; k < d - 1; ++k)
                off = off * static_cast<std::size_t>(n) +
                      static_cast<std::size_t>(perms[choice[static_cast<std::size_t>(k)]][static_cast<std::size_t>(i)]);
            prod *= m.at(off);
        }
        total += prod;
        int k = d - 2;
        while (k >= 0 && ++choice[static_cast<std::size_t>(k)] == perms.size())
            choice[static_cast<std::size_t>(k--)] = 0;
        if (k < 0)
            break;
    }
    return total;
}

/// Independent positivity oracle on the indicator matrix.
inline bool naive_has_diagonal(const SupportSet &s)
{
    return naive_permanent(polyperm::HyperMatrix::indicator(s)) != 0;
}

} // namespace testgen
