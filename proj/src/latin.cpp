#include "polyperm/latin.hpp"

#include "polyperm/errors.hpp"

namespace polyperm {

namespace {

/// Symbol stored at a cell, or -1 when the entry is not an integer in 0..n-1.
int symbol_at(const HyperMatrix &q, std::size_t off)
{
    const Rational &v = q.at(off);
    if (v.get_den() != 1 || v.get_num() >= q.shape().n())
        return -1;
    return static_cast<int>(v.get_num().get_si());
}

} // namespace

bool is_latin_hypercube(const HyperMatrix &q)
{
    const Shape &shape = q.shape();
    const std::size_t n = static_cast<std::size_t>(shape.n());
    for (std::size_t off = 0; off < shape.cell_count(); ++off)
        if (symbol_at(q, off) < 0)
            return false;
    for (int dir = 0; dir < shape.d(); ++dir) {
        const std::size_t stride = shape.stride(dir);
        bool ok = true;
        for_each_line(shape, dir, [&](std::size_t first) {
            unsigned seen = 0;
            for (std::size_t k = 0; k < n; ++k)
                seen |= 1u << symbol_at(q, first + k * stride);
            ok = ok && seen == (1u << n) - 1;
        });
        if (!ok)
            return false;
    }
    return true;
}

SupportSet latin_to_permutation(const HyperMatrix &q)
{
    if (!is_latin_hypercube(q))
        throw MalformedInput("matrix is not a latin hypercube");
    const Shape &shape = q.shape();
    SupportSet out(Shape(shape.d() + 1, shape.n()));
    const std::size_t n = static_cast<std::size_t>(shape.n());
    for (std::size_t off = 0; off < shape.cell_count(); ++off)
        out.set(off * n + static_cast<std::size_t>(symbol_at(q, off)));
    return out;
}

HyperMatrix permutation_to_latin(const SupportSet &p)
{
    if (p.shape().d() < 2)
        throw MalformedInput("a latin hypercube needs a permutation of dimension at least 2");
    if (!is_permutation_support(p))
        throw MalformedInput("support is not a multidimensional permutation");
    const std::size_t n = static_cast<std::size_t>(p.shape().n());
    HyperMatrix q(Shape(p.shape().d() - 1, p.shape().n()));
    p.for_each([&](std::size_t off) { q.set(off / n, Rational(static_cast<long>(off % n))); });
    return q;
}

HyperMatrix cyclic_latin_hypercube(const Shape &shape)
{
    HyperMatrix q(shape);
    for (std::size_t off = 0; off < shape.cell_count(); ++off) {
        const Index idx = index_of(shape, off);
        int sum = 0;
        for (int c : idx.coords)
            sum += c;
        q.set(off, Rational(sum % shape.n()));
    }
    return q;
}

} // namespace polyperm
