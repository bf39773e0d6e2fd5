#include "polyperm/block.hpp"

#include "polyperm/equivalence.hpp"
#include "polyperm/errors.hpp"

#include <bit>

namespace polyperm {

namespace {

void check_partition(int partition)
{
    if (partition < 1 || partition > 3)
        throw ShapeError("partition label must be 1, 2 or 3, got " + std::to_string(partition));
}

void check_symbol(int a)
{
    if (a < 0 || a > 3)
        throw ShapeError("order-4 symbol must be in 0..3, got " + std::to_string(a));
}

// Rows: partitions 1..3; columns: symbols 0..3.
constexpr int part_table[3][4] = {{0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}};
constexpr int parity_table[3][4] = {{0, 1, 0, 1}, {0, 0, 1, 1}, {0, 1, 0, 1}};

void check_tuple(const PartitionTuple &eps)
{
    if (eps.empty() || eps.size() > 20)
        throw ShapeError("partition tuple length must be in 1..20");
    for (int e : eps)
        check_partition(e);
}

/// Calls f(offset, y, mu) for every cell of I_4^d, where y packs the part bits and mu is the xor
/// of the parity bits.
template <class F>
void for_each_cell_parts(const PartitionTuple &eps, F &&f)
{
    const int d = static_cast<int>(eps.size());
    const Shape shape(d, 4);
    std::vector<int> digit(static_cast<std::size_t>(d), 0);
    for (std::size_t off = 0; off < shape.cell_count(); ++off) {
        SubcubeId y = 0;
        int mu = 0;
        for (int i = 0; i < d; ++i) {
            const int e = eps[static_cast<std::size_t>(i)] - 1;
            const int a = digit[static_cast<std::size_t>(i)];
            y |= static_cast<SubcubeId>(part_table[e][a]) << i;
            mu ^= parity_table[e][a];
        }
        f(off, y, mu);
        for (int i = d; i-- > 0;) {
            if (++digit[static_cast<std::size_t>(i)] < 4)
                break;
            digit[static_cast<std::size_t>(i)] = 0;
        }
    }
}

} // namespace

int part_function(int partition, int a)
{
    check_partition(partition);
    check_symbol(a);
    return part_table[partition - 1][a];
}

int parity_function(int partition, int a)
{
    check_partition(partition);
    check_symbol(a);
    return parity_table[partition - 1][a];
}

std::string subcube_to_string(SubcubeId y, int d)
{
    std::string out;
    for (int i = 0; i < d; ++i)
        out += ((y >> i) & 1u) ? '1' : '0';
    return out;
}

void check_block_params(const BlockParams &p)
{
    check_tuple(p.eps);
    if (p.s != 0 && p.s != 1)
        throw ShapeError("parity bit s must be 0 or 1");
    if (p.lambda.size() != (std::size_t{1} << p.eps.size()))
        throw ShapeError("lambda table must have 2^d entries");
    for (std::size_t y = 0; y < p.lambda.size(); ++y) {
        if (p.lambda[y] > 1)
            throw ShapeError("lambda values must be 0 or 1");
        if (static_cast<int>(std::popcount(y) % 2) != p.s && p.lambda[y])
            throw ShapeError("lambda is set outside the parity class of s");
    }
}

BlockParams make_block_params(PartitionTuple eps, int s, const std::vector<std::uint8_t> &lambda_on_parity_class)
{
    check_tuple(eps);
    const std::size_t total = std::size_t{1} << eps.size();
    if (lambda_on_parity_class.size() != total / 2)
        throw ShapeError("expected " + std::to_string(total / 2) + " lambda values");
    BlockParams p{std::move(eps), s, std::vector<std::uint8_t>(total, 0)};
    std::size_t k = 0;
    for (std::size_t y = 0; y < total; ++y)
        if (static_cast<int>(std::popcount(y) % 2) == s)
            p.lambda[y] = lambda_on_parity_class[k++];
    check_block_params(p);
    return p;
}

SupportSet subcube_cells(const PartitionTuple &eps, SubcubeId y)
{
    check_tuple(eps);
    SupportSet out(Shape(static_cast<int>(eps.size()), 4));
    for_each_cell_parts(eps, [&](std::size_t off, SubcubeId cy, int) {
        if (cy == y)
            out.set(off);
    });
    return out;
}

SupportSet block_permutation(const BlockParams &p)
{
    check_block_params(p);
    SupportSet out(Shape(p.d(), 4));
    for_each_cell_parts(p.eps, [&](std::size_t off, SubcubeId y, int mu) {
        if (static_cast<int>(std::popcount(y) % 2) == p.s && (mu ^ p.lambda[y]) == 0)
            out.set(off);
    });
    return out;
}

std::vector<std::uint8_t> lambda_M(int d)
{
    if (d < 1 || d > 20)
        throw ShapeError("dimension out of range for lambda_M");
    std::vector<std::uint8_t> table(std::size_t{1} << d, 0);
    for (std::size_t y = 0; y < table.size(); ++y)
        if (std::popcount(y) % 4 == 2)
            table[y] = 1;
    return table;
}

namespace {

SupportSet congruence_support(int d, bool twist_last)
{
    const Shape shape(d, 4);
    SupportSet out(shape);
    for (std::size_t off = 0; off < shape.cell_count(); ++off) {
        std::size_t rest = off;
        int sum = 0;
        for (int i = d; i-- > 0;) {
            int a = static_cast<int>(rest % 4);
            rest /= 4;
            if (twist_last && i == d - 1 && a < 2)
                a = 1 - a;
            sum += a;
        }
        if (sum % 4 == 0)
            out.set(off);
    }
    return out;
}

} // namespace

SupportSet m4d(int d)
{
    return congruence_support(d, false);
}

SupportSet l4d_partner(int d)
{
    return congruence_support(d, true);
}

HyperMatrix l4d_member(int d, const Rational &lambda)
{
    if (sgn(lambda) <= 0 || lambda >= 1)
        throw MalformedInput("convex weight must lie strictly between 0 and 1");
    const SupportSet m = m4d(d);
    const SupportSet l = l4d_partner(d);
    HyperMatrix out(m.shape());
    const Rational rest = 1 - lambda;
    for (std::size_t off = 0; off < m.cell_count(); ++off) {
        Rational v = 0;
        if (m.test(off))
            v += lambda;
        if (l.test(off))
            v += rest;
        if (sgn(v) != 0)
            out.set(off, v);
    }
    return out;
}

std::optional<BlockParams> extract_block_params(const SupportSet &perm, const PartitionTuple &eps)
{
    check_tuple(eps);
    if (perm.shape().n() != 4 || perm.shape().d() != static_cast<int>(eps.size()))
        throw ShapeError("partition tuple does not fit " + perm.shape().to_string());
    const std::size_t total = std::size_t{1} << eps.size();
    std::vector<int> seen(total, -1);
    int s = -1;
    bool ok = true;
    for_each_cell_parts(eps, [&](std::size_t off, SubcubeId y, int mu) {
        if (!ok || !perm.test(off))
            return;
        const int parity = std::popcount(y) % 2;
        if (s < 0)
            s = parity;
        if (parity != s || (seen[y] >= 0 && seen[y] != mu)) {
            ok = false;
            return;
        }
        seen[y] = mu;
    });
    if (!ok || s < 0)
        return std::nullopt;
    BlockParams p{eps, s, std::vector<std::uint8_t>(total, 0)};
    for (std::size_t y = 0; y < total; ++y)
        if (seen[y] > 0)
            p.lambda[y] = 1;
    if (!(block_permutation(p) == perm))
        return std::nullopt;
    return p;
}

std::vector<BlockParams> all_block_presentations(const SupportSet &perm)
{
    const int d = perm.shape().d();
    std::vector<BlockParams> out;
    PartitionTuple eps(static_cast<std::size_t>(d), 1);
    for (;;) {
        if (auto p = extract_block_params(perm, eps))
            out.push_back(std::move(*p));
        int i = d;
        while (i > 0 && ++eps[static_cast<std::size_t>(i - 1)] > 3)
            eps[static_cast<std::size_t>(--i)] = 1;
        if (i == 0)
            break;
    }
    return out;
}

std::vector<SubcubeId> filled_subcubes(const BlockParams &p)
{
    check_block_params(p);
    std::vector<SubcubeId> out;
    for (SubcubeId y = 0; y < (SubcubeId{1} << p.d()); ++y)
        if (static_cast<int>(std::popcount(y) % 2) == p.s)
            out.push_back(y);
    return out;
}

std::optional<int> subcube_intersection_dimension(const PartitionTuple &eps1, SubcubeId y1, const PartitionTuple &eps2,
                                                  SubcubeId y2)
{
    if (eps1.size() != eps2.size())
        throw ShapeError("partition tuples differ in length");
    // Per position the two parts meet in 2 symbols (same partition, same part), 0 symbols (same
    // partition, other part) or exactly 1 symbol (different partitions).
    int dim = 0;
    for (std::size_t i = 0; i < eps1.size(); ++i) {
        const bool b1 = (y1 >> i) & 1u;
        const bool b2 = (y2 >> i) & 1u;
        if (eps1[i] == eps2[i]) {
            if (b1 != b2)
                return std::nullopt;
            ++dim;
        }
    }
    return dim;
}

TesselationProfile tesselation_profile(const BlockParams &b1, const BlockParams &b2)
{
    const auto f1 = filled_subcubes(b1);
    const auto f2 = filled_subcubes(b2);
    if (b1.d() != b2.d())
        throw ShapeError("block parameters of different dimensions");
    TesselationProfile prof;
    for (auto y1 : f1) {
        std::vector<int> dims;
        for (auto y2 : f2)
            if (auto dim = subcube_intersection_dimension(b1.eps, y1, b2.eps, y2)) {
                dims.push_back(*dim);
                if (!prof.index || *prof.index < *dim)
                    prof.index = *dim;
            }
        prof.intersections.push_back(std::move(dims));
    }
    return prof;
}

std::optional<int> tesselation_index(const BlockParams &b1, const BlockParams &b2)
{
    return tesselation_profile(b1, b2).index;
}

bool equivalent_to_m4d(const SupportSet &s)
{
    if (s.shape().n() != 4 || !is_permutation_support(s))
        return false;
    return canonical_form(s) == canonical_form(m4d(s.shape().d()));
}

} // namespace polyperm
