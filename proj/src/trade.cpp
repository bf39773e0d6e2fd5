#include "polyperm/trade.hpp"

#include "polyperm/equivalence.hpp"
#include "polyperm/errors.hpp"
#include "polyperm/realizability.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace polyperm {

bool is_unitrade(const SupportSet &s)
{
    const Shape &shape = s.shape();
    const std::size_t n = static_cast<std::size_t>(shape.n());
    for (int dir = 0; dir < shape.d(); ++dir) {
        const std::size_t stride = shape.stride(dir);
        bool ok = true;
        for_each_line(shape, dir, [&](std::size_t first) {
            int c = 0;
            for (std::size_t k = 0; k < n; ++k)
                c += s.test(first + k * stride);
            ok = ok && (c == 0 || c == 2);
        });
        if (!ok)
            return false;
    }
    return true;
}

namespace {

void require_unitrade(const SupportSet &s)
{
    if (!is_unitrade(s))
        throw MalformedInput("support is not a unitrade");
}

void require_double(const SupportSet &s)
{
    if (!is_double_permutation_support(s))
        throw MalformedInput("support is not a double permutation");
}

/// The other member on the line through `off` in `dir` (the line holds exactly two).
std::size_t line_partner(const SupportSet &s, std::size_t off, int dir)
{
    const Shape &shape = s.shape();
    const std::size_t stride = shape.stride(dir);
    const std::size_t n = static_cast<std::size_t>(shape.n());
    const std::size_t base = off - ((off / stride) % n) * stride;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t o = base + k * stride;
        if (o != off && s.test(o))
            return o;
    }
    return off;
}

/// Breadth-first two-colouring of the same-line graph from `root`; calls visit(offset) for every
/// reached cell. Returns false when two cells on one line receive the same side.
template <class Visit>
bool traverse(const SupportSet &s, std::size_t root, std::vector<signed char> &side, Visit &&visit)
{
    bool bipartite = true;
    std::deque<std::size_t> queue{root};
    side[root] = 1;
    while (!queue.empty()) {
        const std::size_t off = queue.front();
        queue.pop_front();
        visit(off);
        for (int dir = 0; dir < s.shape().d(); ++dir) {
            const std::size_t other = line_partner(s, off, dir);
            if (other == off)
                continue;
            if (side[other] == 0) {
                side[other] = static_cast<signed char>(-side[off]);
                queue.push_back(other);
            } else if (side[other] == side[off]) {
                bipartite = false;
            }
        }
    }
    return bipartite;
}

} // namespace

std::vector<SupportSet> unitrade_components(const SupportSet &s)
{
    require_unitrade(s);
    std::vector<signed char> side(s.cell_count(), 0);
    std::vector<SupportSet> out;
    s.for_each([&](std::size_t off) {
        if (side[off] != 0)
            return;
        SupportSet comp(s.shape());
        traverse(s, off, side, [&](std::size_t v) { comp.set(v); });
        out.push_back(std::move(comp));
    });
    return out;
}

std::optional<SignFunction> bitrade_sign(const SupportSet &s)
{
    require_unitrade(s);
    std::vector<signed char> side(s.cell_count(), 0);
    bool bipartite = true;
    s.for_each([&](std::size_t off) {
        if (side[off] != 0)
            return;
        if (!traverse(s, off, side, [](std::size_t) {}))
            bipartite = false;
    });
    if (!bipartite)
        return std::nullopt;
    SignFunction sigma{SupportSet(s.shape()), SupportSet(s.shape())};
    s.for_each([&](std::size_t off) { (side[off] > 0 ? sigma.plus : sigma.minus).set(off); });
    return sigma;
}

SupportSet complement_in_direction(const SupportSet &s, int direction)
{
    require_unitrade(s);
    const Shape &shape = s.shape();
    if (direction < 0 || direction >= shape.d())
        throw ShapeError("direction " + std::to_string(direction) + " out of range for " + shape.to_string());
    const std::size_t stride = shape.stride(direction);
    const std::size_t n = static_cast<std::size_t>(shape.n());
    SupportSet out(shape);
    for_each_line(shape, direction, [&](std::size_t first) {
        bool meets = false;
        for (std::size_t k = 0; k < n; ++k)
            meets = meets || s.test(first + k * stride);
        if (!meets)
            return;
        for (std::size_t k = 0; k < n; ++k)
            if (!s.test(first + k * stride))
                out.set(first + k * stride);
    });
    return out;
}

SupportSet iterated_complement(const SupportSet &u, const std::vector<int> &directions)
{
    SupportSet cur = u;
    for (int dir : directions)
        cur = complement_in_direction(cur, dir);
    return cur;
}

SupportSet even_completion(const SupportSet &u)
{
    require_unitrade(u);
    const int d = u.shape().d();
    SupportSet out = u;
    for (unsigned y = 1; y < (1u << d); ++y) {
        if (std::popcount(y) % 2)
            continue;
        std::vector<int> dirs;
        for (int j = 0; j < d; ++j)
            if (y & (1u << j))
                dirs.push_back(j);
        out |= iterated_complement(u, dirs);
    }
    return out;
}

const char *to_string(PlaneType t)
{
    switch (t) {
    case PlaneType::F:
        return "F";
    case PlaneType::H:
        return "H";
    case PlaneType::Other:
        break;
    }
    return "other";
}

namespace {

SupportSet plane_from_rows(const char *const rows[4])
{
    SupportSet s{Shape(2, 4)};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if (rows[r][c] == '1')
                s.set(static_cast<std::size_t>(r * 4 + c));
    return s;
}

} // namespace

SupportSet plane_pattern_F()
{
    static const char *const rows[4] = {"1100", "1100", "0011", "0011"};
    return plane_from_rows(rows);
}

SupportSet plane_pattern_H()
{
    static const char *const rows[4] = {"1100", "0110", "0011", "1001"};
    return plane_from_rows(rows);
}

PlaneType classify_plane_2d(const SupportSet &s)
{
    if (!(s.shape() == Shape(2, 4)))
        return PlaneType::Other;
    static const SupportSet f = canonical_form(plane_pattern_F());
    static const SupportSet h = canonical_form(plane_pattern_H());
    const SupportSet c = canonical_form(s);
    if (c == f)
        return PlaneType::F;
    if (c == h)
        return PlaneType::H;
    return PlaneType::Other;
}

std::vector<std::vector<int>> DirectionColoring::h_cliques() const
{
    std::vector<int> comp(static_cast<std::size_t>(d), -1);
    std::vector<std::vector<int>> out;
    for (int i = 0; i < d; ++i) {
        if (comp[static_cast<std::size_t>(i)] >= 0)
            continue;
        std::vector<int> members{i};
        comp[static_cast<std::size_t>(i)] = static_cast<int>(out.size());
        for (std::size_t k = 0; k < members.size(); ++k)
            for (int j = 0; j < d; ++j)
                if (j != members[k] && comp[static_cast<std::size_t>(j)] < 0 && at(members[k], j) == PlaneType::H) {
                    comp[static_cast<std::size_t>(j)] = comp[static_cast<std::size_t>(i)];
                    members.push_back(j);
                }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

DirectionColoring direction_coloring(const SupportSet &dp)
{
    require_double(dp);
    const Shape &shape = dp.shape();
    const int d = shape.d();
    DirectionColoring col;
    col.d = d;
    col.color.assign(static_cast<std::size_t>(d), std::vector<PlaneType>(static_cast<std::size_t>(d), PlaneType::Other));
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            PlaneSelector sel;
            for (int p = 0; p < d; ++p)
                if (p != i && p != j) {
                    sel.fixed_positions.push_back(p);
                    sel.fixed_values.push_back(0);
                }
            std::optional<PlaneType> common;
            // Odometer over the values of the fixed positions.
            for (;;) {
                const PlaneType t = classify_plane_2d(extract_plane(dp, sel));
                if (t == PlaneType::Other)
                    throw MalformedInput("2-plane of direction (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                         ") is neither F nor H");
                if (common && *common != t)
                    throw MalformedInput("2-planes of direction (" + std::to_string(i + 1) + "," +
                                         std::to_string(j + 1) + ") have mixed types");
                common = t;
                std::size_t k = sel.fixed_values.size();
                while (k > 0 && ++sel.fixed_values[k - 1] == shape.n())
                    sel.fixed_values[--k] = 0;
                if (k == 0)
                    break;
            }
            col.color[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = *common;
            col.color[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = *common;
        }
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b)
            for (int c = b + 1; c < d; ++c) {
                const int h = (col.at(a, b) == PlaneType::H) + (col.at(a, c) == PlaneType::H) + (col.at(b, c) == PlaneType::H);
                if (h == 2)
                    throw MalformedInput("H edges do not form cliques at positions " + std::to_string(a + 1) + "," +
                                         std::to_string(b + 1) + "," + std::to_string(c + 1));
            }
    return col;
}

std::vector<std::vector<int>> direction_equivalence_classes(const SupportSet &dp)
{
    require_double(dp);
    const int d = dp.shape().d();
    const SupportSet component = unitrade_components(dp).front();
    std::vector<SupportSet> comps;
    for (int i = 0; i < d; ++i)
        comps.push_back(complement_in_direction(component, i));
    std::vector<std::vector<int>> classes;
    std::vector<bool> placed(static_cast<std::size_t>(d), false);
    for (int i = 0; i < d; ++i) {
        if (placed[static_cast<std::size_t>(i)])
            continue;
        std::vector<int> cls{i};
        for (int j = i + 1; j < d; ++j)
            if (!placed[static_cast<std::size_t>(j)] && comps[static_cast<std::size_t>(j)] == comps[static_cast<std::size_t>(i)]) {
                cls.push_back(j);
                placed[static_cast<std::size_t>(j)] = true;
            }
        classes.push_back(std::move(cls));
    }
    return classes;
}

SupportSet direct_sum(const SupportSet &a, const SupportSet &b)
{
    if (a.shape().n() != b.shape().n())
        throw ShapeError("direct sum needs equal orders, got " + a.shape().to_string() + " and " + b.shape().to_string());
    const Shape shape(a.shape().d() + b.shape().d(), a.shape().n());
    const std::size_t nb = b.cell_count();
    SupportSet out(shape);
    for (std::size_t x = 0; x < a.cell_count(); ++x)
        for (std::size_t y = 0; y < nb; ++y)
            if (a.test(x) != b.test(y))
                out.set(x * nb + y);
    return out;
}

SupportSet DirectSumDecomposition::recombine() const
{
    if (factors.empty())
        throw ShapeError("no factors to recombine");
    SupportSet sum = factors.front();
    for (std::size_t k = 1; k < factors.size(); ++k)
        sum = direct_sum(sum, factors[k]);
    EquivalenceElement g = EquivalenceElement::identity(sum.shape());
    std::size_t pos = 0;
    for (const auto &cls : classes)
        for (int p : cls)
            g.position_perm[pos++] = p;
    return apply_equivalence(sum, g);
}

DirectSumDecomposition direct_sum_decompose(const SupportSet &dp)
{
    require_double(dp);
    const Shape &shape = dp.shape();
    DirectSumDecomposition dec;
    dec.classes = direction_equivalence_classes(dp);

    // Factor j is the plane through the origin along class j; complementing the first factor
    // fixes the constant picked up by the other planes at the origin.
    for (const auto &cls : dec.classes) {
        PlaneSelector sel;
        for (int p = 0; p < shape.d(); ++p)
            if (std::find(cls.begin(), cls.end(), p) == cls.end()) {
                sel.fixed_positions.push_back(p);
                sel.fixed_values.push_back(0);
            }
        dec.factors.push_back(sel.fixed_positions.empty() ? dp : extract_plane(dp, sel));
    }
    if ((dec.factors.size() - 1) % 2 == 1 && dp.test(0))
        dec.factors.front() = dec.factors.front().complement();
    if (!(dec.recombine() == dp))
        throw MalformedInput("double permutation does not split over its direction classes");
    return dec;
}

SupportSet fractional_unitrade(const HyperMatrix &m)
{
    if (!is_polystochastic(m) || !every_line_count_within(m.support(), 1, 2))
        throw MalformedInput("matrix is not a sesquialteral permutation");
    SupportSet out(m.shape());
    for (std::size_t off = 0; off < m.shape().cell_count(); ++off)
        if (sgn(m.at(off)) > 0 && m.at(off) < 1)
            out.set(off);
    return out;
}

} // namespace polyperm
