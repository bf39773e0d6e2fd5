#include "polyperm/permanent.hpp"

#include "polyperm/equivalence.hpp"
#include "polyperm/errors.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>

namespace polyperm {

std::string Diagonal::to_string() const
{
    std::ostringstream out;
    for (std::size_t i = 0; i < indices.size(); ++i)
        out << (i ? " " : "") << indices[i].to_string();
    return out.str();
}

bool is_diagonal(const Shape &shape, const Diagonal &diag)
{
    if (static_cast<int>(diag.indices.size()) != shape.n())
        return false;
    for (const auto &idx : diag.indices) {
        if (idx.size() != shape.d())
            return false;
        for (int c : idx.coords)
            if (c < 0 || c >= shape.n())
                return false;
    }
    for (std::size_t a = 0; a < diag.indices.size(); ++a)
        for (std::size_t b = a + 1; b < diag.indices.size(); ++b)
            if (hamming(diag.indices[a], diag.indices[b]) != shape.d())
                return false;
    return true;
}

std::uint64_t diagonal_count(const Shape &shape)
{
    std::uint64_t fact = 1;
    for (int k = 2; k <= shape.n(); ++k)
        fact *= static_cast<std::uint64_t>(k);
    std::uint64_t total = 1;
    for (int i = 1; i < shape.d(); ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / fact)
            return std::numeric_limits<std::uint64_t>::max();
        total *= fact;
    }
    return total;
}

namespace {

void require_budget(const Shape &shape, std::uint64_t budget)
{
    const std::uint64_t count = diagonal_count(shape);
    if (count > budget)
        throw CapacityError(shape.to_string() + " has " + std::to_string(count) +
                            " diagonals, above the budget of " + std::to_string(budget));
}

} // namespace

void for_each_diagonal(const Shape &shape, const std::function<bool(const Diagonal &)> &f, std::uint64_t budget)
{
    require_budget(shape, budget);
    const int d = shape.d();
    const int n = shape.n();
    const auto perms = all_permutations(n);
    std::vector<std::size_t> choice(static_cast<std::size_t>(d - 1), 0);
    Diagonal diag;
    diag.indices.assign(static_cast<std::size_t>(n), Index(std::vector<int>(static_cast<std::size_t>(d), 0)));
    for (;;) {
        for (int k = 0; k < n; ++k) {
            Index &idx = diag.indices[static_cast<std::size_t>(k)];
            idx[0] = k;
            for (int i = 1; i < d; ++i)
                idx[i] = perms[choice[static_cast<std::size_t>(i - 1)]][static_cast<std::size_t>(k)];
        }
        if (!f(diag))
            return;
        bool wrapped = true;
        for (std::size_t j = choice.size(); j-- > 0;) {
            if (++choice[j] < perms.size()) {
                wrapped = false;
                break;
            }
            choice[j] = 0;
        }
        if (wrapped)
            return;
    }
}

std::vector<Diagonal> diagonals(const Shape &shape, std::uint64_t budget)
{
    std::vector<Diagonal> out;
    for_each_diagonal(
        shape,
        [&](const Diagonal &diag) {
            out.push_back(diag);
            return true;
        },
        budget);
    return out;
}

namespace {

/// Depth-first sum over diagonals: level k picks the cell with first coordinate k,
/// choosing an unused value for every other position in turn.
class PermanentSum
{
public:
    explicit PermanentSum(const HyperMatrix &m) : m_(m), used_(static_cast<std::size_t>(m.shape().d()), 0u) {}

    PermanentResult run()
    {
        level(0, Rational(1));
        return {total_, visited_};
    }

private:
    void level(int k, const Rational &prod)
    {
        if (k == m_.shape().n()) {
            total_ += prod;
            ++visited_;
            return;
        }
        position(k, 1, static_cast<std::size_t>(k) * m_.shape().stride(0), prod);
    }

    void position(int k, int pos, std::size_t offset, const Rational &prod)
    {
        const Shape &shape = m_.shape();
        if (pos == shape.d()) {
            const Rational &entry = m_.at(offset);
            if (sgn(entry) == 0)
                return;
            level(k + 1, prod * entry);
            return;
        }
        unsigned &used = used_[static_cast<std::size_t>(pos)];
        for (int v = 0; v < shape.n(); ++v) {
            if (used & (1u << v))
                continue;
            used |= 1u << v;
            position(k, pos + 1, offset + static_cast<std::size_t>(v) * shape.stride(pos), prod);
            used &= ~(1u << v);
        }
    }

    const HyperMatrix &m_;
    std::vector<unsigned> used_;
    Rational total_ = 0;
    std::uint64_t visited_ = 0;
};

} // namespace

PermanentResult permanent_exact(const HyperMatrix &m, std::uint64_t budget)
{
    require_budget(m.shape(), budget);
    return PermanentSum(m).run();
}

namespace {

/// Fail-first search for n support cells pairwise distinct in every coordinate.
class DiagonalSearch
{
public:
    explicit DiagonalSearch(const SupportSet &s) : shape_(s.shape()), d_(shape_.d()), n_(shape_.n())
    {
        offsets_ = s.offsets();
        coords_.resize(offsets_.size() * static_cast<std::size_t>(d_));
        for (std::size_t c = 0; c < offsets_.size(); ++c) {
            std::size_t off = offsets_[c];
            for (int i = d_; i-- > 0;) {
                coords_[c * static_cast<std::size_t>(d_) + static_cast<std::size_t>(i)] =
                    static_cast<std::uint8_t>(off % static_cast<std::size_t>(n_));
                off /= static_cast<std::size_t>(n_);
            }
        }
        used_.assign(static_cast<std::size_t>(d_), 0u);
    }

    /// Pre-selects a cell that need not belong to the support.
    void choose_outside(const Index &idx) { forced_.push_back(idx); }

    PositivityWitness run()
    {
        std::vector<std::uint32_t> alive;
        for (const auto &idx : forced_)
            for (int i = 0; i < d_; ++i)
                used_[static_cast<std::size_t>(i)] |= 1u << idx[i];
        for (std::uint32_t c = 0; c < offsets_.size(); ++c)
            if (compatible(c))
                alive.push_back(c);
        PositivityWitness w;
        if (search(alive, static_cast<int>(forced_.size()))) {
            Diagonal diag;
            diag.indices = forced_;
            for (auto c : chosen_)
                diag.indices.push_back(index_of(shape_, offsets_[c]));
            std::sort(diag.indices.begin(), diag.indices.end());
            w.diagonal = std::move(diag);
        }
        w.nodes = nodes_;
        return w;
    }

private:
    std::uint8_t coord(std::uint32_t cell, int pos) const
    {
        return coords_[cell * static_cast<std::size_t>(d_) + static_cast<std::size_t>(pos)];
    }

    bool compatible(std::uint32_t cell) const
    {
        for (int i = 0; i < d_; ++i)
            if (used_[static_cast<std::size_t>(i)] & (1u << coord(cell, i)))
                return false;
        return true;
    }

    bool search(const std::vector<std::uint32_t> &alive, int depth)
    {
        ++nodes_;
        if (depth == n_)
            return true;

        // counts[i][v]: alive cells lying in the hyperplane (i, v).
        std::vector<std::array<int, 8>> counts(static_cast<std::size_t>(d_));
        for (auto &row : counts)
            row.fill(0);
        for (auto c : alive)
            for (int i = 0; i < d_; ++i)
                ++counts[static_cast<std::size_t>(i)][coord(c, i)];

        int best_pos = -1;
        int best_val = -1;
        int best = std::numeric_limits<int>::max();
        for (int i = 0; i < d_; ++i)
            for (int v = 0; v < n_; ++v) {
                if (used_[static_cast<std::size_t>(i)] & (1u << v))
                    continue;
                const int cnt = counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
                if (cnt < best) {
                    best = cnt;
                    best_pos = i;
                    best_val = v;
                }
            }
        if (best == 0)
            return false;

        std::vector<std::uint32_t> next;
        next.reserve(alive.size());
        for (auto c : alive) {
            if (coord(c, best_pos) != best_val)
                continue;
            for (int i = 0; i < d_; ++i)
                used_[static_cast<std::size_t>(i)] |= 1u << coord(c, i);
            next.clear();
            for (auto o : alive)
                if (compatible(o))
                    next.push_back(o);
            chosen_.push_back(c);
            if (search(next, depth + 1))
                return true;
            chosen_.pop_back();
            for (int i = 0; i < d_; ++i)
                used_[static_cast<std::size_t>(i)] &= ~(1u << coord(c, i));
        }
        return false;
    }

    Shape shape_;
    int d_;
    int n_;
    std::vector<std::size_t> offsets_;
    std::vector<std::uint8_t> coords_;
    std::vector<unsigned> used_;
    std::vector<Index> forced_;
    std::vector<std::uint32_t> chosen_;
    std::uint64_t nodes_ = 0;
};

} // namespace

PositivityWitness has_positive_diagonal(const SupportSet &s)
{
    return DiagonalSearch(s).run();
}

std::optional<Diagonal> diagonal_through(const SupportSet &s, const Index &forced)
{
    check_index(s.shape(), forced);
    SupportSet rest = s;
    rest.erase(forced);
    DiagonalSearch search(rest);
    search.choose_outside(forced);
    return search.run().diagonal;
}

namespace {

struct PlaneSplit
{
    std::vector<int> fixed;
    std::vector<int> free;
};

PlaneSplit split_positions(const Shape &shape, const std::vector<int> &fixed_positions)
{
    const int f = static_cast<int>(fixed_positions.size());
    if (f < 1 || f > shape.d() - 1)
        throw ShapeError("plane decomposition needs between 1 and d-1 fixed positions");
    PlaneSplit split{fixed_positions, {}};
    for (int i = 0; i < f; ++i) {
        const int p = fixed_positions[static_cast<std::size_t>(i)];
        if (p < 0 || p >= shape.d() || (i && p <= fixed_positions[static_cast<std::size_t>(i - 1)]))
            throw ShapeError("fixed positions must be strictly increasing and within the shape");
    }
    for (int p = 0; p < shape.d(); ++p)
        if (std::find(fixed_positions.begin(), fixed_positions.end(), p) == fixed_positions.end())
            split.free.push_back(p);
    return split;
}

/// Calls f(offsets) for every n-tuple of pairwise diagonally located planes; offsets[j] lists the
/// parent offsets of plane j in the plane's own cell order. Plane j has value j at the first
/// fixed position, so every unordered tuple appears exactly once.
template <class F>
void for_each_plane_tuple(const Shape &shape, const PlaneSplit &split, F &&f)
{
    const int n = shape.n();
    const auto perms = all_permutations(n);
    const std::size_t others = split.fixed.size() - 1;
    std::vector<std::size_t> choice(others, 0);
    std::vector<std::vector<std::size_t>> offsets(static_cast<std::size_t>(n));
    for (;;) {
        for (int j = 0; j < n; ++j) {
            PlaneSelector sel{split.fixed, {}};
            sel.fixed_values.push_back(j);
            for (std::size_t t = 0; t < others; ++t)
                sel.fixed_values.push_back(perms[choice[t]][static_cast<std::size_t>(j)]);
            offsets[static_cast<std::size_t>(j)] = plane_offsets(shape, sel);
        }
        if (!f(offsets))
            return;
        bool wrapped = true;
        for (std::size_t t = others; t-- > 0;) {
            if (++choice[t] < perms.size()) {
                wrapped = false;
                break;
            }
            choice[t] = 0;
        }
        if (wrapped)
            return;
    }
}

} // namespace

Rational plane_decomposition_permanent(const HyperMatrix &m, const std::vector<int> &fixed_positions,
                                       std::uint64_t budget)
{
    const Shape &shape = m.shape();
    const auto split = split_positions(shape, fixed_positions);
    require_budget(shape, budget);
    const Shape stacked(static_cast<int>(split.free.size()) + 1, shape.n());
    Rational total = 0;
    for_each_plane_tuple(shape, split, [&](const std::vector<std::vector<std::size_t>> &planes) {
        std::vector<Rational> entries;
        entries.reserve(stacked.cell_count());
        for (const auto &plane : planes)
            for (auto off : plane)
                entries.push_back(m.at(off));
        total += permanent_exact(HyperMatrix(stacked, std::move(entries)), budget).value;
        return true;
    });
    return total;
}

PositivityWitness plane_decomposition_positivity(const SupportSet &s, const std::vector<int> &fixed_positions)
{
    const Shape &shape = s.shape();
    const auto split = split_positions(shape, fixed_positions);
    const Shape stacked(static_cast<int>(split.free.size()) + 1, shape.n());
    PositivityWitness result;
    for_each_plane_tuple(shape, split, [&](const std::vector<std::vector<std::size_t>> &planes) {
        SupportSet sub(stacked);
        std::size_t k = 0;
        for (const auto &plane : planes)
            for (auto off : plane)
                sub.assign(k++, s.test(off));
        const auto w = has_positive_diagonal(sub);
        result.nodes += w.nodes;
        if (!w.diagonal)
            return true;
        // Map the stacked witness back: its first coordinate names the plane, the rest are free coordinates.
        Diagonal diag;
        const std::size_t plane_cells = planes.front().size();
        for (const auto &idx : w.diagonal->indices) {
            const std::size_t local = offset_of(stacked, idx);
            diag.indices.push_back(index_of(shape, planes[local / plane_cells][local % plane_cells]));
        }
        std::sort(diag.indices.begin(), diag.indices.end());
        result.diagonal = std::move(diag);
        return false;
    });
    return result;
}

} // namespace polyperm
