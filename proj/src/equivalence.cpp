#include "polyperm/equivalence.hpp"

#include "polyperm/errors.hpp"

#include <algorithm>
#include <numeric>

namespace polyperm {

namespace {

bool is_permutation_of(const std::vector<int> &p, int k)
{
    if (static_cast<int>(p.size()) != k)
        return false;
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    for (int x : p) {
        if (x < 0 || x >= k || seen[static_cast<std::size_t>(x)])
            return false;
        seen[static_cast<std::size_t>(x)] = true;
    }
    return true;
}

std::vector<int> iota_vec(int k)
{
    std::vector<int> v(static_cast<std::size_t>(k));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

} // namespace

EquivalenceElement EquivalenceElement::identity(const Shape &shape)
{
    EquivalenceElement g;
    g.position_perm = iota_vec(shape.d());
    g.symbol_perms.assign(static_cast<std::size_t>(shape.d()), iota_vec(shape.n()));
    return g;
}

EquivalenceElement EquivalenceElement::random(const Shape &shape, std::mt19937_64 &rng)
{
    EquivalenceElement g = identity(shape);
    std::shuffle(g.position_perm.begin(), g.position_perm.end(), rng);
    for (auto &p : g.symbol_perms)
        std::shuffle(p.begin(), p.end(), rng);
    return g;
}

EquivalenceElement EquivalenceElement::transposition(const Shape &shape, int a, int b)
{
    EquivalenceElement g = identity(shape);
    std::swap(g.position_perm.at(static_cast<std::size_t>(a)), g.position_perm.at(static_cast<std::size_t>(b)));
    return g;
}

void check_element(const Shape &shape, const EquivalenceElement &g)
{
    if (!is_permutation_of(g.position_perm, shape.d()) ||
        g.symbol_perms.size() != static_cast<std::size_t>(shape.d()))
        throw ShapeError("equivalence element does not fit " + shape.to_string());
    for (const auto &p : g.symbol_perms)
        if (!is_permutation_of(p, shape.n()))
            throw ShapeError("equivalence element has an invalid symbol permutation for " + shape.to_string());
}

EquivalenceElement compose(const EquivalenceElement &h, const EquivalenceElement &g)
{
    if (h.position_perm.size() != g.position_perm.size())
        throw ShapeError("composing equivalence elements of different dimension");
    const std::size_t d = g.position_perm.size();
    EquivalenceElement k;
    k.position_perm.resize(d);
    k.symbol_perms.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
        const auto mid = static_cast<std::size_t>(g.position_perm[i]);
        k.position_perm[i] = h.position_perm[mid];
        const auto &sg = g.symbol_perms[i];
        const auto &sh = h.symbol_perms[mid];
        k.symbol_perms[i].resize(sg.size());
        for (std::size_t v = 0; v < sg.size(); ++v)
            k.symbol_perms[i][v] = sh[static_cast<std::size_t>(sg[v])];
    }
    return k;
}

EquivalenceElement inverse(const EquivalenceElement &g)
{
    const std::size_t d = g.position_perm.size();
    EquivalenceElement k;
    k.position_perm.resize(d);
    k.symbol_perms.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
        const auto j = static_cast<std::size_t>(g.position_perm[i]);
        k.position_perm[j] = static_cast<int>(i);
        k.symbol_perms[j].resize(g.symbol_perms[i].size());
        for (std::size_t v = 0; v < g.symbol_perms[i].size(); ++v)
            k.symbol_perms[j][static_cast<std::size_t>(g.symbol_perms[i][v])] = static_cast<int>(v);
    }
    return k;
}

Index apply_equivalence(const EquivalenceElement &g, const Index &idx)
{
    Index out(std::vector<int>(idx.coords.size()));
    for (int i = 0; i < idx.size(); ++i)
        out[g.position_perm[static_cast<std::size_t>(i)]] = g.symbol_perms[static_cast<std::size_t>(i)][static_cast<std::size_t>(idx[i])];
    return out;
}

std::vector<std::size_t> cell_mapping(const Shape &shape, const EquivalenceElement &g)
{
    check_element(shape, g);
    const int d = shape.d();
    const std::size_t n = static_cast<std::size_t>(shape.n());
    // contribution[i][v]: image offset part from source position i holding value v
    std::vector<std::vector<std::size_t>> contribution(static_cast<std::size_t>(d), std::vector<std::size_t>(n));
    for (int i = 0; i < d; ++i)
        for (std::size_t v = 0; v < n; ++v)
            contribution[static_cast<std::size_t>(i)][v] =
                shape.stride(g.position_perm[static_cast<std::size_t>(i)]) *
                static_cast<std::size_t>(g.symbol_perms[static_cast<std::size_t>(i)][v]);
    std::vector<std::size_t> map(shape.cell_count());
    std::vector<std::size_t> digit(static_cast<std::size_t>(d), 0);
    std::size_t image = 0;
    for (int i = 0; i < d; ++i)
        image += contribution[static_cast<std::size_t>(i)][0];
    for (std::size_t off = 0; off < map.size(); ++off) {
        map[off] = image;
        for (int i = d - 1; i >= 0; --i) {
            auto &dig = digit[static_cast<std::size_t>(i)];
            const auto &c = contribution[static_cast<std::size_t>(i)];
            image -= c[dig];
            if (++dig < n) {
                image += c[dig];
                break;
            }
            dig = 0;
            image += c[0];
        }
    }
    return map;
}

HyperMatrix apply_equivalence(const HyperMatrix &m, const EquivalenceElement &g)
{
    const auto map = cell_mapping(m.shape(), g);
    std::vector<Rational> entries(m.shape().cell_count());
    for (std::size_t off = 0; off < map.size(); ++off)
        entries[map[off]] = m.at(off);
    return HyperMatrix(m.shape(), std::move(entries));
}

SupportSet apply_equivalence(const SupportSet &s, const EquivalenceElement &g)
{
    const auto map = cell_mapping(s.shape(), g);
    SupportSet out(s.shape());
    s.for_each([&](std::size_t off) { out.set(map[off]); });
    return out;
}

std::vector<std::vector<int>> all_permutations(int k)
{
    std::vector<std::vector<int>> out;
    auto p = iota_vec(k);
    do
        out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

void for_each_element(const Shape &shape, const std::function<bool(const EquivalenceElement &)> &f)
{
    const auto pos_perms = all_permutations(shape.d());
    const auto sym_perms = all_permutations(shape.n());
    const std::size_t d = static_cast<std::size_t>(shape.d());
    EquivalenceElement g = EquivalenceElement::identity(shape);
    std::vector<std::size_t> choice(d, 0);
    for (const auto &pp : pos_perms) {
        g.position_perm = pp;
        std::fill(choice.begin(), choice.end(), 0);
        while (true) {
            for (std::size_t i = 0; i < d; ++i)
                g.symbol_perms[i] = sym_perms[choice[i]];
            if (!f(g))
                return;
            bool wrapped = true;
            for (std::size_t i = d; i-- > 0;) {
                if (++choice[i] < sym_perms.size()) {
                    wrapped = false;
                    break;
                }
                choice[i] = 0;
            }
            if (wrapped)
                break;
        }
    }
}

namespace {

/// Depth-first construction of the lex-min image, one symbol-map entry at a time.
///
/// A candidate image T is described by a source position rho[j] for every target
/// position j and maps tau[j] with T(beta) = S(alpha), alpha[rho[j]] = tau[j][beta[j]].
/// Scanning target cells in lex order, each new entry tau[j][v] fixes one contiguous
/// block of the image, so siblings are compared block by block against the incumbent.
class CanonicalSearch
{
public:
    explicit CanonicalSearch(const SupportSet &s)
        : s_(s), d_(s.shape().d()), n_(s.shape().n()), cells_(s.shape().cell_count()),
          cur_(cells_, 0), best_(cells_, 1)
    {
        const auto d = static_cast<std::size_t>(d_);
        tau_.assign(d, std::vector<int>(static_cast<std::size_t>(n_), -1));
        used_.assign(d, std::vector<char>(static_cast<std::size_t>(n_), 0));
        target_stride_.resize(d);
        for (int j = 0; j < d_; ++j)
            target_stride_[static_cast<std::size_t>(j)] = s.shape().stride(j);
        for (int j = 0; j < d_; ++j)
            events_.push_back({j, 0, 0, j == d_ - 1 ? std::size_t{1} : std::size_t{0}});
        for (int j = d_ - 1; j >= 0; --j)
            for (int v = 1; v < n_; ++v) {
                const std::size_t st = target_stride_[static_cast<std::size_t>(j)];
                events_.push_back({j, v, static_cast<std::size_t>(v) * st, st});
            }
        level_scratch_.assign(events_.size(), {});
    }

    CanonicalResult run()
    {
        for (const auto &perm : all_permutations(d_)) {
            rho_ = perm;
            dfs(0, !have_best_);
        }
        CanonicalResult res{SupportSet(s_.shape()), EquivalenceElement{}, nodes_};
        for (std::size_t off = 0; off < cells_; ++off)
            if (best_[off])
                res.form.set(off);
        const auto d = static_cast<std::size_t>(d_);
        res.transform.position_perm.resize(d);
        res.transform.symbol_perms.resize(d);
        for (std::size_t j = 0; j < d; ++j) {
            const auto src = static_cast<std::size_t>(best_rho_[j]);
            res.transform.position_perm[src] = static_cast<int>(j);
            res.transform.symbol_perms[src].resize(static_cast<std::size_t>(n_));
            for (int v = 0; v < n_; ++v)
                res.transform.symbol_perms[src][static_cast<std::size_t>(best_tau_[j][static_cast<std::size_t>(v)])] = v;
        }
        return res;
    }

private:
    struct Event
    {
        int position;
        int value;
        std::size_t block_start;
        std::size_t block_len;
    };

    std::size_t source_offset_prefix(int upto) const
    {
        // target cell with all coordinates < upto equal to 0
        std::size_t off = 0;
        for (int k = 0; k < upto; ++k)
            off += s_.shape().stride(rho_[static_cast<std::size_t>(k)]) *
                   static_cast<std::size_t>(tau_[static_cast<std::size_t>(k)][0]);
        return off;
    }

    void fill_block(const Event &e, std::vector<std::uint8_t> &out) const
    {
        std::size_t base = source_offset_prefix(e.position) +
                           s_.shape().stride(rho_[static_cast<std::size_t>(e.position)]) *
                               static_cast<std::size_t>(tau_[static_cast<std::size_t>(e.position)][static_cast<std::size_t>(e.value)]);
        if (e.position == d_ - 1) {
            out[0] = s_.test(base);
            return;
        }
        // enumerate positions e.position+1 .. d-1 over all values
        const int first = e.position + 1;
        const int depth = d_ - first;
        std::vector<int> digit(static_cast<std::size_t>(depth), 0);
        std::size_t off = base;
        for (int k = first; k < d_; ++k)
            off += s_.shape().stride(rho_[static_cast<std::size_t>(k)]) * static_cast<std::size_t>(tau_[static_cast<std::size_t>(k)][0]);
        for (std::size_t t = 0; t < e.block_len; ++t) {
            out[t] = s_.test(off);
            for (int q = depth - 1; q >= 0; --q) {
                const int k = first + q;
                auto &dig = digit[static_cast<std::size_t>(q)];
                const std::size_t st = s_.shape().stride(rho_[static_cast<std::size_t>(k)]);
                const auto &tk = tau_[static_cast<std::size_t>(k)];
                off -= st * static_cast<std::size_t>(tk[static_cast<std::size_t>(dig)]);
                if (++dig < n_) {
                    off += st * static_cast<std::size_t>(tk[static_cast<std::size_t>(dig)]);
                    break;
                }
                dig = 0;
                off += st * static_cast<std::size_t>(tk[0]);
            }
        }
    }

    static int compare_block(const std::uint8_t *a, const std::uint8_t *b, std::size_t len)
    {
        for (std::size_t i = 0; i < len; ++i)
            if (a[i] != b[i])
                return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    void record_best()
    {
        best_ = cur_;
        best_rho_ = rho_;
        best_tau_ = tau_;
        have_best_ = true;
        ++version_;
    }

    void dfs(std::size_t level, bool less)
    {
        ++nodes_;
        if (level == events_.size()) {
            if (less)
                record_best();
            return;
        }
        const Event &e = events_[level];
        const auto j = static_cast<std::size_t>(e.position);
        const auto v = static_cast<std::size_t>(e.value);

        std::vector<int> candidates;
        for (int c = 0; c < n_; ++c)
            if (!used_[j][static_cast<std::size_t>(c)])
                candidates.push_back(c);

        if (e.block_len == 0) {
            for (int c : candidates) {
                assign(j, v, c);
                const auto before = version_;
                dfs(level + 1, less);
                if (version_ != before)
                    less = false;
                unassign(j, v, c);
            }
            return;
        }

        auto &blocks = scratch_for(level);
        int best_idx = -1;
        for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
            assign(j, v, candidates[ci]);
            fill_block(e, blocks[ci]);
            unassign(j, v, candidates[ci]);
            if (best_idx < 0 || compare_block(blocks[ci].data(), blocks[static_cast<std::size_t>(best_idx)].data(), e.block_len) < 0)
                best_idx = static_cast<int>(ci);
        }
        const auto &min_block = blocks[static_cast<std::size_t>(best_idx)];
        bool child_less = less;
        if (!less) {
            const int cmp = compare_block(min_block.data(), best_.data() + e.block_start, e.block_len);
            if (cmp > 0)
                return;
            if (cmp < 0)
                child_less = true;
        }
        for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
            if (compare_block(blocks[ci].data(), min_block.data(), e.block_len) != 0)
                continue;
            std::copy_n(blocks[ci].begin(), e.block_len, cur_.begin() + static_cast<std::ptrdiff_t>(e.block_start));
            assign(j, v, candidates[ci]);
            const auto before = version_;
            dfs(level + 1, child_less);
            if (version_ != before)
                child_less = false;
            unassign(j, v, candidates[ci]);
        }
    }

    std::vector<std::vector<std::uint8_t>> &scratch_for(std::size_t level)
    {
        auto &s = level_scratch_.at(level);
        if (s.empty())
            s.assign(static_cast<std::size_t>(n_), std::vector<std::uint8_t>(cells_));
        return s;
    }

    void assign(std::size_t j, std::size_t v, int c)
    {
        tau_[j][v] = c;
        used_[j][static_cast<std::size_t>(c)] = 1;
    }
    void unassign(std::size_t j, std::size_t v, int c)
    {
        tau_[j][v] = -1;
        used_[j][static_cast<std::size_t>(c)] = 0;
    }

    const SupportSet &s_;
    int d_;
    int n_;
    std::size_t cells_;
    std::vector<std::size_t> target_stride_;
    std::vector<Event> events_;
    std::vector<int> rho_;
    std::vector<std::vector<int>> tau_;
    std::vector<std::vector<char>> used_;
    std::vector<std::uint8_t> cur_;
    std::vector<std::uint8_t> best_;
    std::vector<int> best_rho_;
    std::vector<std::vector<int>> best_tau_;
    bool have_best_ = false;
    std::uint64_t version_ = 0;
    std::uint64_t nodes_ = 0;
    std::vector<std::vector<std::vector<std::uint8_t>>> level_scratch_;
};

} // namespace

CanonicalResult canonical_form_with_transform(const SupportSet &s)
{
    return CanonicalSearch(s).run();
}

SupportSet canonical_form(const SupportSet &s)
{
    return canonical_form_with_transform(s).form;
}

bool equivalent(const SupportSet &a, const SupportSet &b)
{
    if (!(a.shape() == b.shape()) || a.count() != b.count())
        return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace polyperm
