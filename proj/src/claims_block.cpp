#include "polyperm/claims.hpp"

#include "claims_util.hpp"
#include "cube3.hpp"
#include "polyperm/block.hpp"
#include "polyperm/catalog.hpp"
#include "polyperm/equivalence.hpp"
#include "polyperm/errors.hpp"
#include "polyperm/permanent.hpp"
#include "polyperm/worker_pool.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace polyperm {

using detail::Word;

namespace {

int coordinate_sum(const Index &idx)
{
    return std::accumulate(idx.coords.begin(), idx.coords.end(), 0);
}

std::vector<int> sorted_coords(const Index &idx)
{
    auto v = idx.coords;
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

EnumerationReport verify_addtofilled(int d, const VerifyOptions &options)
{
    if (d != 3 && d != 5)
        throw MalformedInput("addtofilled is verified for d = 3 and d = 5");
    const detail::Stopwatch clock;
    EnumerationReport report;
    report.claim_id = "addtofilled-" + std::to_string(d);
    report.config = {{"d", std::to_string(d)}, {"n", "4"}};

    const SupportSet m = m4d(d);
    const Shape &shape = m.shape();
    std::vector<Index> targets;
    for (std::size_t off = 0; off < shape.cell_count(); ++off) {
        Index idx = index_of(shape, off);
        if (coordinate_sum(idx) % 4 == 2)
            targets.push_back(std::move(idx));
    }
    std::vector<std::optional<Diagonal>> found(targets.size());
    parallel_for(targets.size(), options.threads, [&](std::size_t i) { found[i] = diagonal_through(m, targets[i]); });

    std::int64_t witnessed = 0, failures = 0;
    std::set<std::vector<int>> multisets;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        multisets.insert(sorted_coords(targets[i]));
        const auto &diag = found[i];
        bool ok = diag && is_diagonal(shape, *diag);
        if (ok) {
            int outside = 0;
            bool through = false;
            for (const auto &idx : diag->indices) {
                outside += m.contains(idx) ? 0 : 1;
                through = through || idx == targets[i];
            }
            ok = outside == 1 && through;
        }
        if (!ok) {
            ++failures;
            report.notes.push_back("no diagonal completes " + targets[i].to_string());
            continue;
        }
        ++witnessed;
        report.certificates.push_back({"index-" + targets[i].to_string(), {SupportSet(shape, diag->indices)}});
    }

    std::int64_t printed_valid = 0;
    std::set<std::vector<int>> printed_multisets;
    const auto printed = catalog_completions(d);
    for (const auto &entry : printed) {
        Diagonal diag;
        diag.indices = entry.completion;
        diag.indices.push_back(entry.added);
        std::sort(diag.indices.begin(), diag.indices.end());
        bool ok = coordinate_sum(entry.added) % 4 == 2 && !m.contains(entry.added) && is_diagonal(shape, diag);
        for (const auto &idx : entry.completion)
            ok = ok && m.contains(idx);
        if (ok)
            ++printed_valid;
        else
            report.notes.push_back("listed completion of " + entry.added.to_string() + " is not a diagonal");
        printed_multisets.insert(sorted_coords(entry.added));
    }

    report.counts["residue_two_indices"] = static_cast<std::int64_t>(targets.size());
    report.counts["witnessed"] = witnessed;
    report.counts["failures"] = failures;
    report.counts["index_classes_under_position_permutations"] = static_cast<std::int64_t>(multisets.size());
    report.counts["printed_completions"] = static_cast<std::int64_t>(printed.size());
    report.counts["printed_completions_valid"] = printed_valid;
    report.counts["printed_index_classes"] = static_cast<std::int64_t>(printed_multisets.size());
    report.status = failures == 0 && printed_valid == static_cast<std::int64_t>(printed.size())
                        ? ClaimStatus::confirmed
                        : ClaimStatus::refuted;
    report.normalize();
    report.elapsed = clock.elapsed();
    return report;
}

namespace {

struct OrbitMember
{
    Word support = 0;
    Word filled = 0;
    BlockParams params;
    std::size_t presentations = 0;
};

bool adds_nothing(const OrbitMember &p, const OrbitMember &q)
{
    // q puts no cell into p's filled subcubes beyond p's own cells, and vice versa.
    return ((q.support & p.filled) & ~p.support) == 0 && ((p.support & q.filled) & ~q.support) == 0;
}

} // namespace

EnumerationReport verify_nonewinfilled_base(const VerifyOptions &options)
{
    const detail::Stopwatch clock;
    EnumerationReport report;
    report.claim_id = "nonewinfilled-3";
    report.config = {{"d", "3"}, {"n", "4"}};

    const SupportSet m = m4d(3);
    std::set<Word> orbit_set;
    for (const auto &map : detail::cube3_cell_maps())
        orbit_set.insert(detail::apply_cell_map(map, m.word()));
    const std::vector<Word> orbit(orbit_set.begin(), orbit_set.end());

    std::vector<OrbitMember> members(orbit.size());
    parallel_for(orbit.size(), options.threads, [&](std::size_t i) {
        OrbitMember &om = members[i];
        om.support = orbit[i];
        const auto presentations = all_block_presentations(detail::to_support(orbit[i]));
        om.presentations = presentations.size();
        if (presentations.empty())
            return;
        om.params = presentations.front();
        for (SubcubeId y : filled_subcubes(om.params))
            om.filled |= subcube_cells(om.params.eps, y).word();
    });
    std::int64_t non_unique = 0;
    for (const auto &om : members)
        if (om.presentations != 1)
            ++non_unique;

    // The group acts transitively on the orbit and preserves the relation, so the first member
    // may be fixed to m4d itself.
    const auto self = static_cast<std::size_t>(std::lower_bound(orbit.begin(), orbit.end(), m.word()) - orbit.begin());
    std::vector<std::size_t> partners;
    for (std::size_t i = 0; i < members.size(); ++i)
        if (i != self && non_unique == 0 && adds_nothing(members[self], members[i]))
            partners.push_back(i);

    // Every pairwise-compatible set containing m4d, grown in increasing partner order.
    const std::size_t np = partners.size();
    std::vector<std::vector<char>> compatible(np, std::vector<char>(np, 0));
    for (std::size_t a = 0; a < np; ++a)
        for (std::size_t b = 0; b < np; ++b)
            compatible[a][b] = a != b && adds_nothing(members[partners[a]], members[partners[b]]);
    std::vector<std::vector<std::size_t>> configurations;
    std::vector<char> is_maximal;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
        if (!chosen.empty()) {
            bool maximal = true;
            for (std::size_t v = 0; v < np && maximal; ++v) {
                bool fits = std::find(chosen.begin(), chosen.end(), v) == chosen.end();
                for (std::size_t u : chosen)
                    fits = fits && compatible[u][v];
                maximal = !fits;
            }
            configurations.push_back(chosen);
            is_maximal.push_back(maximal);
        }
        for (std::size_t v = from; v < np; ++v) {
            bool fits = true;
            for (std::size_t u : chosen)
                fits = fits && compatible[u][v];
            if (!fits)
                continue;
            chosen.push_back(v);
            grow(v + 1);
            chosen.pop_back();
        }
    };
    grow(0);

    const SupportSet l_union_form = canonical_form(m4d(3) | l4d_partner(3));
    std::int64_t disjoint = 0, l_family = 0, exceptions = 0, index_mismatch = 0;
    std::int64_t maximal_count = 0, larger = 0, larger_zero_permanent = 0;
    std::map<std::size_t, std::int64_t> by_size;
    std::set<SupportSet> union_forms;
    for (std::size_t k = 0; k < configurations.size(); ++k) {
        const auto &clique = configurations[k];
        Word joint_word = m.word();
        std::vector<SupportSet> config{m};
        for (std::size_t v : clique) {
            joint_word |= members[partners[v]].support;
            config.push_back(detail::to_support(members[partners[v]].support));
        }
        const SupportSet joint = detail::to_support(joint_word);
        const SupportSet form = canonical_form(joint);
        ++by_size[config.size()];
        maximal_count += is_maximal[k] ? 1 : 0;
        if (clique.size() == 1) {
            const OrbitMember &q = members[partners[clique.front()]];
            const auto index = tesselation_index(members[self].params, q.params);
            if ((members[self].filled & q.filled) == 0) {
                ++disjoint;
                index_mismatch += index ? 1 : 0;
            } else if (form == l_union_form) {
                ++l_family;
                index_mismatch += index == 2 ? 0 : 1;
            } else {
                ++exceptions;
                report.notes.push_back("pair with " + config[1].to_string() +
                                       " is neither disjoint nor of the l4d family");
            }
        } else {
            ++larger;
            if (!has_positive_diagonal(joint).positive())
                ++larger_zero_permanent;
        }
        if (union_forms.insert(form).second)
            report.certificates.push_back({"configuration-" + std::to_string(union_forms.size() - 1), config});
    }
    report.representatives.assign(union_forms.begin(), union_forms.end());
    if (larger > 0)
        report.notes.push_back(std::to_string(larger) +
                               " configurations have more than two members; the union of each has a diagonal, "
                               "so every matrix with that support has positive permanent");

    report.counts["orbit_size"] = static_cast<std::int64_t>(orbit.size());
    report.counts["non_unique_presentations"] = non_unique;
    report.counts["pairs"] = static_cast<std::int64_t>(partners.size());
    report.counts["disjoint_pairs"] = disjoint;
    report.counts["l4d_pairs"] = l_family;
    report.counts["pair_exceptions"] = exceptions;
    report.counts["tesselation_index_mismatches"] = index_mismatch;
    for (const auto &[size, count] : by_size)
        report.counts["configurations_with_" + std::to_string(size) + "_members"] = count;
    report.counts["maximal_configurations"] = maximal_count;
    report.counts["configurations_with_more_than_two_members"] = larger;
    report.counts["larger_configurations_with_zero_permanent_union"] = larger_zero_permanent;
    report.status = non_unique == 0 && larger == 0 && exceptions == 0 && index_mismatch == 0 && !partners.empty()
                        ? ClaimStatus::confirmed
                        : ClaimStatus::refuted;
    report.normalize();
    report.elapsed = clock.elapsed();
    return report;
}

EnumerationReport verify_theorem_small(int d, const VerifyOptions &options)
{
    if (d < 3 || d > 7 || d % 2 == 0)
        throw MalformedInput("theorem-small needs an odd d in 3..7");
    const detail::Stopwatch clock;
    EnumerationReport report;
    report.claim_id = "theorem-small-" + std::to_string(d);
    report.config = {{"d", std::to_string(d)}, {"n", "4"}};

    struct Check
    {
        std::string label;
        SupportSet support;
        bool expect_positive;
    };
    std::vector<Check> checks = {
        {"m4-d" + std::to_string(d), m4d(d), false},
        {"l4-d" + std::to_string(d), l4d_member(d, Rational(1, 2)).support(), false},
        {"m4-d" + std::to_string(d - 1), m4d(d - 1), true},
        {"m4-d" + std::to_string(d + 1), m4d(d + 1), true},
    };
    std::vector<PositivityWitness> results(checks.size());
    parallel_for(checks.size(), options.threads, [&](std::size_t i) { results[i] = has_positive_diagonal(checks[i].support); });

    std::int64_t failures = 0;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const auto &c = checks[i];
        const auto &w = results[i];
        report.search_stats[c.label + "_nodes"] = w.nodes;
        bool ok = w.positive() == c.expect_positive;
        if (ok && w.positive()) {
            const SupportSet diag(c.support.shape(), w.diagonal->indices);
            ok = is_diagonal(c.support.shape(), *w.diagonal) && diag.is_subset_of(c.support);
            report.certificates.push_back({c.label, {diag}});
        }
        report.counts[c.label + "_positive"] = w.positive() ? 1 : 0;
        if (!ok) {
            ++failures;
            report.notes.push_back(c.label + (w.positive() ? " has a diagonal" : " has no diagonal"));
        }
    }
    report.counts["failures"] = failures;
    report.status = failures == 0 ? ClaimStatus::confirmed : ClaimStatus::refuted;
    report.normalize();
    report.elapsed = clock.elapsed();
    return report;
}

} // namespace polyperm
