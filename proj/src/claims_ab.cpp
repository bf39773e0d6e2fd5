#include "polyperm/claims.hpp"

#include "claims_util.hpp"
#include "polyperm/catalog.hpp"
#include "polyperm/equivalence.hpp"
#include "polyperm/hypermatrix.hpp"
#include "polyperm/permanent.hpp"
#include "polyperm/realizability.hpp"
#include "polyperm/worker_pool.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <set>

namespace polyperm {

namespace {

// 2-dimensional supports of order 4 as 16-bit words, cell (r, c) being bit 4r + c.
using Square = std::uint16_t;

Shape square_shape()
{
    return Shape(2, 4);
}

SupportSet to_support(Square w)
{
    return SupportSet::from_word(square_shape(), w);
}

int row_count(Square s, int r)
{
    return std::popcount(static_cast<unsigned>((s >> (4 * r)) & 0xFu));
}

int column_count(Square s, int c)
{
    int k = 0;
    for (int r = 0; r < 4; ++r)
        k += (s >> (4 * r + c)) & 1;
    return k;
}

int longest_line(Square s)
{
    int m = 0;
    for (int i = 0; i < 4; ++i)
        m = std::max({m, row_count(s, i), column_count(s, i)});
    return m;
}

struct Permutation
{
    std::array<int, 4> image;
    Square support;
};

std::vector<Permutation> square_permutations()
{
    std::vector<Permutation> out;
    for (const auto &p : all_permutations(4)) {
        Permutation perm{};
        for (int r = 0; r < 4; ++r) {
            perm.image[static_cast<std::size_t>(r)] = p[static_cast<std::size_t>(r)];
            perm.support |= static_cast<Square>(1u << (4 * r + p[static_cast<std::size_t>(r)]));
        }
        out.push_back(perm);
    }
    return out;
}

// Fast zero test for the stack (A, B, C1, C2). A diagonal takes cells a in A and b in B in
// different rows and columns; the two rows and two columns they leave must be matched by one
// cell of C1 and one of C2. Pairs of 2-subsets of {0..3} are encoded as 6 * rowpair + colpair.
class StackTester
{
public:
    explicit StackTester(const std::vector<Permutation> &perms) : perms_(perms)
    {
        for (std::size_t i = 0; i < perms.size(); ++i)
            for (std::size_t j = 0; j < perms.size(); ++j) {
                std::uint64_t w = 0;
                for (int r1 = 0; r1 < 4; ++r1)
                    for (int r2 = 0; r2 < 4; ++r2) {
                        const int k1 = perms[i].image[static_cast<std::size_t>(r1)];
                        const int k2 = perms[j].image[static_cast<std::size_t>(r2)];
                        if (r1 != r2 && k1 != k2)
                            w |= std::uint64_t{1} << (6 * pair_index(r1, r2) + pair_index(k1, k2));
                    }
                covers_[i][j] = w;
            }
    }

    /// Leftover (rowpair, colpair) combinations of the diagonal prefixes through A and B.
    static std::uint64_t leftovers(Square a, Square b)
    {
        std::uint64_t t = 0;
        for (int x = 0; x < 16; ++x) {
            if (!((a >> x) & 1))
                continue;
            for (int y = 0; y < 16; ++y) {
                if (!((b >> y) & 1))
                    continue;
                const int ra = x / 4, ca = x % 4, rb = y / 4, cb = y % 4;
                if (ra == rb || ca == cb)
                    continue;
                t |= std::uint64_t{1} << (6 * complement_pair(ra, rb) + complement_pair(ca, cb));
            }
        }
        return t;
    }

    bool zero(std::uint64_t leftover, std::size_t c1, std::size_t c2) const { return !(leftover & covers_[c1][c2]); }

private:
    static int pair_index(int a, int b)
    {
        static constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
        return table[a][b];
    }

    static int complement_pair(int a, int b)
    {
        int rest[2];
        int k = 0;
        for (int v = 0; v < 4; ++v)
            if (v != a && v != b)
                rest[k++] = v;
        return pair_index(rest[0], rest[1]);
    }

    const std::vector<Permutation> &perms_;
    std::array<std::array<std::uint64_t, 24>, 24> covers_{};
};

// The stacked 3-dimensional support: plane k holds the cells with first coordinate k.
SupportSet stack(Square a, Square b, Square c1, Square c2)
{
    const std::uint64_t w = std::uint64_t{a} | std::uint64_t{b} << 16 | std::uint64_t{c1} << 32 | std::uint64_t{c2} << 48;
    return SupportSet::from_word(Shape(3, 4), w);
}

struct ListOutcome
{
    // B supports admitting a zero pair, with the zero pairs (c1, c2) each.
    std::map<Square, std::vector<std::pair<std::size_t, std::size_t>>> zero_pairs;
    std::int64_t disagreements = 0;
    std::uint64_t nodes = 0;
};

// For a fixed A, every B and every (C1, C2), decided by the positivity search on the stacked
// support and cross-checked against the fast test.
ListOutcome scan_b(Square a, const std::vector<Square> &bs, const std::vector<Permutation> &perms,
                   const StackTester &tester, int threads)
{
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> found(bs.size());
    std::vector<std::int64_t> disagree(bs.size(), 0);
    std::vector<std::uint64_t> nodes(bs.size(), 0);
    parallel_for(bs.size(), threads, [&](std::size_t k) {
        const std::uint64_t left = StackTester::leftovers(a, bs[k]);
        for (std::size_t i = 0; i < perms.size(); ++i)
            for (std::size_t j = 0; j < perms.size(); ++j) {
                const auto w = has_positive_diagonal(stack(a, bs[k], perms[i].support, perms[j].support));
                nodes[k] += w.nodes;
                if (w.positive() == tester.zero(left, i, j))
                    ++disagree[k];
                if (!w.positive())
                    found[k].emplace_back(i, j);
            }
    });
    ListOutcome out;
    for (std::size_t k = 0; k < bs.size(); ++k) {
        out.disagreements += disagree[k];
        out.nodes += nodes[k];
        if (!found[k].empty())
            out.zero_pairs.emplace(bs[k], std::move(found[k]));
    }
    return out;
}

std::vector<Square> inclusion_minimal(const std::vector<Square> &sets)
{
    std::vector<Square> out;
    for (Square s : sets) {
        bool minimal = true;
        for (Square t : sets)
            if (t != s && (t & s) == t) {
                minimal = false;
                break;
            }
        if (minimal)
            out.push_back(s);
    }
    return out;
}

} // namespace

EnumerationReport verify_claim_AB(const VerifyOptions &options)
{
    const detail::Stopwatch clock;
    EnumerationReport report;
    report.claim_id = "claim-ab";
    report.config = {{"d", "2"}, {"n", "4"}};

    // Every polystochastic support: nonempty lines, then the realizability program.
    std::vector<Square> candidates;
    for (unsigned s = 1; s < 0x10000u; ++s) {
        bool lines = true;
        for (int i = 0; i < 4 && lines; ++i)
            lines = row_count(static_cast<Square>(s), i) && column_count(static_cast<Square>(s), i);
        if (lines)
            candidates.push_back(static_cast<Square>(s));
    }
    std::vector<char> realizable(candidates.size(), 0);
    parallel_for(candidates.size(), options.threads, [&](std::size_t i) {
        realizable[i] = realize_polystochastic(to_support(candidates[i])).has_value();
    });
    std::vector<Square> poly;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (realizable[i])
            poly.push_back(candidates[i]);

    std::vector<Square> bs;
    for (Square s : poly)
        if (longest_line(s) >= 2)
            bs.push_back(s);
    const auto perms = square_permutations();
    const StackTester tester(perms);

    // Classes of A with a line of three nonzeros; a class qualifies when some B, C1, C2 stack
    // with its representative into a support without diagonals.
    std::vector<SupportSet> forms(poly.size(), SupportSet(square_shape()));
    parallel_for(poly.size(), options.threads, [&](std::size_t i) { forms[i] = canonical_form(to_support(poly[i])); });
    std::map<SupportSet, Square> a_classes;
    for (std::size_t i = 0; i < poly.size(); ++i)
        if (longest_line(poly[i]) >= 3)
            a_classes.emplace(forms[i], static_cast<Square>(forms[i].word()));
    std::vector<std::pair<SupportSet, Square>> class_list(a_classes.begin(), a_classes.end());
    struct Witness
    {
        bool found = false;
        Square b = 0;
        std::size_t c1 = 0, c2 = 0;
    };
    std::vector<Witness> witnesses(class_list.size());
    parallel_for(class_list.size(), options.threads, [&](std::size_t k) {
        const Square a = class_list[k].second;
        for (Square b : bs) {
            const std::uint64_t left = StackTester::leftovers(a, b);
            for (std::size_t i = 0; i < perms.size(); ++i)
                for (std::size_t j = 0; j < perms.size(); ++j)
                    if (tester.zero(left, i, j)) {
                        witnesses[k] = {true, b, i, j};
                        return;
                    }
        }
    });
    std::set<SupportSet> qualifying_forms;
    std::int64_t witness_failures = 0;
    for (std::size_t k = 0; k < class_list.size(); ++k) {
        const Witness &w = witnesses[k];
        if (!w.found)
            continue;
        qualifying_forms.insert(class_list[k].first);
        if (has_positive_diagonal(stack(class_list[k].second, w.b, perms[w.c1].support, perms[w.c2].support))
                .positive())
            ++witness_failures;
    }
    std::vector<Square> qualifying;
    for (std::size_t i = 0; i < poly.size(); ++i)
        if (qualifying_forms.count(forms[i]))
            qualifying.push_back(poly[i]);
    const auto minimal = inclusion_minimal(qualifying);
    std::set<SupportSet> minimal_forms;
    for (Square a : minimal)
        minimal_forms.insert(canonical_form(to_support(a)));
    for (const auto &form : minimal_forms) {
        report.representatives.push_back(form);
        const Witness &w = witnesses[static_cast<std::size_t>(
            std::find_if(class_list.begin(), class_list.end(), [&](const auto &c) { return c.first == form; }) -
            class_list.begin())];
        report.certificates.push_back({"minimal-a",
                                       {form, to_support(w.b), to_support(perms[w.c1].support),
                                        to_support(perms[w.c2].support)}});
    }

    const auto printed_a = catalog_minimal_a();
    std::int64_t printed_a_matched = 0;
    for (const auto &entry : printed_a)
        if (minimal_forms.count(canonical_form(entry.support)))
            ++printed_a_matched;

    // Lists of B for the printed (A1) and (A2).
    std::int64_t disagreements = 0;
    std::int64_t property_one_violations = 0;
    std::int64_t property_two_violations = 0;
    std::int64_t unequal_pairs_checked = 0;
    bool lists_match = true;
    for (int list = 1; list <= 2; ++list) {
        const Square a = static_cast<Square>(printed_a[static_cast<std::size_t>(list - 1)].support.word());
        const ListOutcome outcome = scan_b(a, bs, perms, tester, options.threads);
        disagreements += outcome.disagreements;
        report.search_stats["list" + std::to_string(list) + "_positivity_nodes"] = outcome.nodes;

        std::vector<Square> full;
        for (const auto &[b, pairs] : outcome.zero_pairs)
            full.push_back(b);
        const auto minimal_b = inclusion_minimal(full);
        std::set<Square> printed;
        for (const auto &entry : catalog_b_list(list))
            printed.insert(static_cast<Square>(entry.support.word()));
        std::int64_t matched = 0;
        for (Square b : minimal_b)
            matched += printed.count(b) ? 1 : 0;
        const std::set<Square> minimal_set(minimal_b.begin(), minimal_b.end());
        lists_match = lists_match && minimal_set == printed;

        std::set<SupportSet> printed_forms, minimal_b_forms;
        for (Square b : printed)
            printed_forms.insert(canonical_form(to_support(b)));
        for (Square b : minimal_b)
            minimal_b_forms.insert(canonical_form(to_support(b)));

        const std::string prefix = "list" + std::to_string(list) + "_";
        report.counts[prefix + "b_supports"] = static_cast<std::int64_t>(full.size());
        report.counts[prefix + "minimal_b_supports"] = static_cast<std::int64_t>(minimal_b.size());
        report.counts[prefix + "printed_matched"] = matched;
        report.counts[prefix + "classes_match"] = printed_forms == minimal_b_forms ? 1 : 0;

        for (const auto &[b, pairs] : outcome.zero_pairs) {
            const auto [c1, c2] = pairs.front();
            report.certificates.push_back(
                {prefix + (printed.count(b) ? "printed" : "extra"),
                 {to_support(a), to_support(b), to_support(perms[c1].support), to_support(perms[c2].support)}});
            if (list == 1) {
                // Property (1): row 0 and column 0 are 0/1 in every realization, i.e. carry one cell.
                if (row_count(b, 0) != 1 || column_count(b, 0) != 1)
                    ++property_one_violations;
                else if (const auto r = realize_polystochastic(to_support(b))) {
                    for (int k = 0; k < 4; ++k) {
                        const Rational &row_entry = r->matrix.at(Index{0, k});
                        const Rational &column_entry = r->matrix.at(Index{k, 0});
                        if ((row_entry != 0 && row_entry != 1) || (column_entry != 0 && column_entry != 1)) {
                            ++property_one_violations;
                            break;
                        }
                    }
                }
            } else {
                for (const auto &[i, j] : pairs)
                    if (i != j)
                        ++property_two_violations;
            }
            if (!printed.count(b)) {
                std::string note = "B support " + to_support(b).to_string() + " also pairs with (A" +
                                   std::to_string(list) + ")";
                for (Square m : minimal_b)
                    if ((m & b) == m && m != b)
                        note += "; it strictly contains the listed " + to_support(m).to_string();
                report.notes.push_back(note);
            }
        }
        if (list == 2)
            for (Square b : printed) {
                std::int64_t positive_unequal = static_cast<std::int64_t>(perms.size() * (perms.size() - 1));
                if (const auto it = outcome.zero_pairs.find(b); it != outcome.zero_pairs.end())
                    for (const auto &[i, j] : it->second)
                        positive_unequal -= i != j ? 1 : 0;
                unequal_pairs_checked += positive_unequal;
            }
    }

    report.counts["polystochastic_supports"] = static_cast<std::int64_t>(poly.size());
    report.counts["b_candidates"] = static_cast<std::int64_t>(bs.size());
    report.counts["a_classes_with_line_of_three"] = static_cast<std::int64_t>(class_list.size());
    report.counts["qualifying_a_classes"] = static_cast<std::int64_t>(qualifying_forms.size());
    report.counts["qualifying_a_supports"] = static_cast<std::int64_t>(qualifying.size());
    report.counts["minimal_a_supports"] = static_cast<std::int64_t>(minimal.size());
    report.counts["minimal_a_classes"] = static_cast<std::int64_t>(minimal_forms.size());
    report.counts["printed_a_matched"] = printed_a_matched;
    report.counts["property1_violations"] = property_one_violations;
    report.counts["property2_violations"] = property_two_violations;
    report.counts["list2_unequal_permutation_pairs_positive"] = unequal_pairs_checked;
    report.counts["engine_disagreements"] = disagreements;
    report.counts["witness_failures"] = witness_failures;

    const bool ok = minimal_forms.size() == 2 && printed_a_matched == 2 && lists_match &&
                    property_one_violations == 0 && property_two_violations == 0 && disagreements == 0 &&
                    witness_failures == 0;
    report.status = ok ? ClaimStatus::confirmed : ClaimStatus::refuted;
    report.notes.push_back("lists compare the inclusion-minimal B supports with the printed ones");
    report.normalize();
    report.elapsed = clock.elapsed();
    return report;
}

} // namespace polyperm
