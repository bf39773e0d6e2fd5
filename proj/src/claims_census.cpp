#include "polyperm/claims.hpp"

#include "claims_util.hpp"
#include "cube3.hpp"
#include "polyperm/catalog.hpp"
#include "polyperm/equivalence.hpp"
#include "polyperm/permanent.hpp"
#include "polyperm/realizability.hpp"
#include "polyperm/worker_pool.hpp"

#include <algorithm>
#include <bit>

namespace polyperm {

using detail::Word;

namespace {

// Strength-2 orthogonal array check on the multiset holding each cell once per half-unit of
// its entry: every pair of positions sees every pair of symbols twice, i.e. every line carries
// weight 2 when lone cells count 2 and paired cells count 1.
bool is_oa_strength_two(Word w)
{
    const auto &lines = detail::cube3_lines();
    Word lone = 0;
    for (Word line : lines)
        if (std::popcount(w & line) == 1)
            lone |= w & line;
    for (Word line : lines)
        if (std::popcount(w & line) + std::popcount(lone & line) != 2)
            return false;
    return true;
}

std::string size_key(std::size_t size)
{
    std::string s = std::to_string(size);
    return "classes_of_size_" + std::string(s.size() < 2 ? 1 : 0, '0') + s;
}

} // namespace

EnumerationReport census_sesquialteral_3d(const VerifyOptions &)
{
    const detail::Stopwatch clock;
    EnumerationReport report;
    report.claim_id = "census-44";
    report.config = {{"d", "3"}, {"n", "4"}};

    const auto words = detail::sesquialteral_words();
    const auto classes = detail::orbit_classes(words);

    std::int64_t oa_failures = 0;
    std::int64_t realization_failures = 0;
    std::size_t orbit_total = 0;
    for (const auto &cls : classes) {
        report.representatives.push_back(cls.representative);
        orbit_total += cls.orbit_size;
        const Word w = cls.representative.word();
        if (!is_oa_strength_two(w))
            ++oa_failures;
        if (!realize_sesquialteral(cls.representative))
            ++realization_failures;
        ++report.counts[size_key(cls.representative.count())];
    }
    std::int64_t catalogued_found = 0;
    for (const auto &entry : catalog_plane_types()) {
        const SupportSet form = canonical_form(entry.support);
        if (std::binary_search(report.representatives.begin(), report.representatives.end(), form))
            ++catalogued_found;
        else
            report.notes.push_back("type (" + entry.label + ") is not among the classes");
    }

    report.counts["supports"] = static_cast<std::int64_t>(words.size());
    report.counts["orbit_sizes_total"] = static_cast<std::int64_t>(orbit_total);
    report.counts["classes"] = static_cast<std::int64_t>(classes.size());
    report.counts["expected_classes"] = 44;
    report.counts["oa_strength_two_failures"] = oa_failures;
    report.counts["realization_failures"] = realization_failures;
    report.counts["catalogued_types_found"] = catalogued_found;
    report.search_stats["group_elements"] = detail::cube3_cell_maps().size();

    const bool ok = classes.size() == 44 && oa_failures == 0 && realization_failures == 0 && catalogued_found == 8 &&
                    orbit_total == words.size();
    report.status = ok ? ClaimStatus::confirmed : ClaimStatus::refuted;
    report.notes.push_back(std::to_string(words.size()) + " supports fall into " + std::to_string(classes.size()) +
                           " equivalence classes");
    report.normalize();
    report.elapsed = clock.elapsed();
    return report;
}

EnumerationReport census_double_perm_3d_positive(const VerifyOptions &options)
{
    const detail::Stopwatch clock;
    EnumerationReport report;
    report.claim_id = "census-double3";
    report.config = {{"d", "3"}, {"n", "4"}};

    std::vector<Word> words;
    for (Word w : detail::sesquialteral_words())
        if (std::popcount(w) == 32)
            words.push_back(w);

    // Every support is searched, not only the class representatives.
    std::vector<std::uint64_t> nodes(words.size(), 0);
    std::vector<char> positive(words.size(), 0);
    parallel_for(words.size(), options.threads, [&](std::size_t i) {
        const auto witness = has_positive_diagonal(detail::to_support(words[i]));
        nodes[i] = witness.nodes;
        positive[i] = witness.positive();
    });
    std::int64_t counterexamples = 0;
    std::uint64_t node_total = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
        node_total += nodes[i];
        if (!positive[i])
            ++counterexamples;
    }

    const auto classes = detail::orbit_classes(words);
    std::int64_t wrong_size = 0;
    for (std::size_t k = 0; k < classes.size(); ++k) {
        const auto &cls = classes[k];
        report.representatives.push_back(cls.representative);
        if (cls.representative.count() != 32 || !is_double_permutation_support(cls.representative))
            ++wrong_size;
        const auto witness = has_positive_diagonal(cls.representative);
        if (witness.positive())
            report.certificates.push_back(
                {"class-" + std::to_string(k),
                 {cls.representative, SupportSet(cls.representative.shape(), witness.diagonal->indices)}});
    }
    for (const char *label : {"f", "h"}) {
        for (const auto &entry : catalog_plane_types())
            if (entry.label == label) {
                const SupportSet form = canonical_form(entry.support);
                const bool found =
                    std::binary_search(report.representatives.begin(), report.representatives.end(), form);
                report.counts[std::string("catalogued_") + label + "_found"] = found ? 1 : 0;
                report.counts[std::string("catalogued_") + label + "_positive"] =
                    has_positive_diagonal(entry.support).positive() ? 1 : 0;
            }
    }

    report.counts["supports"] = static_cast<std::int64_t>(words.size());
    report.counts["classes"] = static_cast<std::int64_t>(classes.size());
    report.counts["counterexamples"] = counterexamples;
    report.counts["supports_not_of_size_32"] = wrong_size;
    report.search_stats["positivity_nodes"] = node_total;
    report.status = counterexamples == 0 && wrong_size == 0 ? ClaimStatus::confirmed : ClaimStatus::refuted;
    report.notes.push_back(std::to_string(words.size()) + " double permutation supports in " +
                           std::to_string(classes.size()) + " classes, " + std::to_string(counterexamples) +
                           " without a positive diagonal");
    report.normalize();
    report.elapsed = clock.elapsed();
    return report;
}

} // namespace polyperm
