#include "polyperm/claims.hpp"

#include "claims_util.hpp"
#include "cube3.hpp"
#include "polyperm/catalog.hpp"
#include "polyperm/equivalence.hpp"
#include "polyperm/errors.hpp"
#include "polyperm/hypermatrix.hpp"
#include "polyperm/permanent.hpp"
#include "polyperm/realizability.hpp"
#include "polyperm/worker_pool.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace polyperm {

using detail::Word;

SupportSet PlaneConfiguration::stacked() const
{
    return stack_hyperplanes(std::vector<SupportSet>(hyperplanes.begin(), hyperplanes.end()), 0);
}

namespace {

// Constraint search for the hyperplanes 1..3 of a 4-dimensional stochastic support whose
// hyperplane 0 is fixed. Each of the three free hyperplanes labels its cells one (entry 1),
// half (entry 1/2) or zero; a line carries a single one, or two halves. A diagonal of the
// stacked support picks one cell per hyperplane, pairwise distinct in all three coordinates, so
// cells p, q placed in two free hyperplanes forbid every cell x of the third that, together with
// some cell of hyperplane 0, would complete them to a diagonal.
class PlaneSearch
{
public:
    PlaneSearch(Word first, std::uint64_t budget) : budget_(budget)
    {
        for (int p = 0; p < 64; ++p)
            for (int q = 0; q < 64; ++q)
                forbid_[p][q] = completions(first, p, q);
    }

    ConfigurationSearch run(Word first)
    {
        ConfigurationSearch out;
        State start{};
        const bool found = visit(start);
        out.nodes = nodes_;
        out.exhausted_budget = exhausted_;
        if (found && !exhausted_) {
            out.configuration = PlaneConfiguration{
                {detail::to_support(first), detail::to_support(solution_.support(0)),
                 detail::to_support(solution_.support(1)), detail::to_support(solution_.support(2))}};
        }
        return out;
    }

private:
    struct State
    {
        std::array<Word, 3> zero{}, half{}, one{};

        Word support(int h) const { return half[static_cast<std::size_t>(h)] | one[static_cast<std::size_t>(h)]; }
        Word decided(int h) const { return zero[static_cast<std::size_t>(h)] | support(h); }
    };

    static int coord(int cell, int k) { return k == 0 ? cell >> 4 : (k == 1 ? (cell >> 2) & 3 : cell & 3); }

    static Word completions(Word first, int p, int q)
    {
        int rest[3][2];
        for (int k = 0; k < 3; ++k) {
            const int a = coord(p, k), b = coord(q, k);
            if (a == b)
                return 0;
            int m = 0;
            for (int v = 0; v < 4; ++v)
                if (v != a && v != b)
                    rest[k][m++] = v;
        }
        Word out = 0;
        for (int split = 0; split < 8; ++split) {
            const int s0 = split & 1, s1 = (split >> 1) & 1, s2 = (split >> 2) & 1;
            const int in_first = detail::cube3_cell(rest[0][s0], rest[1][s1], rest[2][s2]);
            const int other = detail::cube3_cell(rest[0][1 - s0], rest[1][1 - s1], rest[2][1 - s2]);
            if ((first >> in_first) & 1)
                out |= Word{1} << other;
        }
        return out;
    }

    // Applies line rules and diagonal exclusions to a fixpoint; false on a contradiction.
    bool propagate(State &s) const
    {
        const auto &lines = detail::cube3_lines();
        for (bool changed = true; changed;) {
            changed = false;
            for (int h = 0; h < 3; ++h) {
                const Word p1 = s.support((h + 1) % 3);
                const Word p2 = s.support((h + 2) % 3);
                Word f = 0;
                for (Word x = p1; x; x &= x - 1) {
                    const auto &row = forbid_[std::countr_zero(x)];
                    for (Word y = p2; y; y &= y - 1)
                        f |= row[std::countr_zero(y)];
                }
                if (f & s.support(h))
                    return false;
                const Word fresh = f & ~s.zero[static_cast<std::size_t>(h)];
                if (fresh) {
                    s.zero[static_cast<std::size_t>(h)] |= fresh;
                    changed = true;
                }
            }
            for (int h = 0; h < 3; ++h) {
                const auto hh = static_cast<std::size_t>(h);
                for (Word line : lines) {
                    const Word ones = s.one[hh] & line;
                    const Word halves = s.half[hh] & line;
                    const Word open = line & ~s.decided(h);
                    const int n_one = std::popcount(ones), n_half = std::popcount(halves), n_open = std::popcount(open);
                    if (n_one > 1 || (n_one && n_half) || n_half > 2)
                        return false;
                    if (n_one == 1 || n_half == 2) {
                        if (open) {
                            s.zero[hh] |= open;
                            changed = true;
                        }
                    } else if (n_half == 1) {
                        if (n_open == 0)
                            return false;
                        if (n_open == 1) {
                            s.half[hh] |= open;
                            changed = true;
                        }
                    } else {
                        if (n_open == 0)
                            return false;
                        if (n_open == 1) {
                            s.one[hh] |= open;
                            changed = true;
                        }
                    }
                }
            }
        }
        return true;
    }

    // Branches on the undecided line with the fewest completions (first such line in the order
    // hyperplane, line index): a lone one or a pair of halves, or the partner of a placed half.
    bool visit(State s)
    {
        if (budget_ && nodes_ >= budget_) {
            exhausted_ = true;
            return false;
        }
        ++nodes_;
        if (!propagate(s))
            return false;
        const auto &lines = detail::cube3_lines();
        int best_h = -1;
        Word best_line = 0;
        int best = 1 << 20;
        for (int h = 0; h < 3; ++h)
            for (Word line : lines) {
                const Word open = line & ~s.decided(h);
                if (!open)
                    continue;
                const int n_open = std::popcount(open);
                const bool has_half = s.half[static_cast<std::size_t>(h)] & line;
                const int options = has_half ? n_open : n_open + n_open * (n_open - 1) / 2;
                if (options < best) {
                    best = options;
                    best_h = h;
                    best_line = line;
                }
            }
        if (best_h < 0) {
            solution_ = s;
            return true;
        }
        const auto hh = static_cast<std::size_t>(best_h);
        const Word open = best_line & ~s.decided(best_h);
        std::vector<int> cells;
        for (Word x = open; x; x &= x - 1)
            cells.push_back(std::countr_zero(x));
        if (s.half[hh] & best_line) {
            for (int c : cells) {
                State t = s;
                t.half[hh] |= Word{1} << c;
                if (visit(t))
                    return true;
                if (exhausted_)
                    return false;
            }
            return false;
        }
        for (int c : cells) {
            State t = s;
            t.one[hh] |= Word{1} << c;
            if (visit(t))
                return true;
            if (exhausted_)
                return false;
        }
        for (std::size_t i = 0; i < cells.size(); ++i)
            for (std::size_t j = i + 1; j < cells.size(); ++j) {
                State t = s;
                t.half[hh] |= (Word{1} << cells[i]) | (Word{1} << cells[j]);
                if (visit(t))
                    return true;
                if (exhausted_)
                    return false;
            }
        return false;
    }

    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    State solution_{};
    Word forbid_[64][64];
};

std::string hex_word(Word w)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(w));
    return buf;
}

Word parse_hex_word(const std::string &s)
{
    if (s.size() != 16 || s.find_first_not_of("0123456789abcdef") != std::string::npos)
        throw ParseError("malformed support word '" + s + "'");
    return std::stoull(s, nullptr, 16);
}

// Checkpoint encoding of one unit: "admits <w1> <w2> <w3> <nodes>", "none <nodes>" or "budget <nodes>".
std::string encode_unit(const ConfigurationSearch &r)
{
    std::ostringstream out;
    if (r.configuration) {
        out << "admits";
        for (int h = 1; h < 4; ++h)
            out << ' ' << hex_word(r.configuration->hyperplanes[static_cast<std::size_t>(h)].word());
    } else {
        out << (r.exhausted_budget ? "budget" : "none");
    }
    out << ' ' << r.nodes;
    return out.str();
}

ConfigurationSearch decode_unit(const std::string &text, Word first)
{
    std::istringstream in(text);
    std::string kind;
    in >> kind;
    ConfigurationSearch r;
    if (kind == "admits") {
        std::string w[3];
        in >> w[0] >> w[1] >> w[2];
        r.configuration = PlaneConfiguration{{detail::to_support(first), detail::to_support(parse_hex_word(w[0])),
                                              detail::to_support(parse_hex_word(w[1])),
                                              detail::to_support(parse_hex_word(w[2]))}};
    } else if (kind == "budget") {
        r.exhausted_budget = true;
    } else if (kind != "none") {
        throw ParseError("malformed checkpoint entry '" + text + "'");
    }
    if (!(in >> r.nodes))
        throw ParseError("malformed checkpoint entry '" + text + "'");
    return r;
}

// A configuration certificate holds: its hyperplanes are sesquialteral and the stacked support has no diagonal.
bool configuration_holds(const PlaneConfiguration &c)
{
    for (const auto &h : c.hyperplanes)
        if (!realize_sesquialteral(h))
            return false;
    return !has_positive_diagonal(c.stacked()).positive();
}

} // namespace

ConfigurationSearch find_zero_permanent_configuration(const SupportSet &first, std::uint64_t node_budget)
{
    if (!(first.shape() == detail::cube3_shape()))
        throw ShapeError("the first hyperplane must be 3-dimensional of order 4");
    if (!realize_sesquialteral(first))
        throw MalformedInput("the first hyperplane must be a sesquialteral support");
    PlaneSearch search(first.word(), node_budget);
    return search.run(first.word());
}

EnumerationReport verify_claim_planes(const VerifyOptions &options)
{
    const detail::Stopwatch clock;
    EnumerationReport report;
    report.claim_id = "claim-planes";
    report.config = {{"node_budget", std::to_string(options.node_budget)}};

    const auto classes = detail::orbit_classes(detail::sesquialteral_words());
    std::vector<ConfigurationSearch> results(classes.size());
    parallel_for(classes.size(), options.threads, [&](std::size_t k) {
        const Word first = classes[k].representative.word();
        const std::string unit = "gamma0-" + hex_word(first);
        if (options.checkpoint)
            if (const auto prior = options.checkpoint->lookup(unit)) {
                ConfigurationSearch r = decode_unit(*prior, first);
                if (!r.exhausted_budget) {
                    results[k] = std::move(r);
                    return;
                }
            }
        results[k] = find_zero_permanent_configuration(classes[k].representative, options.node_budget);
        if (options.checkpoint)
            options.checkpoint->record(unit, encode_unit(results[k]));
    });

    std::set<SupportSet> printed_forms;
    std::map<SupportSet, std::string> printed_label;
    for (const auto &entry : catalog_plane_types()) {
        const SupportSet form = canonical_form(entry.support);
        printed_forms.insert(form);
        printed_label.emplace(form, entry.label);
    }

    bool exhausted = false;
    std::uint64_t node_total = 0, node_max = 0;
    std::int64_t admitting = 0, printed_admitting = 0, certificate_failures = 0;
    std::set<SupportSet> admitting_forms;
    for (std::size_t k = 0; k < classes.size(); ++k) {
        const auto &r = results[k];
        node_total += r.nodes;
        node_max = std::max(node_max, r.nodes);
        exhausted = exhausted || r.exhausted_budget;
        if (!r.configuration)
            continue;
        const SupportSet &form = classes[k].representative;
        ++admitting;
        admitting_forms.insert(form);
        report.representatives.push_back(form);
        const auto label = printed_label.find(form);
        if (label != printed_label.end())
            ++printed_admitting;
        else
            report.notes.push_back("class " + std::to_string(k) + " (" + std::to_string(form.count()) +
                                   " cells, outside the list) admits a zero-permanent configuration");
        if (!configuration_holds(*r.configuration))
            ++certificate_failures;
        const auto &hp = r.configuration->hyperplanes;
        report.certificates.push_back(
            {"class-" + std::to_string(k) + (label != printed_label.end() ? "-type-" + label->second : ""),
             {hp[0], hp[1], hp[2], hp[3]}});
    }

    report.counts["classes"] = static_cast<std::int64_t>(classes.size());
    report.counts["admitting_classes"] = admitting;
    report.counts["non_admitting_classes"] = static_cast<std::int64_t>(classes.size()) - admitting;
    report.counts["expected_admitting_classes"] = static_cast<std::int64_t>(printed_forms.size());
    report.counts["printed_types_admitting"] = printed_admitting;
    report.counts["admitting_outside_list"] = admitting - printed_admitting;
    report.counts["certificate_failures"] = certificate_failures;
    report.search_stats["nodes_total"] = node_total;
    report.search_stats["nodes_max_unit"] = node_max;

    if (exhausted)
        report.status = ClaimStatus::budget_exhausted;
    else if (admitting_forms == printed_forms && certificate_failures == 0)
        report.status = ClaimStatus::confirmed;
    else
        report.status = ClaimStatus::refuted;
    report.normalize();
    report.elapsed = clock.elapsed();
    return report;
}

EnumerationReport verify_plane_types_embed(const VerifyOptions &options)
{
    const detail::Stopwatch clock;
    EnumerationReport report;
    report.claim_id = "claim-planes-directed";
    report.config = {{"node_budget", std::to_string(options.node_budget)}};

    const auto types = catalog_plane_types();
    std::vector<ConfigurationSearch> results(types.size());
    parallel_for(types.size(), options.threads, [&](std::size_t k) {
        results[k] = find_zero_permanent_configuration(types[k].support, options.node_budget);
    });
    std::int64_t embedded = 0, failures = 0;
    bool exhausted = false;
    std::uint64_t node_total = 0;
    for (std::size_t k = 0; k < types.size(); ++k) {
        node_total += results[k].nodes;
        exhausted = exhausted || results[k].exhausted_budget;
        if (!results[k].configuration) {
            report.notes.push_back("type (" + types[k].label + ") has no zero-permanent configuration");
            continue;
        }
        ++embedded;
        if (!configuration_holds(*results[k].configuration))
            ++failures;
        const auto &hp = results[k].configuration->hyperplanes;
        report.representatives.push_back(canonical_form(types[k].support));
        report.certificates.push_back({"type-" + types[k].label, {hp[0], hp[1], hp[2], hp[3]}});
    }
    report.counts["types"] = static_cast<std::int64_t>(types.size());
    report.counts["types_embedded"] = embedded;
    report.counts["certificate_failures"] = failures;
    report.search_stats["nodes_total"] = node_total;
    if (exhausted && embedded < static_cast<std::int64_t>(types.size()))
        report.status = ClaimStatus::budget_exhausted;
    else
        report.status = embedded == static_cast<std::int64_t>(types.size()) && failures == 0 ? ClaimStatus::confirmed
                                                                                             : ClaimStatus::refuted;
    report.normalize();
    report.elapsed = clock.elapsed();
    return report;
}

} // namespace polyperm
