#include "polyperm/claims.hpp"

#include "polyperm/block.hpp"
#include "polyperm/catalog.hpp"
#include "polyperm/equivalence.hpp"
#include "polyperm/errors.hpp"
#include "polyperm/hypermatrix.hpp"
#include "polyperm/permanent.hpp"
#include "polyperm/realizability.hpp"

#include <algorithm>
#include <numeric>

namespace polyperm {

const char *to_string(ClaimStatus s)
{
    switch (s) {
    case ClaimStatus::confirmed:
        return "confirmed";
    case ClaimStatus::refuted:
        return "refuted";
    case ClaimStatus::budget_exhausted:
        return "budget-exhausted";
    }
    return "?";
}

ClaimStatus parse_claim_status(const std::string &name)
{
    for (auto s : {ClaimStatus::confirmed, ClaimStatus::refuted, ClaimStatus::budget_exhausted})
        if (name == to_string(s))
            return s;
    throw ParseError("unknown claim status '" + name + "'");
}

void EnumerationReport::normalize()
{
    std::sort(representatives.begin(), representatives.end());
    representatives.erase(std::unique(representatives.begin(), representatives.end()), representatives.end());
}

const std::vector<std::string> &claim_ids()
{
    static const std::vector<std::string> ids = {
        "claim-ab",        "claim-planes",   "claim-planes-directed", "census-44",        "census-double3",
        "addtofilled-3",   "addtofilled-5",  "nonewinfilled-3",       "theorem-small-3",  "theorem-small-5",
        "theorem-small-7",
    };
    return ids;
}

EnumerationReport run_claim(const std::string &claim_id, const VerifyOptions &options)
{
    if (claim_id == "claim-ab")
        return verify_claim_AB(options);
    if (claim_id == "claim-planes")
        return verify_claim_planes(options);
    if (claim_id == "claim-planes-directed")
        return verify_plane_types_embed(options);
    if (claim_id == "census-44")
        return census_sesquialteral_3d(options);
    if (claim_id == "census-double3")
        return census_double_perm_3d_positive(options);
    if (claim_id == "addtofilled-3")
        return verify_addtofilled(3, options);
    if (claim_id == "addtofilled-5")
        return verify_addtofilled(5, options);
    if (claim_id == "nonewinfilled-3")
        return verify_nonewinfilled_base(options);
    if (claim_id == "theorem-small-3")
        return verify_theorem_small(3, options);
    if (claim_id == "theorem-small-5")
        return verify_theorem_small(5, options);
    if (claim_id == "theorem-small-7")
        return verify_theorem_small(7, options);
    throw MalformedInput("unknown claim id '" + claim_id + "'");
}

namespace {

bool is_canonical(const SupportSet &s)
{
    return canonical_form(s) == s;
}

bool is_diagonal_support(const SupportSet &s)
{
    if (static_cast<int>(s.count()) != s.shape().n())
        return false;
    Diagonal diag{s.indices()};
    return is_diagonal(s.shape(), diag);
}

int longest_line(const SupportSet &s)
{
    int best = 0;
    for (int dir = 0; dir < s.shape().d(); ++dir)
        s.for_each([&](std::size_t off) { best = std::max(best, s.line_count(off, dir)); });
    return best;
}

// Per-claim check of one certificate; empty string when it holds.
std::string check_certificate(const EnumerationReport &r, const Certificate &c)
{
    const std::string &id = r.claim_id;
    const auto &s = c.supports;
    auto need = [&](std::size_t k) { return s.size() == k ? std::string() : c.label + ": expected " + std::to_string(k) + " supports"; };

    if (id == "census-double3") {
        if (auto e = need(2); !e.empty())
            return e;
        if (!is_double_permutation_support(s[0]) || !s[1].is_subset_of(s[0]) || !is_diagonal_support(s[1]))
            return c.label + ": not a diagonal of a double permutation";
        return {};
    }
    if (id == "claim-ab") {
        if (auto e = need(4); !e.empty())
            return e;
        for (const auto &p : s)
            if (p.shape().d() != 2 || p.shape().n() != 4)
                return c.label + ": planes must be 2-dimensional of order 4";
        if (!realize_polystochastic(s[0]) || !realize_polystochastic(s[1]) || longest_line(s[0]) < 3 ||
            longest_line(s[1]) < 2 || !is_permutation_support(s[2]) || !is_permutation_support(s[3]))
            return c.label + ": planes do not have the required shape";
        if (has_positive_diagonal(stack_hyperplanes(s, 0)).positive())
            return c.label + ": stacked support has a diagonal";
        return {};
    }
    if (id == "claim-planes" || id == "claim-planes-directed") {
        if (auto e = need(4); !e.empty())
            return e;
        for (const auto &p : s)
            if (p.shape().d() != 3 || p.shape().n() != 4 || !realize_sesquialteral(p))
                return c.label + ": hyperplanes must be sesquialteral supports";
        if (id == "claim-planes" && !std::binary_search(r.representatives.begin(), r.representatives.end(), s[0]))
            return c.label + ": first hyperplane is not a representative";
        if (id == "claim-planes-directed") {
            const auto types = catalog_plane_types();
            const auto it = std::find_if(types.begin(), types.end(),
                                         [&](const CatalogEntry &t) { return c.label == "type-" + t.label; });
            if (it == types.end() || !equivalent(s[0], it->support))
                return c.label + ": first hyperplane does not have the labelled type";
        }
        if (has_positive_diagonal(stack_hyperplanes(s, 0)).positive())
            return c.label + ": stacked support has a diagonal";
        return {};
    }
    if (id.rfind("addtofilled-", 0) == 0) {
        if (auto e = need(1); !e.empty())
            return e;
        if (!is_diagonal_support(s[0]))
            return c.label + ": not a diagonal";
        const SupportSet outside = s[0] - m4d(s[0].shape().d());
        if (outside.count() != 1)
            return c.label + ": expected exactly one cell outside m4d";
        const auto idx = outside.indices().front();
        if (std::accumulate(idx.coords.begin(), idx.coords.end(), 0) % 4 != 2)
            return c.label + ": added cell does not have coordinate sum 2 mod 4";
        return {};
    }
    if (id == "nonewinfilled-3") {
        if (s.size() < 2)
            return c.label + ": expected at least two members";
        SupportSet joint(s[0].shape());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (!equivalent_to_m4d(s[i]))
                return c.label + ": members must be permutations equivalent to m4d";
            for (std::size_t j = 0; j < i; ++j)
                if (s[i] == s[j])
                    return c.label + ": members must be distinct";
            joint |= s[i];
        }
        if (!std::binary_search(r.representatives.begin(), r.representatives.end(), canonical_form(joint)))
            return c.label + ": union is not among the representatives";
        return {};
    }
    if (id.rfind("theorem-small-", 0) == 0) {
        if (auto e = need(1); !e.empty())
            return e;
        if (!is_diagonal_support(s[0]) || !s[0].is_subset_of(m4d(s[0].shape().d())))
            return c.label + ": not a diagonal of m4d";
        return {};
    }
    return c.label + ": claim has no certificates";
}

std::string check_representative(const EnumerationReport &r, const SupportSet &rep)
{
    const std::string &id = r.claim_id;
    if (!is_canonical(rep))
        return "representative " + rep.to_string() + " is not canonical";
    if (id == "census-44" && !realize_sesquialteral(rep))
        return "representative " + rep.to_string() + " is not sesquialteral";
    if (id == "census-double3" && (!is_double_permutation_support(rep) || !has_positive_diagonal(rep).positive()))
        return "representative " + rep.to_string() + " is not a positive double permutation";
    if (id == "claim-ab" && (!realize_polystochastic(rep) || longest_line(rep) < 3))
        return "representative " + rep.to_string() + " is not polystochastic with a line of three";
    if ((id == "claim-planes" || id == "claim-planes-directed") && !realize_sesquialteral(rep))
        return "representative " + rep.to_string() + " is not sesquialteral";
    return {};
}

} // namespace

std::string replay_report(const EnumerationReport &report)
{
    const auto &ids = claim_ids();
    if (std::find(ids.begin(), ids.end(), report.claim_id) == ids.end())
        return "unknown claim id '" + report.claim_id + "'";
    if (!std::is_sorted(report.representatives.begin(), report.representatives.end()) ||
        std::adjacent_find(report.representatives.begin(), report.representatives.end()) !=
            report.representatives.end())
        return "representatives are not sorted and duplicate-free";
    for (const auto &rep : report.representatives)
        if (auto e = check_representative(report, rep); !e.empty())
            return e;
    for (const auto &c : report.certificates)
        if (auto e = check_certificate(report, c); !e.empty())
            return e;
    return {};
}

} // namespace polyperm
