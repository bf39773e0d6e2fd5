#pragma once

#include "polyperm/support_set.hpp"

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polyperm {

enum class ClaimStatus
{
    confirmed,
    refuted,
    budget_exhausted
};

const char *to_string(ClaimStatus s);
/// Throws ParseError on an unknown name.
ClaimStatus parse_claim_status(const std::string &name);

/// A named tuple of supports that re-checks in isolation (a zero-permanent configuration, a
/// diagonal, a completion...). The meaning of the supports depends on the claim.
struct Certificate
{
    std::string label;
    std::vector<SupportSet> supports;

    friend bool operator==(const Certificate &, const Certificate &) = default;
};

/// Outcome of one enumeration. Everything except `elapsed` is a deterministic function of the
/// search-relevant options, so two runs with different thread counts serialize identically.
struct EnumerationReport
{
    std::string claim_id;
    ClaimStatus status = ClaimStatus::confirmed;
    /// Canonical forms, sorted and duplicate-free.
    std::vector<SupportSet> representatives;
    std::map<std::string, std::int64_t> counts;
    std::map<std::string, std::uint64_t> search_stats;
    /// Echo of the options that influence the result.
    std::map<std::string, std::string> config;
    std::vector<Certificate> certificates;
    /// Findings in plain words, one per entry.
    std::vector<std::string> notes;
    /// Wall time; not part of the serialized report.
    std::chrono::milliseconds elapsed{0};

    /// Sorts and deduplicates the representatives.
    void normalize();
};

/// Append-only record of finished work units; a unit id maps to its serialized result.
class CheckpointSink
{
public:
    virtual ~CheckpointSink() = default;
    /// Result recorded for the unit by an earlier run, if any.
    virtual std::optional<std::string> lookup(const std::string &unit_id) const = 0;
    /// Durably records the unit's result. May be called from several worker threads.
    virtual void record(const std::string &unit_id, const std::string &result) = 0;
};

struct VerifyOptions
{
    /// Worker threads, at least 1.
    int threads = 1;
    /// Search nodes allowed per work unit; 0 means unlimited.
    std::uint64_t node_budget = 0;
    /// Optional resume log.
    CheckpointSink *checkpoint = nullptr;
};

} // namespace polyperm
