#pragma once

#include "polyperm/hypermatrix.hpp"
#include "polyperm/report.hpp"
#include "polyperm/support_set.hpp"

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

namespace polyperm {

/// Support file: `polysupp 1`, `d=<d> n=<n>`, then one index per line ("0,1,3"), sorted.
std::string write_support(const SupportSet &s);
/// Throws ParseError on anything that is not a well-formed support file.
SupportSet parse_support(std::string_view text);

/// The same content on one line, the file lines joined by ';' (used inside reports).
std::string write_support_inline(const SupportSet &s);
SupportSet parse_support_inline(std::string_view text);

/// Matrix file: `polymat 1`, `d=<d> n=<n>`, then n^d rationals, one line of the last position per row.
std::string write_matrix(const HyperMatrix &m);
/// Accepts any whitespace between entries. Throws ParseError.
HyperMatrix parse_matrix(std::string_view text);

/// A single JSON document with a fixed key order; the wall time is left out.
std::string write_report(const EnumerationReport &r);
/// Throws ParseError.
EnumerationReport parse_report(std::string_view text);

/// Whole file as a string. Throws ParseError when it cannot be read.
std::string read_file(const std::filesystem::path &path);
/// Replaces the file contents. Throws std::runtime_error on I/O failure.
void write_file(const std::filesystem::path &path, std::string_view contents);

/// Append-only checkpoint log of `<unit-id> <status>` lines, flushed to disk on every record.
/// Existing lines are loaded on open; a torn final line (no newline) is ignored.
class FileCheckpoint : public CheckpointSink
{
public:
    /// Creates the file when missing. Throws std::runtime_error when it cannot be opened.
    explicit FileCheckpoint(std::filesystem::path path);
    ~FileCheckpoint() override;
    FileCheckpoint(const FileCheckpoint &) = delete;
    FileCheckpoint &operator=(const FileCheckpoint &) = delete;

    std::optional<std::string> lookup(const std::string &unit_id) const override;
    void record(const std::string &unit_id, const std::string &result) override;

    /// Units loaded from the file when it was opened.
    std::size_t loaded() const { return loaded_; }

private:
    std::filesystem::path path_;
    int fd_ = -1;
    std::size_t loaded_ = 0;
    mutable std::mutex mutex_;
    std::map<std::string, std::string> done_;
};

} // namespace polyperm
