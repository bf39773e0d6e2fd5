#include "polyperm/io.hpp"

#include "polyperm/errors.hpp"

#include <json.hpp>

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <charconv>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace polyperm {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

int parse_int(std::string_view s, const char *what)
{
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError(std::string("bad ") + what + ": '" + std::string(s) + "'");
    return v;
}

Shape parse_shape_line(std::string_view line)
{
    const auto parts = split(line, ' ');
    if (parts.size() != 2 || !parts[0].starts_with("d=") || !parts[1].starts_with("n="))
        throw ParseError("expected 'd=<d> n=<n>', got '" + std::string(line) + "'");
    const int d = parse_int(parts[0].substr(2), "dimension");
    const int n = parse_int(parts[1].substr(2), "order");
    try {
        return Shape(d, n);
    } catch (const std::exception &e) {
        throw ParseError(e.what());
    }
}

/// File lines without the final newline; a missing final newline is accepted.
std::vector<std::string_view> file_lines(std::string_view text)
{
    if (text.ends_with('\n'))
        text.remove_suffix(1);
    return split(text, '\n');
}

std::string index_line(const Index &idx)
{
    std::string out;
    for (int i = 0; i < idx.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(idx[i]);
    }
    return out;
}

SupportSet support_from_lines(const std::vector<std::string_view> &lines)
{
    if (lines.size() < 2 || lines[0] != "polysupp 1")
        throw ParseError("support file must start with 'polysupp 1'");
    const Shape shape = parse_shape_line(lines[1]);
    SupportSet out(shape);
    std::optional<std::size_t> previous;
    for (std::size_t k = 2; k < lines.size(); ++k) {
        const auto coords = split(lines[k], ',');
        if (static_cast<int>(coords.size()) != shape.d())
            throw ParseError("index '" + std::string(lines[k]) + "' does not have " + std::to_string(shape.d()) +
                             " coordinates");
        Index idx;
        for (auto c : coords) {
            const int v = parse_int(c, "coordinate");
            if (v < 0 || v >= shape.n())
                throw ParseError("coordinate out of range in '" + std::string(lines[k]) + "'");
            idx.coords.push_back(v);
        }
        const std::size_t off = offset_of(shape, idx);
        if (previous && *previous >= off)
            throw ParseError("indices are not strictly increasing at '" + std::string(lines[k]) + "'");
        previous = off;
        out.set(off);
    }
    return out;
}

Json certificate_json(const Certificate &c)
{
    Json supports = Json::array();
    for (const auto &s : c.supports)
        supports.push_back(write_support_inline(s));
    Json out = Json::object();
    out["label"] = c.label;
    out["supports"] = std::move(supports);
    return out;
}

} // namespace

std::string write_support(const SupportSet &s)
{
    std::string out = "polysupp 1\n" + s.shape().to_string() + "\n";
    for (const auto &idx : s.indices())
        out += index_line(idx) + "\n";
    return out;
}

SupportSet parse_support(std::string_view text)
{
    return support_from_lines(file_lines(text));
}

std::string write_support_inline(const SupportSet &s)
{
    std::string out = "polysupp 1;" + s.shape().to_string();
    for (const auto &idx : s.indices())
        out += ";" + index_line(idx);
    return out;
}

SupportSet parse_support_inline(std::string_view text)
{
    return support_from_lines(split(text, ';'));
}

std::string write_matrix(const HyperMatrix &m)
{
    const Shape &shape = m.shape();
    std::string out = "polymat 1\n" + shape.to_string() + "\n";
    const std::size_t n = static_cast<std::size_t>(shape.n());
    for (std::size_t off = 0; off < shape.cell_count(); ++off) {
        out += to_string(m.at(off));
        out += (off + 1) % n == 0 ? '\n' : ' ';
    }
    return out;
}

HyperMatrix parse_matrix(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string magic, version, dpart, npart;
    if (!(in >> magic >> version) || magic != "polymat" || version != "1")
        throw ParseError("matrix file must start with 'polymat 1'");
    if (!(in >> dpart >> npart))
        throw ParseError("missing 'd=<d> n=<n>' line");
    const Shape shape = parse_shape_line(dpart + " " + npart);
    std::vector<Rational> entries;
    entries.reserve(shape.cell_count());
    std::string token;
    while (in >> token)
        entries.push_back(parse_rational(token));
    if (entries.size() != shape.cell_count())
        throw ParseError("expected " + std::to_string(shape.cell_count()) + " entries, got " +
                         std::to_string(entries.size()));
    try {
        return HyperMatrix(shape, std::move(entries));
    } catch (const std::exception &e) {
        throw ParseError(e.what());
    }
}

std::string write_report(const EnumerationReport &r)
{
    Json doc = Json::object();
    doc["claimId"] = r.claim_id;
    doc["status"] = to_string(r.status);
    Json reps = Json::array();
    for (const auto &s : r.representatives)
        reps.push_back(write_support_inline(s));
    doc["representatives"] = std::move(reps);
    doc["counts"] = Json::object();
    for (const auto &[k, v] : r.counts)
        doc["counts"][k] = v;
    doc["searchStats"] = Json::object();
    for (const auto &[k, v] : r.search_stats)
        doc["searchStats"][k] = v;
    doc["configEcho"] = Json::object();
    for (const auto &[k, v] : r.config)
        doc["configEcho"][k] = v;
    Json certs = Json::array();
    for (const auto &c : r.certificates)
        certs.push_back(certificate_json(c));
    doc["certificates"] = std::move(certs);
    doc["notes"] = r.notes;
    return doc.dump(2) + "\n";
}

EnumerationReport parse_report(std::string_view text)
{
    try {
        const Json doc = Json::parse(text);
        EnumerationReport r;
        r.claim_id = doc.at("claimId").get<std::string>();
        r.status = parse_claim_status(doc.at("status").get<std::string>());
        for (const auto &s : doc.at("representatives"))
            r.representatives.push_back(parse_support_inline(s.get<std::string>()));
        for (const auto &[k, v] : doc.at("counts").items())
            r.counts[k] = v.get<std::int64_t>();
        for (const auto &[k, v] : doc.at("searchStats").items())
            r.search_stats[k] = v.get<std::uint64_t>();
        for (const auto &[k, v] : doc.at("configEcho").items())
            r.config[k] = v.get<std::string>();
        for (const auto &c : doc.at("certificates")) {
            Certificate cert{c.at("label").get<std::string>(), {}};
            for (const auto &s : c.at("supports"))
                cert.supports.push_back(parse_support_inline(s.get<std::string>()));
            r.certificates.push_back(std::move(cert));
        }
        r.notes = doc.at("notes").get<std::vector<std::string>>();
        return r;
    } catch (const Json::exception &e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
}

std::string read_file(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path &path, std::string_view contents)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
}

FileCheckpoint::FileCheckpoint(std::filesystem::path path) : path_(std::move(path))
{
    if (std::filesystem::exists(path_)) {
        const std::string text = read_file(path_);
        std::size_t start = 0;
        for (std::size_t nl; (nl = text.find('\n', start)) != std::string::npos; start = nl + 1) {
            const std::string_view line(text.data() + start, nl - start);
            const auto space = line.find(' ');
            if (space == 0 || space == std::string_view::npos)
                continue;
            done_[std::string(line.substr(0, space))] = std::string(line.substr(space + 1));
        }
        loaded_ = done_.size();
        if (start != text.size())
            std::filesystem::resize_file(path_, start);
    }
    fd_ = ::open(path_.c_str(), O_WRONLY | O_APPEND | O_CREAT | O_CLOEXEC, 0644);
    if (fd_ < 0)
        throw std::runtime_error("cannot open checkpoint " + path_.string() + ": " + std::strerror(errno));
}

FileCheckpoint::~FileCheckpoint()
{
    if (fd_ >= 0)
        ::close(fd_);
}

std::optional<std::string> FileCheckpoint::lookup(const std::string &unit_id) const
{
    std::lock_guard lock(mutex_);
    const auto it = done_.find(unit_id);
    if (it == done_.end())
        return std::nullopt;
    return it->second;
}

void FileCheckpoint::record(const std::string &unit_id, const std::string &result)
{
    if (unit_id.empty() || unit_id.find_first_of(" \n") != std::string::npos || result.find('\n') != std::string::npos)
        throw MalformedInput("checkpoint entries must be single-line with a space-free unit id");
    const std::string line = unit_id + " " + result + "\n";
    std::lock_guard lock(mutex_);
    std::size_t written = 0;
    while (written < line.size()) {
        const auto k = ::write(fd_, line.data() + written, line.size() - written);
        if (k < 0) {
            if (errno == EINTR)
                continue;
            throw std::runtime_error("checkpoint write failed: " + std::string(std::strerror(errno)));
        }
        written += static_cast<std::size_t>(k);
    }
    if (::fsync(fd_) != 0)
        throw std::runtime_error("checkpoint fsync failed: " + std::string(std::strerror(errno)));
    done_[unit_id] = result;
}

} // namespace polyperm
