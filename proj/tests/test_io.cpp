#include "generators.hpp"

#include "polyperm/block.hpp"
#include "polyperm/claims.hpp"
#include "polyperm/errors.hpp"
#include "polyperm/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <unistd.h>

using namespace polyperm;

namespace {

std::filesystem::path scratch_path(const std::string &name)
{
    const auto dir = std::filesystem::temp_directory_path() / ("polyperm-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    return dir / name;
}

} // namespace

TEST_CASE("support file golden text")
{
    const SupportSet s(Shape(2, 4), {{3, 1}, {0, 2}});
    CHECK(write_support(s) == "polysupp 1\nd=2 n=4\n0,2\n3,1\n");
    CHECK(write_support_inline(s) == "polysupp 1;d=2 n=4;0,2;3,1");
    CHECK(parse_support(write_support(s)) == s);
    CHECK(parse_support_inline(write_support_inline(s)) == s);
    CHECK(write_support(SupportSet(Shape(3, 4))) == "polysupp 1\nd=3 n=4\n");
    CHECK(parse_support("polysupp 1\nd=3 n=4\n") == SupportSet(Shape(3, 4)));
}

TEST_CASE("support files round-trip byte for byte")
{
    std::mt19937_64 rng(91);
    for (int round = 0; round < 50; ++round) {
        const int d = 1 + round % 5;
        const SupportSet s = testgen::random_support(Shape(d, 2 + round % 4), rng, 0.3);
        const std::string text = write_support(s);
        const SupportSet back = parse_support(text);
        CHECK(back == s);
        CHECK(write_support(back) == text);
    }
}

TEST_CASE("malformed support files")
{
    CHECK_THROWS_AS(parse_support(""), ParseError);
    CHECK_THROWS_AS(parse_support("polysupp 2\nd=2 n=4\n"), ParseError);
    CHECK_THROWS_AS(parse_support("polysupp 1\nd=2\n"), ParseError);
    CHECK_THROWS_AS(parse_support("polysupp 1\nd=0 n=4\n"), ParseError);
    CHECK_THROWS_AS(parse_support("polysupp 1\nd=2 n=4\n0,4\n"), ParseError);
    CHECK_THROWS_AS(parse_support("polysupp 1\nd=2 n=4\n0,1,2\n"), ParseError);
    CHECK_THROWS_AS(parse_support("polysupp 1\nd=2 n=4\n1,1\n0,0\n"), ParseError);
    CHECK_THROWS_AS(parse_support("polysupp 1\nd=2 n=4\n0,0\n0,0\n"), ParseError);
    CHECK_THROWS_AS(parse_support("polysupp 1\nd=2 n=4\n0,0\n\n"), ParseError);
    CHECK_THROWS_AS(parse_support("polysupp 1\nd=2 n=4\n0,x\n"), ParseError);
}

TEST_CASE("matrix files")
{
    const HyperMatrix l = l4d_member(3, Rational(1, 3));
    const std::string text = write_matrix(l);
    CHECK(text.starts_with("polymat 1\nd=3 n=4\n1/3 2/3 0 0\n"));
    const HyperMatrix back = parse_matrix(text);
    CHECK(back == l);
    CHECK(write_matrix(back) == text);
    // Any whitespace layout and unreduced fractions are accepted.
    CHECK(parse_matrix("polymat 1\nd=1 n=2\n2/4    1/2") == HyperMatrix(Shape(1, 2), {Rational(1, 2), Rational(1, 2)}));
    CHECK_THROWS_AS(parse_matrix("polymat 1\nd=1 n=2\n1"), ParseError);
    CHECK_THROWS_AS(parse_matrix("polymat 1\nd=1 n=2\n1 -1"), ParseError);
    CHECK_THROWS_AS(parse_matrix("polysupp 1\nd=1 n=2\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("polymat 1\nd=1 n=2\n1 a"), ParseError);
}

TEST_CASE("reports round-trip byte for byte")
{
    EnumerationReport r;
    r.claim_id = "example";
    r.status = ClaimStatus::budget_exhausted;
    r.representatives = {m4d(3), l4d_partner(3)};
    r.normalize();
    r.counts = {{"b", 2}, {"a", -1}};
    r.search_stats = {{"nodes", 18446744073709551615ull}};
    r.config = {{"node_budget", "0"}};
    r.certificates = {{"pair", {m4d(2), SupportSet(Shape(2, 4))}}};
    r.notes = {"first \"quoted\" note"};
    const std::string text = write_report(r);
    const EnumerationReport back = parse_report(text);
    CHECK(back.claim_id == r.claim_id);
    CHECK(back.status == r.status);
    CHECK(back.representatives == r.representatives);
    CHECK(back.counts == r.counts);
    CHECK(back.search_stats == r.search_stats);
    CHECK(back.config == r.config);
    CHECK(back.certificates == r.certificates);
    CHECK(back.notes == r.notes);
    CHECK(write_report(back) == text);
    // Fixed key order; the wall time is not serialized.
    const auto pos = [&](const char *key) { return text.find(std::string("\"") + key + "\""); };
    CHECK(pos("claimId") < pos("status"));
    CHECK(pos("status") < pos("representatives"));
    CHECK(pos("representatives") < pos("counts"));
    CHECK(pos("counts") < pos("searchStats"));
    CHECK(pos("searchStats") < pos("configEcho"));
    CHECK(pos("configEcho") < pos("certificates"));
    CHECK(pos("certificates") < pos("notes"));
    CHECK(text.find("elapsed") == std::string::npos);
}

TEST_CASE("claim reports round-trip and replay")
{
    const auto r = verify_addtofilled(3);
    const auto back = parse_report(write_report(r));
    CHECK(write_report(back) == write_report(r));
    CHECK(replay_report(back).empty());
}

TEST_CASE("malformed reports")
{
    CHECK_THROWS_AS(parse_report("{"), ParseError);
    CHECK_THROWS_AS(parse_report("{}"), ParseError);
    CHECK_THROWS_AS(parse_report(R"({"claimId":"x","status":"maybe","representatives":[],"counts":{},)"
                                 R"("searchStats":{},"configEcho":{},"certificates":[],"notes":[]})"),
                    ParseError);
}

TEST_CASE("file checkpoint persists and resumes")
{
    const auto path = scratch_path("checkpoint.log");
    std::filesystem::remove(path);
    {
        FileCheckpoint cp(path);
        CHECK(cp.loaded() == 0);
        cp.record("unit-a", "none 12");
        cp.record("unit-b", "admits 1 2 3 40");
        CHECK(cp.lookup("unit-a") == std::optional<std::string>("none 12"));
        CHECK_FALSE(cp.lookup("unit-c"));
        CHECK_THROWS_AS(cp.record("bad id", "x"), MalformedInput);
        CHECK_THROWS_AS(cp.record("id", "two\nlines"), MalformedInput);
    }
    CHECK(read_file(path) == "unit-a none 12\nunit-b admits 1 2 3 40\n");
    // A torn last line from an interrupted write is dropped on open.
    {
        std::string text = read_file(path) + "unit-c bud";
        write_file(path, text);
    }
    {
        FileCheckpoint cp(path);
        CHECK(cp.loaded() == 2);
        CHECK(cp.lookup("unit-b") == std::optional<std::string>("admits 1 2 3 40"));
        CHECK_FALSE(cp.lookup("unit-c"));
        cp.record("unit-c", "budget 5");
    }
    CHECK(read_file(path) == "unit-a none 12\nunit-b admits 1 2 3 40\nunit-c budget 5\n");
    std::filesystem::remove_all(path.parent_path());
}

TEST_CASE("file helpers")
{
    CHECK_THROWS_AS(read_file("/nonexistent/dir/file"), ParseError);
    CHECK_THROWS(write_file("/nonexistent/dir/file", "x"));
}
