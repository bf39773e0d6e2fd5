#include "polyperm/block.hpp"
#include "polyperm/claims.hpp"
#include "polyperm/errors.hpp"
#include "polyperm/io.hpp"
#include "polyperm/permanent.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

using namespace polyperm;

namespace {

constexpr int exit_confirmed = 0;
constexpr int exit_refuted = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

/// Usage errors detected after CLI11 has accepted the command line.
struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

int exit_code(ClaimStatus s)
{
    switch (s) {
    case ClaimStatus::confirmed:
        return exit_confirmed;
    case ClaimStatus::refuted:
        return exit_refuted;
    case ClaimStatus::budget_exhausted:
        return exit_budget;
    }
    return exit_usage;
}

void emit(const std::string &text, const std::string &out_path)
{
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

int default_threads()
{
    const char *env = std::getenv("POLYPERM_THREADS");
    if (!env || !*env)
        return 1;
    try {
        std::size_t used = 0;
        const int v = std::stoi(env, &used);
        if (used == std::string(env).size() && v >= 1)
            return v;
    } catch (const std::exception &) {
    }
    throw UsageError("POLYPERM_THREADS must be a positive integer");
}

/// Lambda values over the parity-s vectors, bit k of the hex number giving the k-th value.
std::vector<std::uint8_t> lambda_from_hex(const std::string &hex, int d)
{
    const std::size_t count = std::size_t{1} << (d - 1);
    std::vector<std::uint8_t> bits(count, 0);
    std::size_t bit = 0;
    for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
        const char c = *it;
        int v;
        if (c >= '0' && c <= '9')
            v = c - '0';
        else if (c >= 'a' && c <= 'f')
            v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F')
            v = c - 'A' + 10;
        else
            throw UsageError("--lambda-bits must be hexadecimal");
        for (int k = 0; k < 4; ++k)
            if ((v >> k) & 1) {
                if (bit + static_cast<std::size_t>(k) >= count)
                    throw UsageError("--lambda-bits has bits beyond the " + std::to_string(count) + " lambda values");
                bits[bit + static_cast<std::size_t>(k)] = 1;
            }
    }
    return bits;
}

struct GenArgs
{
    std::string kind;
    int d = 3;
    std::string lambda = "1/2";
    std::vector<int> eps;
    int s = 0;
    std::string lambda_bits = "0";
    std::string out;
};

int run_gen(const GenArgs &a)
{
    if (a.d < 1 || a.d > 12)
        throw UsageError("--d must lie in 1..12");
    if (a.kind == "m4") {
        emit(write_support(m4d(a.d)), a.out);
    } else if (a.kind == "l4") {
        emit(write_matrix(l4d_member(a.d, parse_rational(a.lambda))), a.out);
    } else {
        if (static_cast<int>(a.eps.size()) != a.d)
            throw UsageError("--eps needs one partition label per position");
        const auto params = make_block_params(a.eps, a.s, lambda_from_hex(a.lambda_bits, a.d));
        emit(write_support(block_permutation(params)), a.out);
    }
    return 0;
}

struct PerArgs
{
    std::string file;
    bool positivity = false;
    bool exact = false;
};

int run_per(const PerArgs &a)
{
    if (!a.positivity && !a.exact)
        throw UsageError("per needs --positivity or --exact");
    const std::string text = read_file(a.file);
    const bool is_matrix = text.starts_with("polymat");
    if (a.exact) {
        const HyperMatrix m = is_matrix ? parse_matrix(text) : HyperMatrix::indicator(parse_support(text));
        try {
            std::cout << to_string(permanent_exact(m).value) << "\n";
        } catch (const CapacityError &e) {
            std::cerr << "budget exhausted: " << e.what() << "\n";
            return exit_budget;
        }
        return 0;
    }
    const SupportSet s = is_matrix ? parse_matrix(text).support() : parse_support(text);
    const auto w = has_positive_diagonal(s);
    std::cout << (w.diagonal ? w.diagonal->to_string() : std::string("none")) << "\n";
    return 0;
}

struct VerifyArgs
{
    std::string claim;
    std::optional<int> threads;
    std::uint64_t node_budget = 0;
    std::string checkpoint;
    std::string out;
    std::string replay;
    std::string format = "text";
};

void print_summary(const EnumerationReport &r)
{
    std::cout << r.claim_id << ": " << to_string(r.status) << "\n";
    for (const auto &[k, v] : r.counts)
        std::cout << "  " << k << " = " << v << "\n";
    for (const auto &[k, v] : r.search_stats)
        std::cout << "  " << k << " = " << v << "\n";
    for (const auto &note : r.notes)
        std::cout << "  note: " << note << "\n";
    std::cout << "  representatives: " << r.representatives.size() << ", certificates: " << r.certificates.size()
              << ", elapsed " << r.elapsed.count() << " ms\n";
}

int run_replay(const VerifyArgs &a)
{
    const EnumerationReport r = parse_report(read_file(a.replay));
    const std::string failure = replay_report(r);
    if (failure.empty()) {
        std::cout << r.claim_id << ": replay ok (" << r.representatives.size() << " representatives, "
                  << r.certificates.size() << " certificates, recorded status " << to_string(r.status) << ")\n";
        return 0;
    }
    std::cout << r.claim_id << ": replay failed: " << failure << "\n";
    return 1;
}

int run_verify(const VerifyArgs &a)
{
    if (!a.replay.empty())
        return run_replay(a);
    if (a.claim.empty())
        throw UsageError("verify needs a claim id or --replay");
    const auto &ids = claim_ids();
    if (std::find(ids.begin(), ids.end(), a.claim) == ids.end())
        throw UsageError("unknown claim id '" + a.claim + "'");
    VerifyOptions options;
    options.threads = a.threads ? *a.threads : default_threads();
    if (options.threads < 1)
        throw UsageError("--threads must be at least 1");
    options.node_budget = a.node_budget;
    std::unique_ptr<FileCheckpoint> checkpoint;
    if (!a.checkpoint.empty()) {
        checkpoint = std::make_unique<FileCheckpoint>(a.checkpoint);
        options.checkpoint = checkpoint.get();
    }
    const EnumerationReport r = run_claim(a.claim, options);
    const std::string doc = write_report(r);
    if (!a.out.empty())
        write_file(a.out, doc);
    if (a.format == "json" && a.out.empty())
        std::cout << doc;
    else
        print_summary(r);
    return exit_code(r.status);
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Permanents of polystochastic matrices of order 4: generators, positivity and claim verification"};
    app.require_subcommand(1);

    GenArgs gen;
    auto *gen_cmd = app.add_subcommand("gen", "Write a support or matrix file");
    gen_cmd->add_option("kind", gen.kind, "m4 (support), l4 (matrix) or block (support)")
        ->required()
        ->check(CLI::IsMember({"m4", "l4", "block"}));
    gen_cmd->add_option("--d", gen.d, "Dimension")->required();
    gen_cmd->add_option("--lambda", gen.lambda, "Convex weight of m4 in the l4 member, 0 < lambda < 1");
    gen_cmd->add_option("--eps", gen.eps, "Partition labels (1..3) of positions 1..d, comma-separated")
        ->delimiter(',');
    gen_cmd->add_option("--s", gen.s, "Parity bit of the filled subcubes")->check(CLI::Range(0, 1));
    gen_cmd->add_option("--lambda-bits", gen.lambda_bits,
                        "Hex mask: bit k is lambda on the k-th subcube of parity s (increasing label order)");
    gen_cmd->add_option("--out", gen.out, "Output file (default: stdout)");

    PerArgs per;
    auto *per_cmd = app.add_subcommand("per", "Positivity or exact value of the permanent");
    per_cmd->add_option("file", per.file, "polysupp or polymat file")->required();
    auto *pos_flag = per_cmd->add_flag("--positivity", per.positivity, "Print a positive diagonal or 'none'");
    auto *exact_flag = per_cmd->add_flag("--exact", per.exact, "Print the exact permanent");
    pos_flag->excludes(exact_flag);

    VerifyArgs verify;
    auto *verify_cmd = app.add_subcommand("verify", "Run a claim verifier and write its report");
    verify_cmd->add_option("claim", verify.claim, "Claim id (see 'claims')");
    verify_cmd->add_option("--threads", verify.threads, "Worker threads (default: POLYPERM_THREADS or 1)")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--node-budget", verify.node_budget, "Search nodes per work unit, 0 = unlimited");
    verify_cmd->add_option("--checkpoint", verify.checkpoint, "Append-only resume log");
    verify_cmd->add_option("--out", verify.out, "Report file");
    verify_cmd->add_option("--replay", verify.replay, "Re-check the certificates of an existing report");
    verify_cmd->add_option("--format", verify.format, "Console output: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto *claims_cmd = app.add_subcommand("claims", "List the claim ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*gen_cmd)
            return run_gen(gen);
        if (*per_cmd)
            return run_per(per);
        if (*verify_cmd)
            return run_verify(verify);
        if (*claims_cmd) {
            for (const auto &id : claim_ids())
                std::cout << id << "\n";
            return 0;
        }
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_usage;
    } catch (const ShapeError &e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return exit_usage;
    } catch (const MalformedInput &e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return exit_usage;
    } catch (const CapacityError &e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return exit_budget;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return exit_usage;
}
