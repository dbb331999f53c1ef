// permpat: command-line front end for pattern detection, counting and the
// two hardness constructions.
//
// Exit status: 0 success, 1 verification or --expect failure, 2 usage or
// input error. Reports go to stdout (json by default), diagnostics to stderr.

#include "permpat/acceptance.hpp"
#include "permpat/gap_reduction.hpp"
#include "permpat/io.hpp"
#include "permpat/matching.hpp"
#include "permpat/psi_reduction.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace permpat;
using io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string format = "json";
    std::string pattern;
    std::string text;
    std::vector<std::string> positional;
    std::string mode = "exact";
    std::string expect;
    std::string epsilon = "1/3";
    std::string n;
    std::size_t k = 1;
    std::uint64_t alpha = 1;
    std::size_t cap = 1'000'000;
    bool left_aligned = false;
    std::string instance_file;
    std::string scale = "quick";
};

class Report {
public:
    explicit Report(std::string command) : command_(std::move(command)), start_(std::chrono::steady_clock::now()) {}

    json inputs = json::object();
    json result = json::object();

    void print(const std::string& format) const
    {
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
        if (format == "plain") {
            std::cout << "command: " << command_ << '\n';
            for (const auto& [key, value] : inputs.items())
                std::cout << "input." << key << ": " << plain(value) << '\n';
            for (const auto& [key, value] : result.items())
                std::cout << key << ": " << plain(value) << '\n';
            std::cout << "elapsed_ms: " << ms << '\n';
            return;
        }
        json doc{{"command", command_}, {"inputs", inputs}, {"result", result}, {"elapsed_ms", ms}};
        std::cout << doc.dump(2) << '\n';
    }

private:
    static std::string plain(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

    std::string command_;
    std::chrono::steady_clock::time_point start_;
};

// --pattern/--text win; otherwise the first two positional words (a literal
// "in" between them is skipped, so "detect 312 in 24153" works).
std::pair<Permutation, Permutation> pattern_and_text(const Options& opt, bool need_pattern = true)
{
    std::vector<std::string> words;
    for (const auto& w : opt.positional)
        if (w != "in")
            words.push_back(w);
    std::string pattern = opt.pattern;
    std::string text = opt.text;
    std::size_t next = 0;
    if (need_pattern && pattern.empty() && next < words.size())
        pattern = words[next++];
    if (text.empty() && next < words.size())
        text = words[next++];
    if (need_pattern && pattern.empty())
        throw CLI::ValidationError("pattern", "a pattern is required (--pattern or positional)");
    if (text.empty())
        throw CLI::ValidationError("text", "a text is required (--text or positional)");
    return {need_pattern ? io::load_permutation(pattern) : Permutation{}, io::load_permutation(text)};
}

int finish_expect(const Options& opt, bool verdict)
{
    if (opt.expect.empty())
        return kExitOk;
    const bool wanted = opt.expect == "yes";
    if (verdict != wanted) {
        std::cerr << "expectation failed: expected " << opt.expect << ", got " << (verdict ? "yes" : "no") << '\n';
        return kExitFailed;
    }
    return kExitOk;
}

int cmd_detect(const Options& opt)
{
    const auto [pattern, text] = pattern_and_text(opt);
    Report report("detect");
    report.inputs = {{"pattern", pattern.to_string()}, {"text", text.to_string()}, {"left_aligned", opt.left_aligned}};
    const bool verdict = opt.left_aligned ? contains_left_aligned(pattern, text) : contains(pattern, text);
    report.result["contains"] = verdict;
    report.print(opt.format);
    return finish_expect(opt, verdict);
}

int cmd_count(const Options& opt)
{
    const bool inversions = opt.mode == "inversions";
    const auto [pattern, text] = pattern_and_text(opt, !inversions);
    Report report("count");
    report.inputs = {{"mode", opt.mode}, {"text", text.to_string()}};
    if (!inversions)
        report.inputs["pattern"] = pattern.to_string();

    int status = kExitOk;
    if (opt.mode == "exact") {
        report.result["count"] = to_decimal(count_copies(pattern, text));
    } else if (opt.mode == "naive") {
        report.result["count"] = to_decimal(count_copies_naive(pattern, text));
    } else if (inversions) {
        report.result["count"] = to_decimal(count_inversions(text));
    } else if (opt.mode == "approx") {
        report.result["estimate"] = to_decimal(approx_count(pattern, text));
    } else {
        const BigCount direct = count_left_aligned(pattern, text);
        const BigCount difference = count_left_aligned_by_difference(pattern, text);
        report.result["direct"] = to_decimal(direct);
        report.result["difference"] = to_decimal(difference);
        report.result["agree"] = direct == difference;
        if (direct != difference) {
            std::cerr << "left-aligned counts disagree\n";
            status = kExitFailed;
        }
    }
    report.print(opt.format);
    return status;
}

int cmd_psi(const Options& opt, const std::string& sub)
{
    const PsiInstance instance = io::load_psi_instance(opt.instance_file);
    Report report("psi " + sub);
    report.inputs = {{"instance", io::to_json(instance)}};
    if (sub == "build") {
        report.result = io::to_json(reduce_psi(instance));
        report.print(opt.format);
        return kExitOk;
    }
    const auto v = verify_reduction(instance);
    report.result = {{"psi_answer", v.psi_answer},
                     {"ppm_answer", v.ppm_answer},
                     {"agree", v.agree()},
                     {"pattern_length", v.pattern_length},
                     {"text_length", v.text_length}};
    if (v.witness)
        report.result["witness"] = *v.witness;
    report.print(opt.format);
    if (!v.agree()) {
        std::cerr << "reduction disagrees with brute-force PSI\n";
        return kExitFailed;
    }
    return kExitOk;
}

int gap_verify(const Options& opt, Report& report, const Permutation& pattern, const Permutation& text)
{
    const GapInstance core = build_core(pattern, text, opt.alpha, max_text_length_from_env());
    const bool left = contains_left_aligned(pattern, text);
    const BigCount total = count_copies(core.pattern, core.text);
    const BigCount touching = copies_touching_initial_block(core);
    report.result = io::to_json(core);
    report.result["source_left_aligned"] = left;
    report.result["total_copies"] = to_decimal(total);
    report.result["touching_initial_block"] = to_decimal(touching);

    json checks = json::array();
    bool ok = true;
    auto record = [&](const std::string& name, bool holds) {
        checks.push_back({{"name", name}, {"holds", holds}});
        ok = ok && holds;
    };
    for (const auto& c : check_size_bounds(BigCount(text.size()), pattern.size(), opt.alpha).checks)
        record(c.name, c.holds);
    if (left) {
        record("yes.count >= n^(alpha^2 k)",
               total >= big_pow(BigCount(text.size()), opt.alpha * opt.alpha * pattern.size()));
    } else {
        record("no.touching == 0", touching == 0);
        record("no.count <= binom(n-1, k')", total <= binomial(BigCount(text.size() - 1), core.k_prime));
    }
    if (core.initial_block_pattern_len >= 2) {
        const auto list = enumerate_embeddings(core.pattern, core.text, opt.cap, false);
        bool lemma = true;
        for (const auto& e : list.embeddings) {
            std::size_t in_block = 0;
            for (auto i : e.indices)
                in_block += i <= core.initial_block_text_len ? 1 : 0;
            lemma = lemma && in_block <= core.initial_block_pattern_len;
        }
        record("at most alpha*k initial-block positions", lemma);
        report.result["embeddings_checked"] = list.embeddings.size();
        report.result["embeddings_truncated"] = list.truncated;
    }
    report.result["checks"] = checks;
    report.result["all_hold"] = ok;
    return ok ? kExitOk : kExitFailed;
}

int cmd_gap(const Options& opt, const std::string& sub)
{
    Report report("gap " + sub);
    if (sub == "check-bounds") {
        const Rational eps = Rational::parse(opt.epsilon);
        const BigCount n = opt.n.empty() ? minimal_above_threshold_n(eps, opt.k) : parse_decimal(opt.n);
        report.inputs = {{"n", to_decimal(n)}, {"k", opt.k}, {"epsilon", eps.to_string()}};
        const auto bounds = check_bounds(n, opt.k, eps);
        report.result = io::to_json(bounds);
        report.result["alpha"] = alpha_for(eps);
        report.print(opt.format);
        return bounds.all_hold() ? kExitOk : kExitFailed;
    }

    const auto [pattern, text] = pattern_and_text(opt);
    report.inputs = {{"pattern", pattern.to_string()}, {"text", text.to_string()}};
    int status = kExitOk;
    if (sub == "build") {
        const Rational eps = Rational::parse(opt.epsilon);
        report.inputs["epsilon"] = eps.to_string();
        const auto params = gap_params(eps, pattern.size(), BigCount(text.size()));
        report.result = io::to_json(build_gap_instance(pattern, text, eps, max_text_length_from_env()));
        report.result["below_threshold"] = params.below_threshold;
    } else if (sub == "core") {
        report.inputs["alpha"] = opt.alpha;
        report.result = io::to_json(build_core(pattern, text, opt.alpha, max_text_length_from_env()));
    } else {
        report.inputs["alpha"] = opt.alpha;
        status = gap_verify(opt, report, pattern, text);
    }
    report.print(opt.format);
    return status;
}

int cmd_selfcheck(const Options& opt)
{
    const Scale scale = opt.scale == "full" ? Scale::full : Scale::quick;
    Report report("selfcheck");
    report.inputs = {{"scale", opt.scale}};
    json suites = json::array();
    bool ok = true;
    run_acceptance(scale, [&](const CriterionResult& r) {
        std::cerr << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title << " (" << r.cases
                  << " cases)" << (r.detail.empty() ? "" : " - " + r.detail) << '\n';
        suites.push_back({{"id", r.id},
                          {"title", r.title},
                          {"passed", r.passed},
                          {"cases", r.cases},
                          {"detail", r.detail}});
        ok = ok && r.passed;
    });
    report.result = {{"suites", suites}, {"all_passed", ok}};
    report.print(opt.format);
    return ok ? kExitOk : kExitFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"permpat: permutation pattern detection, counting and hardness-reduction gadgets"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "Report format")
        ->check(CLI::IsMember({"json", "plain"}))
        ->capture_default_str();

    auto add_pair = [&](CLI::App* cmd) {
        cmd->add_option("--pattern", opt.pattern, "Pattern: inline or a file");
        cmd->add_option("--text", opt.text, "Text: inline or a file");
        cmd->add_option("words", opt.positional, "Pattern and text as positional arguments");
    };

    auto* detect = app.add_subcommand("detect", "Decide whether the text contains the pattern");
    add_pair(detect);
    detect->add_flag("--left-aligned", opt.left_aligned, "Require the copy to start at the first text element");
    detect->add_option("--expect", opt.expect, "Exit 1 unless the verdict matches")
        ->check(CLI::IsMember({"yes", "no"}));

    auto* count = app.add_subcommand("count", "Count copies of the pattern");
    add_pair(count);
    count->add_option("--mode", opt.mode, "Counting mode")
        ->check(CLI::IsMember({"exact", "left", "inversions", "approx", "naive"}))
        ->capture_default_str();

    auto* psi = app.add_subcommand("psi", "Partitioned subgraph isomorphism gadget");
    psi->require_subcommand(1);
    for (const char* name : {"build", "verify"}) {
        auto* sub = psi->add_subcommand(name, std::string(name) == "build" ? "Dump the gadget"
                                                                            : "Compare gadget detection with brute force");
        sub->add_option("instance", opt.instance_file, "PSI instance JSON file")->required();
    }

    auto* gap = app.add_subcommand("gap", "Gap-producing inflation construction");
    gap->require_subcommand(1);
    auto* gap_build = gap->add_subcommand("build", "Build the gap instance for a given epsilon");
    add_pair(gap_build);
    gap_build->add_option("--epsilon", opt.epsilon, "epsilon as P/Q, 0 < epsilon < 1/2")->capture_default_str();
    auto* gap_core = gap->add_subcommand("core", "Build the inflation core for an explicit alpha");
    add_pair(gap_core);
    gap_core->add_option("--alpha", opt.alpha, "Inflation exponent")->check(CLI::PositiveNumber)->capture_default_str();
    auto* gap_bounds = gap->add_subcommand("check-bounds", "Evaluate the inequality chain exactly");
    gap_bounds->add_option("--n", opt.n, "Text length (decimal); default: smallest above-threshold n");
    gap_bounds->add_option("--k", opt.k, "Pattern length")->check(CLI::PositiveNumber)->capture_default_str();
    gap_bounds->add_option("--epsilon", opt.epsilon, "epsilon as P/Q")->capture_default_str();
    auto* gap_verify_cmd = gap->add_subcommand("verify", "Check the yes/no-case properties on the core");
    add_pair(gap_verify_cmd);
    gap_verify_cmd->add_option("--alpha", opt.alpha, "Inflation exponent")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    gap_verify_cmd->add_option("--cap", opt.cap, "Embedding enumeration cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* selfcheck = app.add_subcommand("selfcheck", "Run the acceptance suites");
    selfcheck->add_option("scale", opt.scale, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (detect->parsed())
            return cmd_detect(opt);
        if (count->parsed())
            return cmd_count(opt);
        if (psi->parsed())
            return cmd_psi(opt, psi->get_subcommands().front()->get_name());
        if (gap->parsed())
            return cmd_gap(opt, gap->get_subcommands().front()->get_name());
        if (selfcheck->parsed())
            return cmd_selfcheck(opt);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
