#include "cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trapeze/enumerate.hpp"
#include "trapeze/errors.hpp"
#include "trapeze/json_io.hpp"
#include "trapeze/verify.hpp"

namespace trapeze {

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

std::string join(const std::vector<std::size_t>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
}

void render_table(const AnalysisRecord& r, std::ostream& out) {
    auto row = [&](const std::string& key, const std::string& value) {
        out << key << std::string(key.size() < 16 ? 16 - key.size() : 1, ' ') << value << '\n';
    };
    auto yes = [](bool b) { return std::string(b ? "yes" : "no"); };
    row("word", r.word.str());
    row("alphabet size", std::to_string(r.alphabet_size));
    row("complexity", join(r.profile));
    row("R K L H", std::to_string(r.params.R) + " " + std::to_string(r.params.K) + " " +
                       std::to_string(r.params.L) + " " + std::to_string(r.params.H));
    row("minimal period", std::to_string(r.minimal_period));
    row("heart", r.heart.prefix.str() + " | " + r.heart.heart.str() + " | " + r.heart.suffix.str());
    row("GT", r.gt ? "yes (m=" + std::to_string(r.gt->m) + ", M=" + std::to_string(r.gt->M) + ")" : "no");
    row("triangular", r.triangular ? yes(*r.triangular) : "n/a");
    row("RK-condition", yes(r.rk_condition));
    row("rich", yes(r.rich));
    if (r.classification) {
        const auto& c = *r.classification;
        row("p | u | q", c.separation.p.str() + " | " + c.separation.separator.str() + " | " + c.separation.q.str());
        row("condition", to_string(c.condition) +
                             (c.reason != NonRichReason::None ? " (" + to_string(c.reason) + ")" : ""));
        row("form", c.matched_form ? form_tag(*c.matched_form) + " " + dump(form_params_json(*c.matched_form))
                                   : "none");
    }
}

void render_ascii(const std::vector<std::size_t>& c, std::ostream& out) {
    const std::size_t top = *std::max_element(c.begin(), c.end());
    for (std::size_t level = top; level >= 1; --level) {
        out << (level < 10 ? " " : "") << level << " |";
        for (std::size_t v : c) out << (v >= level ? " #" : "  ");
        out << '\n';
    }
    out << "   +" << std::string(2 * c.size(), '-') << '\n' << "    ";
    for (std::size_t n = 0; n < c.size(); ++n) out << ' ' << n % 10;
    out << '\n';
}

std::vector<std::string> read_lines(std::istream& in) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

VerificationReport merge_reports(const std::vector<VerificationReport>& runs) {
    VerificationReport merged = runs.front();
    for (std::size_t k = 1; k < runs.size(); ++k)
        for (std::size_t i = 0; i < merged.results.size(); ++i) {
            auto& into = merged.results[i];
            const auto& from = runs[k].results[i];
            into.words_checked += from.words_checked;
            into.failures += from.failures;
            into.passed = into.passed && from.passed;
            if (!into.counterexample) into.counterexample = from.counterexample;
        }
    return merged;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Factor complexity, GT-word and richness analysis of finite words", "trapeze"};
    app.require_subcommand(1);

    std::size_t jobs = 1;
    std::optional<std::size_t> k, n;
    bool canonical = false, ascii = false, from_stdin = false;
    std::string format = "json";
    std::vector<std::string> words;

    auto* analyze = app.add_subcommand("analyze", "Report complexity, parameters, heart and richness of words");
    analyze->add_option("words", words, "Words over a-z, A-Z");
    analyze->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
    analyze->add_flag("--stdin", from_stdin, "Read one word per line from standard input");

    auto* graph = app.add_subcommand("graph", "Emit the complexity graph n,C(n) as CSV");
    graph->add_option("words", words, "Words over a-z, A-Z");
    graph->add_flag("--ascii", ascii, "Also draw the graph");
    graph->add_flag("--stdin", from_stdin, "Read one word per line from standard input");

    auto add_spec_flags = [&](CLI::App* cmd) {
        cmd->add_option("-k,--alphabet", k, "Alphabet size (1-6)");
        cmd->add_option("-n,--max-length", n, "Maximum word length (1-16)");
        cmd->add_option("--jobs", jobs, "Worker threads")->envname("TRAPEZE_JOBS")->check(CLI::PositiveNumber);
    };
    auto* verify = app.add_subcommand("verify", "Check every invariant over an exhaustive enumeration");
    add_spec_flags(verify);
    auto* census_cmd = app.add_subcommand("census", "Count GT-words and rich GT-words per length");
    add_spec_flags(census_cmd);
    census_cmd->add_flag("--canonical", canonical, "Count words up to renaming of letters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (*analyze || *graph) {
            if (from_stdin) {
                const auto more = read_lines(in);
                words.insert(words.end(), more.begin(), more.end());
            } else if (words.empty()) {
                err << "error: expected at least one word\n";
                return kUsage;
            }
            // Parse everything first so a bad word produces no partial output.
            std::vector<Word> parsed;
            for (const auto& text : words) {
                Word w = Word::parse(text);
                if (w.empty()) throw ParseError("the empty word cannot be analyzed");
                parsed.push_back(std::move(w));
            }
            for (const auto& w : parsed) {
                if (*analyze) {
                    const auto record = trapeze::analyze(w);
                    if (format == "table") {
                        render_table(record, out);
                        if (parsed.size() > 1) out << '\n';
                    } else {
                        out << dump(to_json(record)) << '\n';
                    }
                } else {
                    const auto c = complexity_profile(w).values;
                    out << "n,C(n)\n";
                    for (std::size_t i = 0; i < c.size(); ++i) out << i << ',' << c[i] << '\n';
                    if (ascii) render_ascii(c, out);
                }
            }
            return kOk;
        }

        if (*verify) {
            // Verification runs on one word per renaming class; every
            // invariant is renaming-invariant and that is itself checked.
            std::vector<EnumerationSpec> specs;
            if (!k && !n)
                specs = {{4, 12, true}, {2, 14, true}};
            else
                specs = {{k.value_or(4), n.value_or(12), true}};
            for (const auto& s : specs) validate(s);
            std::vector<VerificationReport> runs;
            for (const auto& s : specs) runs.push_back(verify_theorems(s, {jobs, {}, {}}));
            const auto report = merge_reports(runs);
            out << dump(to_json(report)) << '\n';
            err << report.results.size() << " invariants, " << report.failure_count() << " failed\n";
            return report.all_passed() ? kOk : kVerifyFailed;
        }

        if (*census_cmd) {
            const EnumerationSpec spec{k.value_or(4), n.value_or(10), canonical};
            validate(spec);
            out << census_csv(census(spec, jobs));
            return kOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace trapeze
