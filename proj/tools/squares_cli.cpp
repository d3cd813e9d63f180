/*
 * Copyright 2026 The squares authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end. Talks to the library only through the C API.

#include "squares/squares.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

enum Exit : int { exit_ok = 0, exit_failed = 1, exit_usage = 2 };

struct StringDeleter {
    void operator()(sq_string* s) const noexcept { sq_string_free(s); }
};
struct WordDeleter {
    void operator()(sq_word* w) const noexcept { sq_word_free(w); }
};
using String = std::unique_ptr<sq_string, StringDeleter>;
using WordHandle = std::unique_ptr<sq_word, WordDeleter>;

class ApiError : public std::runtime_error {
public:
    explicit ApiError(sq_status s) : std::runtime_error(sq_last_error()), status(s) {}
    sq_status status;
};

void check(sq_status s)
{
    if (s != SQ_OK)
        throw ApiError(s);
}

std::string text_of(sq_string* raw)
{
    String s(raw);
    return std::string(sq_string_data(s.get()), sq_string_size(s.get()));
}

WordHandle parse_word(const std::string& text, std::string_view where)
{
    sq_word* raw = nullptr;
    std::size_t bad = 0;
    if (sq_word_from_text(text.data(), text.size(), &raw, &bad) != SQ_OK) {
        std::string msg(where);
        if (!msg.empty())
            msg += ": ";
        throw std::invalid_argument(msg + sq_last_error());
    }
    return WordHandle(raw);
}

std::string analyze_one(const std::string& text, sq_format format, std::string_view where)
{
    const auto w = parse_word(text, where);
    sq_string* out = nullptr;
    check(sq_analyze(w.get(), format, &out));
    return text_of(out);
}

int verify(sq_check check_id, std::int64_t a, std::int64_t b, const sq_options& opts)
{
    int passed = 0;
    sq_string* out = nullptr;
    check(sq_verify(check_id, a, b, &opts, &passed, &out));
    std::cout << text_of(out) << '\n';
    return passed ? exit_ok : exit_failed;
}

void print_words(const char* text, std::size_t length, void*)
{
    std::fwrite(text, 1, length, stdout);
    std::fputc('\n', stdout);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Squares, centres and overlaps in binary words", "squares-cli"};
    app.require_subcommand(1);
    sq_options opts{0, 0, 0};
    int code = exit_ok;

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Report centres, M and overlap-freeness");
    std::string word, file, format = "json";
    auto* word_opt = analyze->add_option("--word", word, "Binary word");
    auto* file_opt = analyze->add_option("--file", file, "One word per line; '#' comments and blank lines skipped");
    word_opt->excludes(file_opt);
    analyze->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));

    // construct
    auto* construct = app.add_subcommand("construct", "Build w_n, alpha_n or a Thue-Morse prefix");
    construct->require_subcommand(1);
    unsigned n = 0;
    std::size_t length = 0;
    auto* c_wn = construct->add_subcommand("wn", "Extremal word w_n with its report");
    c_wn->add_option("--n", n)->required();
    auto* c_alpha = construct->add_subcommand("alpha", "Thue-Morse factor alpha_n");
    c_alpha->add_option("--n", n)->required();
    auto* c_tm = construct->add_subcommand("tm", "Thue-Morse prefix");
    c_tm->add_option("--length", length)->required();

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "List words of a class, or their M statistics");
    std::string word_class;
    bool want_stats = false;
    std::string witnesses;
    enumerate->add_option("--length", length)->required();
    enumerate->add_option("--class", word_class)->required()->check(CLI::IsMember({"overlap-free", "all"}));
    enumerate->add_flag("--stats", want_stats, "Print the summary document");
    enumerate->add_option("--witnesses", witnesses, "Print the witnesses of one extreme")
        ->check(CLI::IsMember({"max", "min"}));
    enumerate->add_option("--cap", opts.all_binary_cap, "All-binary length cap (default 18)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run an exhaustive verification sweep");
    verify_cmd->require_subcommand(1);
    std::int64_t a = 0, b = 0;
    auto* v_min = verify_cmd->add_subcommand("min-centres", "Minimum of M over all words of each length");
    v_min->add_option("--from", a)->required();
    v_min->add_option("--to", b)->required();
    v_min->add_option("--cap", opts.all_binary_cap, "All-binary length cap (default 18)");
    auto* v_upper = verify_cmd->add_subcommand("upper-bound", "2M <= |w|+3 over overlap-free words");
    v_upper->add_option("--max-length", a)->required();
    auto* v_constr = verify_cmd->add_subcommand("construction", "w_n for n = 1..N");
    v_constr->add_option("--max-n", a)->required();
    auto* v_lemma = verify_cmd->add_subcommand("lemma-compose", "x w (w s^-1) composition");
    v_lemma->add_option("--max-x", a)->required();
    v_lemma->add_option("--max-w", b)->required();
    auto* v_even = verify_cmd->add_subcommand("tm-even", "Even Thue-Morse factors");
    v_even->add_option("--max-length", a)->required();
    auto* v_pansiot = verify_cmd->add_subcommand("pansiot", "Frames of a Thue-Morse prefix");
    v_pansiot->add_option("--prefix-length", a)->required();
    auto* v_alpha = verify_cmd->add_subcommand("alpha-recurrence", "alpha_{n+1} from mu(alpha_n)");
    v_alpha->add_option("--max-n", a)->required();

    // bench
    auto* bench = app.add_subcommand("bench", "Time a centre-counting tier (TSV, non-deterministic)");
    std::string algorithm;
    unsigned trials = 1;
    std::uint64_t seed = 1;
    bench->add_option("--algorithm", algorithm)->required()->check(CLI::IsMember({"bruteforce", "fast"}));
    bench->add_option("--length", length)->required();
    bench->add_option("--trials", trials)->required();
    bench->add_option("--seed", seed)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return exit_usage;
    }

    try {
        if (analyze->parsed()) {
            const sq_format fmt = format == "tsv" ? SQ_FORMAT_TSV : SQ_FORMAT_JSON;
            if (word_opt->count() > 0) {
                std::cout << analyze_one(word, fmt, "") << '\n';
            } else if (file_opt->count() > 0) {
                std::ifstream in(file);
                if (!in)
                    throw std::invalid_argument("cannot open " + file);
                std::vector<std::string> lines;
                std::string line;
                for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
                    if (line.empty() || line.front() == '#')
                        continue;
                    lines.push_back(analyze_one(line, fmt, file + ":" + std::to_string(lineno)));
                }
                for (const auto& l : lines)
                    std::cout << l << '\n';
            } else {
                throw std::invalid_argument("analyze needs --word or --file");
            }
        } else if (construct->parsed()) {
            sq_string* out = nullptr;
            if (c_wn->parsed()) {
                check(sq_construct_wn(n, &out));
                std::cout << text_of(out) << '\n';
            } else {
                sq_word* raw = nullptr;
                check(c_alpha->parsed() ? sq_alpha(n, &raw) : sq_tm_prefix(length, &raw));
                WordHandle w(raw);
                check(sq_word_to_text(w.get(), &out));
                std::cout << text_of(out) << '\n';
            }
        } else if (enumerate->parsed()) {
            const sq_word_class cls = word_class == "all" ? SQ_CLASS_ALL : SQ_CLASS_OVERLAP_FREE;
            if (want_stats || !witnesses.empty()) {
                sq_string* out = nullptr;
                check(sq_stats(length, cls, &opts, &out));
                const std::string doc = text_of(out);
                if (want_stats)
                    std::cout << doc << '\n';
                if (!witnesses.empty()) {
                    const auto parsed = nlohmann::json::parse(doc);
                    for (const auto& w : parsed.at(witnesses + "_witnesses"))
                        std::cout << w.get<std::string>() << '\n';
                }
            } else {
                std::uint64_t visited = 0;
                check(sq_enumerate(length, cls, &opts, print_words, nullptr, &visited));
            }
        } else if (verify_cmd->parsed()) {
            if (v_min->parsed())
                code = verify(SQ_CHECK_MIN_CENTRES, a, b, opts);
            else if (v_upper->parsed())
                code = verify(SQ_CHECK_UPPER_BOUND, a, 0, opts);
            else if (v_constr->parsed())
                code = verify(SQ_CHECK_CONSTRUCTION, a, 0, opts);
            else if (v_lemma->parsed())
                code = verify(SQ_CHECK_LEMMA_COMPOSE, a, b, opts);
            else if (v_even->parsed())
                code = verify(SQ_CHECK_TM_EVEN, a, 0, opts);
            else if (v_pansiot->parsed())
                code = verify(SQ_CHECK_PANSIOT, a, 0, opts);
            else
                code = verify(SQ_CHECK_ALPHA_RECURRENCE, a, 0, opts);
        } else if (bench->parsed()) {
            sq_string* out = nullptr;
            check(sq_bench(algorithm == "fast" ? SQ_TIER_FAST : SQ_TIER_BRUTEFORCE, length, trials, seed, &out));
            std::cout << text_of(out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    std::cout.flush();
    return code;
}
