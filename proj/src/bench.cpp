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

#include "squares/bench.hpp"

#include "squares/constructions.hpp"
#include "squares/thue_morse.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <stdexcept>

namespace squares {

namespace {

Word random_word(std::size_t length, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<std::uint8_t> s(length);
    for (auto& c : s)
        c = static_cast<std::uint8_t>(rng() & 1u);
    return Word::from_symbols(s);
}

Word wn_prefix(std::size_t length)
{
    unsigned n = 1;
    while ((std::size_t{6} << n) + 1 < length)
        ++n;
    return prefix(build_wn(n).word, length);
}

} // namespace

std::vector<BenchRow> run_bench(Tier tier, std::size_t length, unsigned trials, std::uint64_t seed)
{
    const char* name = tier == Tier::fast ? "fast" : "bruteforce";
    std::vector<std::pair<std::string, Word>> inputs{{"tm", tm_prefix(length)}, {"wn", wn_prefix(length)}};
    for (unsigned t = 0; t < trials; ++t)
        inputs.emplace_back("random", random_word(length, seed + t));

    for (const auto& [kind, w] : inputs)
        if (centres(w, Tier::fast) != centres(w, Tier::bruteforce))
            throw std::logic_error("tiers disagree on " + kind + " input of length " + std::to_string(length));

    std::vector<BenchRow> rows;
    unsigned random_trial = 0;
    for (const auto& [kind, w] : inputs) {
        const unsigned reps = kind == "random" ? 1 : trials;
        for (unsigned r = 0; r < reps; ++r) {
            const auto start = std::chrono::steady_clock::now();
            const std::size_t m = count_centres(w, tier);
            const auto stop = std::chrono::steady_clock::now();
            rows.push_back(BenchRow{name, kind, w.size(), kind == "random" ? random_trial++ : r, m,
                                    std::chrono::duration<double, std::micro>(stop - start).count()});
        }
    }
    return rows;
}

std::string to_tsv(const std::vector<BenchRow>& rows)
{
    std::string out = "# wall-clock timings, non-deterministic\nalgorithm\tinput\tlength\ttrial\tM\tmicros\n";
    char buf[64];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.1f", r.micros);
        out += r.algorithm + '\t' + r.input + '\t' + std::to_string(r.length) + '\t' + std::to_string(r.trial) + '\t'
               + std::to_string(r.centres) + '\t' + buf + '\n';
    }
    return out;
}

} // namespace squares
