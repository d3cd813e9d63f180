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

#ifndef SQUARES_BENCH_HPP
#define SQUARES_BENCH_HPP

#include "squares/repetition.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace squares {

struct BenchRow {
    std::string algorithm;
    std::string input; // tm, wn or random
    std::size_t length = 0;
    unsigned trial = 0;
    std::size_t centres = 0;
    double micros = 0;
};

/// Times one tier on Thue-Morse prefixes, prefixes of w_n and seeded random
/// words. Both tiers are compared on every input before anything is timed;
/// a disagreement throws std::logic_error.
std::vector<BenchRow> run_bench(Tier tier, std::size_t length, unsigned trials, std::uint64_t seed);

/// Header line plus one row per measurement.
std::string to_tsv(const std::vector<BenchRow>& rows);

} // namespace squares

#endif // SQUARES_BENCH_HPP
