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

#ifndef SQUARES_CONSTRUCTIONS_HPP
#define SQUARES_CONSTRUCTIONS_HPP

#include "squares/repetition.hpp"
#include "squares/word.hpp"

#include <cstddef>
#include <utility>

namespace squares {

struct ConstructionResult {
    Word word;
    unsigned n = 0;
    std::size_t expected_length = 0; // 6 * 2^n + 1
    AnalysisReport report;
};

/// w_n = 00 alpha(n) alpha(n)' where ' deletes the last letter.
ConstructionResult build_wn(unsigned n);

/// x w (w s^-1) with s the longest common suffix of x and w. Total: no
/// hypothesis on x or w is checked here.
Word lemma2_compose(const Word& x, const Word& w);

/// True iff w_n is overlap-free, begins with 001001 and 2M = |w_n| + 3.
std::pair<bool, ConstructionResult> verify_wn(unsigned n);

} // namespace squares

#endif // SQUARES_CONSTRUCTIONS_HPP
