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

#ifndef SQUARES_REPETITION_HPP
#define SQUARES_REPETITION_HPP

#include "squares/word.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace squares {

/// A square uu centred at a gap: u is a suffix of the prefix of length
/// `centre.gap` and a prefix of the remainder.
struct SquareOccurrence {
    Position centre;
    Word root;
    std::size_t root_length = 0;

    friend bool operator==(const SquareOccurrence&, const SquareOccurrence&) = default;
};

/// A factor c x c x c starting at the 1-based letter index `start`.
struct OverlapOccurrence {
    std::size_t start = 0;
    std::uint8_t letter = 0;
    Word inner;

    friend bool operator==(const OverlapOccurrence&, const OverlapOccurrence&) = default;
};

struct SpecialStatus {
    bool prefix_special = false; // begins with 001001 or 110110
    bool suffix_special = false; // ends with 100100 or 011011
};

struct AnalysisReport {
    Word word;
    std::size_t length = 0;
    bool overlap_free = true;
    std::vector<Position> centres;
    std::size_t m = 0;
    std::vector<SquareOccurrence> minimal_squares;
    std::size_t bound_lhs = 0; // 2M
    std::size_t bound_rhs = 0; // |w| + 3
    bool tight = false;
};

enum class Tier { bruteforce, fast };

/// Shortest square at `p`. Throws std::out_of_range unless 1 <= p.gap < |w|.
std::optional<SquareOccurrence> minimal_square_at(const Word& w, Position p);

/// Minimal root length at every gap, computed from longest-common-extension
/// queries. Entry p (1 <= p < |w|) is 0 when no square is centred at p;
/// entries 0 and |w| are always 0.
std::vector<std::size_t> minimal_root_lengths(const Word& w);

std::vector<Position> centres(const Word& w);
std::vector<Position> centres(const Word& w, Tier tier);
/// Independent oracle: per-gap, letter-by-letter scanning, nothing shared.
std::vector<Position> centres_bruteforce(const Word& w);
/// M(w).
std::size_t count_centres(const Word& w);
std::size_t count_centres(const Word& w, Tier tier);

/// Every square occurrence, ordered by (centre, root_length).
std::vector<SquareOccurrence> all_squares(const Word& w);
/// Squares with unbordered roots, ordered by (centre, root_length).
std::vector<SquareOccurrence> frames(const Word& w);

/// Leftmost, then shortest, factor c x c x c; absent iff w is overlap-free.
std::optional<OverlapOccurrence> find_overlap(const Word& w);
bool is_overlap_free(const Word& w);

SpecialStatus special_status(const Word& w);

AnalysisReport analyze(const Word& w);

} // namespace squares

#endif // SQUARES_REPETITION_HPP
