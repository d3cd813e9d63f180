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

#ifndef SQUARES_ENUMERATION_HPP
#define SQUARES_ENUMERATION_HPP

#include "squares/word.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace squares {

enum class WordClass { all_binary, overlap_free };

const char* to_string(WordClass c) noexcept;

/// Raised when a request would exceed a configured enumeration cap.
class ResourceLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

struct EnumerationOptions {
    /// 0 selects the default: hardware concurrency, capped by the
    /// CENTRES_MAX_WORKERS environment variable when set.
    unsigned workers = 0;
    std::size_t all_binary_cap = 18;
    std::size_t overlap_free_cap = 1000;
    std::size_t witness_limit = 16;
};

struct EnumerationSummary {
    std::size_t length = 0;
    WordClass word_class = WordClass::overlap_free;
    std::uint64_t total = 0;
    std::size_t m_min = 0;
    std::size_t m_max = 0;
    std::map<std::size_t, std::uint64_t> m_histogram;
    /// Lexicographically least words attaining m_min / m_max.
    std::vector<Word> min_witnesses;
    std::vector<Word> max_witnesses;

    friend bool operator==(const EnumerationSummary&, const EnumerationSummary&) = default;
};

using WordConsumer = std::function<void(const Word&)>;

/// Whether the word has an overlap c x c x c ending at its last letter.
/// If every proper prefix is overlap-free this decides overlap-freeness.
bool ends_with_overlap(std::span<const std::uint8_t> w);

/// Visits every overlap-free word of length n once, in lexicographic order.
/// Returns the number of words visited.
std::uint64_t enumerate_overlap_free(std::size_t n, const WordConsumer& consumer);
/// Same, restricted to words beginning with `prefix` (visits nothing if the
/// prefix itself has an overlap or is longer than n).
std::uint64_t enumerate_overlap_free(const Word& prefix, std::size_t n, const WordConsumer& consumer);
/// All 2^n words in lexicographic order. Throws ResourceLimitError above `cap`.
std::uint64_t enumerate_all(std::size_t n, const WordConsumer& consumer, std::size_t cap = 18);

/// Histogram of M over a word class at length n.
EnumerationSummary stats(std::size_t n, WordClass word_class, const EnumerationOptions& options = {});

/// Associative, commutative merge of partial summaries of the same length
/// and class.
EnumerationSummary merge(const EnumerationSummary& a, const EnumerationSummary& b, std::size_t witness_limit = 16);

unsigned default_workers();

} // namespace squares

#endif // SQUARES_ENUMERATION_HPP
