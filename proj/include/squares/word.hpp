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

#ifndef SQUARES_WORD_HPP
#define SQUARES_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace squares {

/// Raised by the text codec. `index` is the 1-based character index of the
/// first character that is not '0' or '1'.
class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t index, char ch);
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// A gap position in a word: the boundary after the prefix of length `gap`.
/// Valid positions of a word of length n are 1 <= gap < n.
struct Position {
    std::size_t gap = 0;

    friend constexpr auto operator<=>(Position, Position) = default;
};

/// Immutable finite word over {0,1}. Symbols are stored one per byte, each
/// byte holding 0 or 1; construction is restricted so nothing else can get in.
class Word {
public:
    Word() = default;

    static Word from_text(std::string_view text);
    /// Every element must be 0 or 1.
    static Word from_symbols(std::span<const std::uint8_t> symbols);
    /// `count` letters of `bits`, most significant first (bit count-1 is letter 1).
    static Word from_bits(std::uint64_t bits, std::size_t count);
    static Word repeat(std::uint8_t letter, std::size_t count);

    std::string to_text() const;

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    /// 0-based access.
    std::uint8_t operator[](std::size_t i) const noexcept { return symbols_[i]; }
    std::span<const std::uint8_t> symbols() const noexcept { return symbols_; }
    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }

    friend Word operator+(const Word& a, const Word& b);
    friend bool operator==(const Word&, const Word&) = default;
    /// Lexicographic; a proper prefix sorts first.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
    explicit Word(std::vector<std::uint8_t> symbols) : symbols_(std::move(symbols)) {}
    std::vector<std::uint8_t> symbols_;
};

inline Word from_text(std::string_view text) { return Word::from_text(text); }
inline std::string to_text(const Word& w) { return w.to_text(); }

/// Letters start .. start+len-1 (1-based). Throws std::out_of_range.
Word factor(const Word& w, std::size_t start, std::size_t len);
Word prefix(const Word& w, std::size_t len);
Word suffix(const Word& w, std::size_t len);
Word complement(const Word& w);
Word reverse(const Word& w);
/// w with its last k letters deleted. Throws std::out_of_range if k > |w|.
Word drop_suffix(const Word& w, std::size_t k);

bool is_prefix_of(const Word& p, const Word& w);
bool is_suffix_of(const Word& s, const Word& w);
/// Leftmost 0-based occurrence of `needle` in `hay`.
std::optional<std::size_t> find_factor(const Word& hay, const Word& needle);

/// Shortest nonempty proper border, absent for unbordered words and |w| <= 1.
std::optional<Word> shortest_border(const Word& w);
bool is_bordered(const Word& w);
Word longest_common_suffix(const Word& x, const Word& w);
/// True iff v is a rotation of u.
bool is_conjugate(const Word& u, const Word& v);

} // namespace squares

#endif // SQUARES_WORD_HPP
