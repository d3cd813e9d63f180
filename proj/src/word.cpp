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

#include "squares/word.hpp"

#include <algorithm>

namespace squares {

namespace {

std::string describe(std::size_t index, char ch)
{
    std::string msg = "illegal symbol at character " + std::to_string(index);
    if (ch >= 0x20 && ch < 0x7f)
        msg += std::string(" ('") + ch + "')";
    return msg;
}

// Knuth-Morris-Pratt failure function: fail[i] = longest proper border of
// the prefix of length i+1.
std::vector<std::size_t> failure_function(std::span<const std::uint8_t> s)
{
    std::vector<std::size_t> fail(s.size(), 0);
    for (std::size_t i = 1, k = 0; i < s.size(); ++i) {
        while (k > 0 && s[i] != s[k])
            k = fail[k - 1];
        if (s[i] == s[k])
            ++k;
        fail[i] = k;
    }
    return fail;
}

} // namespace

ParseError::ParseError(std::size_t index, char ch)
    : std::invalid_argument(describe(index, ch)), index_(index)
{
}

Word Word::from_text(std::string_view text)
{
    std::vector<std::uint8_t> symbols(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '0' && text[i] != '1')
            throw ParseError(i + 1, text[i]);
        symbols[i] = static_cast<std::uint8_t>(text[i] - '0');
    }
    return Word(std::move(symbols));
}

Word Word::from_symbols(std::span<const std::uint8_t> symbols)
{
    for (std::size_t i = 0; i < symbols.size(); ++i)
        if (symbols[i] > 1)
            throw std::invalid_argument("symbol at index " + std::to_string(i + 1)
                                        + " is not binary");
    return Word(std::vector<std::uint8_t>(symbols.begin(), symbols.end()));
}

Word Word::from_bits(std::uint64_t bits, std::size_t count)
{
    if (count > 64)
        throw std::out_of_range("from_bits supports at most 64 letters");
    std::vector<std::uint8_t> symbols(count);
    for (std::size_t i = 0; i < count; ++i)
        symbols[i] = static_cast<std::uint8_t>((bits >> (count - 1 - i)) & 1u);
    return Word(std::move(symbols));
}

Word Word::repeat(std::uint8_t letter, std::size_t count)
{
    if (letter > 1)
        throw std::invalid_argument("letter must be 0 or 1");
    return Word(std::vector<std::uint8_t>(count, letter));
}

std::string Word::to_text() const
{
    std::string out(symbols_.size(), '0');
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        out[i] = static_cast<char>('0' + symbols_[i]);
    return out;
}

Word operator+(const Word& a, const Word& b)
{
    std::vector<std::uint8_t> out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.symbols_.begin(), a.symbols_.end());
    out.insert(out.end(), b.symbols_.begin(), b.symbols_.end());
    return Word(std::move(out));
}

std::strong_ordering operator<=>(const Word& a, const Word& b)
{
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

Word factor(const Word& w, std::size_t start, std::size_t len)
{
    if (start < 1 || start - 1 > w.size() || len > w.size() - (start - 1))
        throw std::out_of_range("factor(" + std::to_string(start) + ", " + std::to_string(len)
                                + ") exceeds word of length " + std::to_string(w.size()));
    return Word::from_symbols(w.symbols().subspan(start - 1, len));
}

Word prefix(const Word& w, std::size_t len)
{
    return factor(w, 1, len);
}

Word suffix(const Word& w, std::size_t len)
{
    if (len > w.size())
        throw std::out_of_range("suffix longer than word");
    return factor(w, w.size() - len + 1, len);
}

Word complement(const Word& w)
{
    std::vector<std::uint8_t> out(w.begin(), w.end());
    for (auto& c : out)
        c ^= 1u;
    return Word::from_symbols(out);
}

Word reverse(const Word& w)
{
    std::vector<std::uint8_t> out(w.begin(), w.end());
    std::reverse(out.begin(), out.end());
    return Word::from_symbols(out);
}

Word drop_suffix(const Word& w, std::size_t k)
{
    if (k > w.size())
        throw std::out_of_range("cannot drop " + std::to_string(k) + " letters from a word of length "
                                + std::to_string(w.size()));
    return prefix(w, w.size() - k);
}

bool is_prefix_of(const Word& p, const Word& w)
{
    return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

bool is_suffix_of(const Word& s, const Word& w)
{
    return s.size() <= w.size() && std::equal(s.begin(), s.end(), w.end() - static_cast<std::ptrdiff_t>(s.size()));
}

std::optional<std::size_t> find_factor(const Word& hay, const Word& needle)
{
    if (needle.empty())
        return 0;
    if (needle.size() > hay.size())
        return std::nullopt;
    const auto fail = failure_function(needle.symbols());
    for (std::size_t i = 0, k = 0; i < hay.size(); ++i) {
        while (k > 0 && hay[i] != needle[k])
            k = fail[k - 1];
        if (hay[i] == needle[k])
            ++k;
        if (k == needle.size())
            return i + 1 - k;
    }
    return std::nullopt;
}

std::optional<Word> shortest_border(const Word& w)
{
    if (w.size() <= 1)
        return std::nullopt;
    const auto fail = failure_function(w.symbols());
    std::size_t b = fail.back();
    if (b == 0)
        return std::nullopt;
    while (fail[b - 1] != 0)
        b = fail[b - 1];
    return prefix(w, b);
}

bool is_bordered(const Word& w)
{
    return w.size() > 1 && failure_function(w.symbols()).back() != 0;
}

Word longest_common_suffix(const Word& x, const Word& w)
{
    std::size_t k = 0;
    while (k < x.size() && k < w.size() && x[x.size() - 1 - k] == w[w.size() - 1 - k])
        ++k;
    return suffix(w, k);
}

bool is_conjugate(const Word& u, const Word& v)
{
    return u.size() == v.size() && find_factor(u + u, v).has_value();
}

} // namespace squares
