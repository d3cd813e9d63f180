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

#include "oracles.hpp"

#include "squares/thue_morse.hpp"
#include "squares/word.hpp"

#include <doctest.h>

using namespace squares;

namespace {

Word W(const char* s)
{
    return from_text(s);
}

std::vector<Word> words_up_to(std::size_t n)
{
    std::vector<Word> out;
    for (std::size_t len = 0; len <= n; ++len)
        for (const auto& s : oracle::all_words(len))
            out.push_back(from_text(s));
    return out;
}

} // namespace

TEST_CASE("text codec")
{
    CHECK(W("0110").size() == 4);
    CHECK(W("0110")[1] == 1);
    CHECK(W("").empty());
    CHECK(W("0110").to_text() == "0110");
    CHECK(to_text(Word{}) == "");

    try {
        (void)from_text("0120");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.index() == 3);
    }
    CHECK_THROWS_AS(from_text("01 0"), ParseError);
    CHECK_THROWS_AS(from_text("x"), std::invalid_argument);

    for (const auto& w : words_up_to(10))
        REQUIRE(from_text(w.to_text()) == w);
}

TEST_CASE("from_symbols rejects non-binary values")
{
    const std::vector<std::uint8_t> bad{0, 1, 2};
    CHECK_THROWS_AS(Word::from_symbols(bad), std::invalid_argument);
    CHECK(Word::from_bits(0b0110, 4) == W("0110"));
    CHECK(Word::repeat(0, 3) == W("000"));
}

TEST_CASE("factor")
{
    CHECK(factor(tm_prefix(16), 5, 6) == W("100110"));
    CHECK(factor(W("0110"), 1, 4) == W("0110"));
    CHECK(factor(W("0110"), 5, 0) == Word{});
    CHECK_THROWS_AS(factor(W("0110"), 3, 3), std::out_of_range);
    CHECK_THROWS_AS(factor(W("0110"), 0, 1), std::out_of_range);
    CHECK_THROWS_AS(factor(W("0110"), 6, 0), std::out_of_range);
}

TEST_CASE("factor laws")
{
    for (const auto& w : words_up_to(8)) {
        REQUIRE(factor(w, 1, w.size()) == w);
        for (std::size_t i = 1; i <= w.size(); ++i)
            for (std::size_t a = 0; i + a - 1 <= w.size(); ++a)
                for (std::size_t b = 0; i + a + b - 1 <= w.size(); ++b)
                    REQUIRE(factor(w, i, a + b) == factor(w, i, a) + factor(w, i + a, b));
    }
}

TEST_CASE("complement and reverse")
{
    CHECK(complement(W("0110")) == W("1001"));
    CHECK(complement(Word{}) == Word{});
    CHECK(complement(W("001001")) == W("110110"));
    CHECK(reverse(W("001001")) == W("100100"));
    CHECK(reverse(W("0")) == W("0"));
    CHECK(reverse(W("01")) == W("10"));
    for (const auto& w : words_up_to(10)) {
        REQUIRE(reverse(reverse(w)) == w);
        REQUIRE(complement(complement(w)) == w);
    }
}

TEST_CASE("drop_suffix")
{
    CHECK(drop_suffix(W("100110"), 1) == W("10011"));
    CHECK(drop_suffix(W("0110"), 0) == W("0110"));
    CHECK(drop_suffix(W("100101101001"), 4) == W("10010110"));
    CHECK(drop_suffix(W("01"), 2) == Word{});
    CHECK_THROWS_AS(drop_suffix(W("01"), 3), std::out_of_range);
}

TEST_CASE("shortest_border")
{
    CHECK(shortest_border(W("0110")) == W("0"));
    CHECK_FALSE(shortest_border(W("01")).has_value());
    CHECK(shortest_border(W("1001")) == W("1"));
    CHECK_FALSE(shortest_border(W("0")).has_value());
    CHECK_FALSE(shortest_border(Word{}).has_value());
    CHECK(shortest_border(W("010010")) == W("0"));
    CHECK(shortest_border(W("01001")) == W("01"));
    CHECK(shortest_border(W("00")) == W("0"));

    for (const auto& w : words_up_to(10)) {
        const auto b = shortest_border(w);
        const auto rb = shortest_border(reverse(w));
        REQUIRE(b.has_value() == rb.has_value());
        REQUIRE(b.has_value() == oracle::bordered(w.to_text()));
        REQUIRE(is_bordered(w) == b.has_value());
        if (b) {
            REQUIRE(reverse(*b) == *rb);
            REQUIRE(is_prefix_of(*b, w));
            REQUIRE(is_suffix_of(*b, w));
            // Nothing shorter is a border.
            for (std::size_t k = 1; k < b->size(); ++k)
                REQUIRE(prefix(w, k) != suffix(w, k));
        }
    }
}

TEST_CASE("longest_common_suffix")
{
    CHECK(longest_common_suffix(W("0"), W("100110")) == W("0"));
    CHECK(longest_common_suffix(W("1"), W("100110")) == Word{});
    CHECK(longest_common_suffix(W("0110"), W("0110")) == W("0110"));
    CHECK(longest_common_suffix(Word{}, W("01")) == Word{});

    const auto ws = words_up_to(6);
    for (const auto& x : ws)
        for (const auto& w : ws) {
            const Word s = longest_common_suffix(x, w);
            REQUIRE(is_suffix_of(s, x));
            REQUIRE(is_suffix_of(s, w));
            if (s.size() < x.size() && s.size() < w.size())
                REQUIRE(x[x.size() - 1 - s.size()] != w[w.size() - 1 - s.size()]);
        }
}

TEST_CASE("is_conjugate")
{
    CHECK(is_conjugate(W("01"), W("10")));
    CHECK_FALSE(is_conjugate(W("00"), W("01")));
    CHECK(is_conjugate(W("100110010110"), W("100101101001")));
    CHECK(is_conjugate(Word{}, Word{}));
    CHECK_FALSE(is_conjugate(W("0"), W("00")));

    // Equivalence relation on each fixed length, against explicit rotation.
    for (std::size_t n = 0; n <= 8; ++n) {
        std::vector<Word> ws;
        for (const auto& s : oracle::all_words(n))
            ws.push_back(from_text(s));
        auto rotation = [](const Word& u, const Word& v) {
            const std::string a = u.to_text(), b = v.to_text();
            for (std::size_t r = 0; r < std::max<std::size_t>(a.size(), 1); ++r)
                if (a.substr(r) + a.substr(0, r) == b)
                    return true;
            return false;
        };
        // rel[i] is the class of ws[i]; related words must have equal classes,
        // which gives symmetry and transitivity together.
        std::vector<std::vector<bool>> rel(ws.size(), std::vector<bool>(ws.size()));
        for (std::size_t i = 0; i < ws.size(); ++i) {
            REQUIRE(is_conjugate(ws[i], ws[i]));
            for (std::size_t j = 0; j < ws.size(); ++j) {
                rel[i][j] = is_conjugate(ws[i], ws[j]);
                REQUIRE(rel[i][j] == rotation(ws[i], ws[j]));
            }
        }
        for (std::size_t i = 0; i < ws.size(); ++i)
            for (std::size_t j = 0; j < ws.size(); ++j)
                if (rel[i][j])
                    REQUIRE(rel[i] == rel[j]);
    }
}

TEST_CASE("find_factor and ordering")
{
    CHECK(find_factor(W("0110100110"), W("1001")) == 4);
    CHECK(find_factor(W("0110"), W("000")) == std::nullopt);
    CHECK(find_factor(W("01"), Word{}) == 0);
    CHECK(W("01") < W("10"));
    CHECK(W("0") < W("00"));
    CHECK(W("01") + W("10") == W("0110"));
}
