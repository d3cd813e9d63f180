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

#include "squares/thue_morse.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace squares {

Word mu(const Word& w)
{
    std::vector<std::uint8_t> out;
    out.reserve(2 * w.size());
    for (auto c : w) {
        out.push_back(c);
        out.push_back(c ^ 1u);
    }
    return Word::from_symbols(out);
}

Word tm_prefix(std::size_t length)
{
    std::vector<std::uint8_t> t{0};
    t.reserve(length * 2 + 1);
    while (t.size() < length) {
        const std::size_t half = t.size();
        for (std::size_t i = 0; i < half; ++i)
            t.push_back(t[i] ^ 1u);
    }
    t.resize(length);
    return Word::from_symbols(t);
}

Word tm_factor(std::size_t start, std::size_t len)
{
    if (start < 1)
        throw std::out_of_range("letter indices start at 1");
    return factor(tm_prefix(start + len - 1), start, len);
}

std::size_t alpha_length(unsigned n)
{
    if (n < 1)
        throw std::invalid_argument("alpha is defined for n >= 1");
    if (n > 28)
        throw std::length_error("alpha(" + std::to_string(n) + ") is too long");
    return std::size_t{3} << n;
}

Word alpha(unsigned n)
{
    return tm_factor(5, alpha_length(n));
}

} // namespace squares
