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

#include "squares/lce.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace squares {

namespace {

std::vector<std::uint32_t> build_suffix_array(std::span<const std::uint8_t> s)
{
    const std::size_t n = s.size();
    std::vector<std::uint32_t> sa(n), rank(n), tmp(n);
    if (n == 0)
        return sa;

    std::vector<std::uint32_t> count(std::max<std::size_t>(n, 256) + 1, 0);
    for (std::size_t i = 0; i < n; ++i)
        ++count[s[i]];
    for (std::size_t c = 1; c < count.size(); ++c)
        count[c] += count[c - 1];
    for (std::size_t i = n; i-- > 0;)
        sa[--count[s[i]]] = static_cast<std::uint32_t>(i);

    std::size_t classes = 1;
    rank[sa[0]] = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (s[sa[i]] != s[sa[i - 1]])
            ++classes;
        rank[sa[i]] = static_cast<std::uint32_t>(classes - 1);
    }

    for (std::size_t k = 1; classes < n; k <<= 1) {
        // Order by second key: suffixes without a second half first.
        std::size_t p = 0;
        for (std::size_t i = n - std::min(k, n); i < n; ++i)
            tmp[p++] = static_cast<std::uint32_t>(i);
        for (std::size_t j = 0; j < n; ++j)
            if (sa[j] >= k)
                tmp[p++] = static_cast<std::uint32_t>(sa[j] - k);

        std::fill(count.begin(), count.begin() + static_cast<std::ptrdiff_t>(classes) + 1, 0);
        for (std::size_t i = 0; i < n; ++i)
            ++count[rank[i]];
        for (std::size_t c = 1; c <= classes; ++c)
            count[c] += count[c - 1];
        for (std::size_t i = n; i-- > 0;)
            sa[--count[rank[tmp[i]]]] = tmp[i];

        auto second = [&](std::uint32_t i) -> std::int64_t {
            return i + k < n ? static_cast<std::int64_t>(rank[i + k]) : -1;
        };
        tmp[sa[0]] = 0;
        classes = 1;
        for (std::size_t i = 1; i < n; ++i) {
            const auto a = sa[i - 1], b = sa[i];
            if (rank[a] != rank[b] || second(a) != second(b))
                ++classes;
            tmp[b] = static_cast<std::uint32_t>(classes - 1);
        }
        rank.swap(tmp);
    }
    return sa;
}

} // namespace

LceIndex::LceIndex(std::span<const std::uint8_t> text) : n_(text.size())
{
    if (n_ >= (std::size_t{1} << 31))
        throw std::length_error("text too long for LCE index");
    sa_ = build_suffix_array(text);
    rank_.assign(n_, 0);
    for (std::size_t r = 0; r < n_; ++r)
        rank_[sa_[r]] = static_cast<std::uint32_t>(r);

    // Kasai: lcp[r] = lcp(sa[r-1], sa[r]), lcp[0] = 0.
    std::vector<std::uint32_t> lcp(n_, 0);
    for (std::size_t i = 0, h = 0; i < n_; ++i) {
        if (rank_[i] == 0) {
            h = 0;
            continue;
        }
        const std::size_t j = sa_[rank_[i] - 1];
        while (i + h < n_ && j + h < n_ && text[i + h] == text[j + h])
            ++h;
        lcp[rank_[i]] = static_cast<std::uint32_t>(h);
        if (h > 0)
            --h;
    }

    sparse_.push_back(std::move(lcp));
    for (std::size_t k = 1; (std::size_t{1} << k) <= n_; ++k) {
        const auto& prev = sparse_.back();
        const std::size_t half = std::size_t{1} << (k - 1);
        std::vector<std::uint32_t> level(n_ - (std::size_t{1} << k) + 1);
        for (std::size_t r = 0; r < level.size(); ++r)
            level[r] = std::min(prev[r], prev[r + half]);
        sparse_.push_back(std::move(level));
    }
}

std::size_t LceIndex::lce(std::size_t i, std::size_t j) const noexcept
{
    if (i == j)
        return n_ - i;
    std::size_t lo = rank_[i], hi = rank_[j];
    if (lo > hi)
        std::swap(lo, hi);
    ++lo; // min over lcp[lo .. hi]
    const std::size_t len = hi - lo + 1;
    const std::size_t k = std::bit_width(len) - 1;
    return std::min(sparse_[k][lo], sparse_[k][hi + 1 - (std::size_t{1} << k)]);
}

BidirectionalLce::BidirectionalLce(std::span<const std::uint8_t> text)
    : n_(text.size()), fwd_(text)
{
    std::vector<std::uint8_t> rev(text.rbegin(), text.rend());
    bwd_ = LceIndex(rev);
}

} // namespace squares
