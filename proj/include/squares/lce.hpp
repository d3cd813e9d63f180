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

#ifndef SQUARES_LCE_HPP
#define SQUARES_LCE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace squares {

/// Constant-time longest-common-extension queries over a fixed text.
///
/// Built from a suffix array (prefix doubling with counting sort), the Kasai
/// LCP array and a sparse table for range minima. Construction is
/// O(n log n) time and space.
class LceIndex {
public:
    LceIndex() = default;
    explicit LceIndex(std::span<const std::uint8_t> text);

    std::size_t size() const noexcept { return n_; }

    /// Length of the longest common prefix of the suffixes starting at i and j
    /// (0-based, both < size()).
    std::size_t lce(std::size_t i, std::size_t j) const noexcept;

    const std::vector<std::uint32_t>& suffix_array() const noexcept { return sa_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint32_t> sa_;
    std::vector<std::uint32_t> rank_;
    // sparse_[k][r] = min lcp over [r, r + 2^k).
    std::vector<std::vector<std::uint32_t>> sparse_;
};

/// Forward and backward extensions over one text.
class BidirectionalLce {
public:
    explicit BidirectionalLce(std::span<const std::uint8_t> text);

    /// Matching letters going right from i and j.
    std::size_t forward(std::size_t i, std::size_t j) const noexcept { return fwd_.lce(i, j); }
    /// Matching letters going left from i and j, inclusive.
    std::size_t backward(std::size_t i, std::size_t j) const noexcept
    {
        return bwd_.lce(n_ - 1 - i, n_ - 1 - j);
    }

private:
    std::size_t n_;
    LceIndex fwd_;
    LceIndex bwd_;
};

} // namespace squares

#endif // SQUARES_LCE_HPP
