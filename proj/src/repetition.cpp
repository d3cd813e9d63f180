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

#include "squares/repetition.hpp"

#include "squares/lce.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace squares {

namespace {

// For every period l in [1, max_period], reports the maximal intervals [a, b)
// of offsets x (x + l < n) with w[x] == w[x + l] whose length is at least
// l + extra. Such an interval spells a factor w[a .. b + l) of period l.
//
// Any interval of length >= l contains a multiple of l, so sampling the
// offsets 0, l, 2l, ... and extending both ways finds all of them with
// O(n / l) queries per period. A sample whose backward extension reaches the
// previous sample belongs to an interval already reported.
template <class Visit>
void for_each_periodic_interval(const Word& w, const BidirectionalLce& lce, std::size_t max_period,
                                std::size_t extra, Visit&& visit)
{
    const std::size_t n = w.size();
    for (std::size_t l = 1; l <= max_period && 2 * l <= n; ++l) {
        for (std::size_t i = 0; i + l < n; i += l) {
            const std::size_t fwd = lce.forward(i, i + l);
            if (fwd == 0)
                continue;
            const std::size_t bwd = i > 0 ? lce.backward(i - 1, i + l - 1) : 0;
            if (bwd >= l)
                continue;
            const std::size_t a = i - bwd;
            const std::size_t b = i + fwd;
            if (b - a >= l + extra)
                visit(l, a, b);
        }
    }
}

std::vector<std::size_t> minimal_roots(const Word& w, const BidirectionalLce& lce)
{
    const std::size_t n = w.size();
    std::vector<std::size_t> root(n + 1, 0);
    if (n < 2)
        return root;

    // next[g] = smallest unassigned gap >= g; gap n is the sentinel.
    std::vector<std::size_t> next(n + 1);
    std::iota(next.begin(), next.end(), std::size_t{0});
    auto find = [&](std::size_t g) {
        std::size_t r = g;
        while (next[r] != r)
            r = next[r];
        while (next[g] != r)
            g = std::exchange(next[g], r);
        return r;
    };

    // Periods arrive in increasing order, so the first assignment is minimal.
    for_each_periodic_interval(w, lce, n / 2, 0, [&](std::size_t l, std::size_t a, std::size_t b) {
        for (std::size_t g = find(a + l); g <= b && g < n; g = find(g)) {
            root[g] = l;
            next[g] = g + 1;
        }
    });
    return root;
}

std::optional<OverlapOccurrence> leftmost_overlap(const Word& w, const BidirectionalLce& lce)
{
    const std::size_t n = w.size();
    if (n < 3)
        return std::nullopt;
    std::size_t best_start = n, best_period = n;
    for_each_periodic_interval(w, lce, (n - 1) / 2, 1, [&](std::size_t l, std::size_t a, std::size_t) {
        if (a < best_start || (a == best_start && l < best_period)) {
            best_start = a;
            best_period = l;
        }
    });
    if (best_start == n)
        return std::nullopt;
    return OverlapOccurrence{best_start + 1, w[best_start], factor(w, best_start + 2, best_period - 1)};
}

bool squares_at(const Word& w, std::size_t p, std::size_t l)
{
    for (std::size_t k = 0; k < l; ++k)
        if (w[p - l + k] != w[p + k])
            return false;
    return true;
}

void check_position(const Word& w, Position p)
{
    if (p.gap < 1 || p.gap >= w.size())
        throw std::out_of_range("position " + std::to_string(p.gap) + " is not a gap of a word of length "
                                + std::to_string(w.size()));
}

} // namespace

std::optional<SquareOccurrence> minimal_square_at(const Word& w, Position p)
{
    check_position(w, p);
    const std::size_t limit = std::min(p.gap, w.size() - p.gap);
    for (std::size_t l = 1; l <= limit; ++l)
        if (squares_at(w, p.gap, l))
            return SquareOccurrence{p, factor(w, p.gap + 1, l), l};
    return std::nullopt;
}

std::vector<std::size_t> minimal_root_lengths(const Word& w)
{
    if (w.size() < 2)
        return std::vector<std::size_t>(w.size() + 1, 0);
    return minimal_roots(w, BidirectionalLce(w.symbols()));
}

std::vector<Position> centres(const Word& w)
{
    const auto roots = minimal_root_lengths(w);
    std::vector<Position> out;
    for (std::size_t g = 1; g < w.size(); ++g)
        if (roots[g] != 0)
            out.push_back(Position{g});
    return out;
}

std::vector<Position> centres(const Word& w, Tier tier)
{
    return tier == Tier::fast ? centres(w) : centres_bruteforce(w);
}

std::vector<Position> centres_bruteforce(const Word& w)
{
    std::vector<Position> out;
    const std::size_t n = w.size();
    for (std::size_t p = 1; p < n; ++p) {
        const std::size_t limit = std::min(p, n - p);
        for (std::size_t l = 1; l <= limit; ++l) {
            std::size_t k = 0;
            while (k < l && w[p - l + k] == w[p + k])
                ++k;
            if (k == l) {
                out.push_back(Position{p});
                break;
            }
        }
    }
    return out;
}

std::size_t count_centres(const Word& w)
{
    const auto roots = minimal_root_lengths(w);
    return static_cast<std::size_t>(std::count_if(roots.begin(), roots.end(), [](std::size_t l) { return l != 0; }));
}

std::size_t count_centres(const Word& w, Tier tier)
{
    return tier == Tier::fast ? count_centres(w) : centres_bruteforce(w).size();
}

std::vector<SquareOccurrence> all_squares(const Word& w)
{
    std::vector<std::pair<std::size_t, std::size_t>> found; // (gap, root length)
    if (w.size() >= 2) {
        const BidirectionalLce lce(w.symbols());
        for_each_periodic_interval(w, lce, w.size() / 2, 0, [&](std::size_t l, std::size_t a, std::size_t b) {
            for (std::size_t g = a + l; g <= b; ++g)
                found.emplace_back(g, l);
        });
    }
    std::sort(found.begin(), found.end());
    std::vector<SquareOccurrence> out;
    out.reserve(found.size());
    for (auto [g, l] : found)
        out.push_back(SquareOccurrence{Position{g}, factor(w, g + 1, l), l});
    return out;
}

std::vector<SquareOccurrence> frames(const Word& w)
{
    auto squares = all_squares(w);
    std::erase_if(squares, [](const SquareOccurrence& s) { return is_bordered(s.root); });
    return squares;
}

std::optional<OverlapOccurrence> find_overlap(const Word& w)
{
    if (w.size() < 3)
        return std::nullopt;
    return leftmost_overlap(w, BidirectionalLce(w.symbols()));
}

bool is_overlap_free(const Word& w)
{
    return !find_overlap(w).has_value();
}

SpecialStatus special_status(const Word& w)
{
    static const Word p0 = from_text("001001"), p1 = from_text("110110");
    static const Word s0 = from_text("100100"), s1 = from_text("011011");
    return SpecialStatus{is_prefix_of(p0, w) || is_prefix_of(p1, w), is_suffix_of(s0, w) || is_suffix_of(s1, w)};
}

AnalysisReport analyze(const Word& w)
{
    AnalysisReport r;
    r.word = w;
    r.length = w.size();
    if (w.size() >= 2) {
        const BidirectionalLce lce(w.symbols());
        const auto roots = minimal_roots(w, lce);
        for (std::size_t g = 1; g < w.size(); ++g) {
            if (roots[g] == 0)
                continue;
            r.centres.push_back(Position{g});
            r.minimal_squares.push_back(SquareOccurrence{Position{g}, factor(w, g + 1, roots[g]), roots[g]});
        }
        r.overlap_free = !leftmost_overlap(w, lce).has_value();
    }
    r.m = r.centres.size();
    r.bound_lhs = 2 * r.m;
    r.bound_rhs = r.length + 3;
    r.tight = r.overlap_free && r.bound_lhs == r.bound_rhs;
    return r;
}

} // namespace squares
