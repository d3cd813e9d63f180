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

#include "squares/verify.hpp"

#include "squares/constructions.hpp"
#include "squares/repetition.hpp"
#include "squares/thue_morse.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace squares {

namespace {

class ReportBuilder {
public:
    explicit ReportBuilder(std::string name) { report_.check_name = std::move(name); }

    ReportBuilder& param(std::string key, std::int64_t value)
    {
        report_.parameters.emplace_back(std::move(key), value);
        return *this;
    }

    void note(std::string text) { report_.notes.push_back(std::move(text)); }

    void fail(const Word& counterexample, std::string why)
    {
        ++failures_;
        if (report_.counterexamples.size() < counterexample_limit) {
            report_.counterexamples.push_back(counterexample);
            note(std::move(why));
        }
    }

    VerificationReport finish()
    {
        report_.passed = failures_ == 0;
        if (failures_ > report_.counterexamples.size())
            note(std::to_string(failures_) + " counterexamples in total");
        return std::move(report_);
    }

private:
    VerificationReport report_;
    std::size_t failures_ = 0;
};

std::int64_t as_param(std::size_t v)
{
    return static_cast<std::int64_t>(v);
}

bool is_square(std::span<const std::uint8_t> s)
{
    const std::size_t h = s.size() / 2;
    return s.size() % 2 == 0 && std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(h), s.begin() + static_cast<std::ptrdiff_t>(h));
}

} // namespace

VerificationReport verify_min_centres(std::size_t n_from, std::size_t n_to, const EnumerationOptions& options)
{
    if (n_from < 3 || n_from > n_to)
        throw std::invalid_argument("min-centres needs 3 <= from <= to");
    if (n_to > options.all_binary_cap)
        throw ResourceLimitError("min-centres up to length " + std::to_string(n_to) + " exceeds the cap of "
                                 + std::to_string(options.all_binary_cap));
    ReportBuilder b("min-centres");
    b.param("from", as_param(n_from)).param("to", as_param(n_to));
    for (std::size_t n = n_from; n <= n_to; ++n) {
        const auto s = stats(n, WordClass::all_binary, options);
        const std::size_t formula = (n + 1) / 2 - 2;
        const std::string line = "n=" + std::to_string(n) + " empirical=" + std::to_string(s.m_min)
                                 + " formula=" + std::to_string(formula);
        if (s.m_min == formula)
            b.note(line);
        else if (n == 4 && s.m_min == 1)
            b.note(line + " (known exception: every binary word of length 4 contains a square)");
        else
            b.fail(s.min_witnesses.front(), line);
    }
    return b.finish();
}

VerificationReport verify_upper_bound(std::size_t n_max)
{
    ReportBuilder b("upper-bound");
    b.param("max_length", as_param(n_max));
    std::set<std::size_t> equality_lengths;
    std::uint64_t words = 0, equalities = 0;
    for (std::size_t n = 0; n <= n_max; ++n) {
        words += enumerate_overlap_free(n, [&](const Word& w) {
            const std::size_t m = count_centres(w);
            if (2 * m > n + 3) {
                b.fail(w, "2M=" + std::to_string(2 * m) + " exceeds |w|+3=" + std::to_string(n + 3));
                return;
            }
            if (2 * m != n + 3)
                return;
            ++equalities;
            equality_lengths.insert(n);
            if (n % 2 == 0) {
                b.fail(w, "equality at even length " + std::to_string(n));
                return;
            }
            const auto s = w.symbols();
            if (!is_square(s.subspan(1)) && !is_square(s.first(n - 1)))
                b.fail(w, "equality witness " + w.to_text() + " is neither a.u.u nor u.u.a");
        });
    }
    b.note("overlap-free words checked: " + std::to_string(words));
    b.note("equality witnesses: " + std::to_string(equalities));
    std::string lengths = "equality lengths:";
    bool all_one_mod_four = true;
    for (auto n : equality_lengths) {
        lengths += " " + std::to_string(n);
        all_one_mod_four = all_one_mod_four && n % 4 == 1;
    }
    b.note(lengths);
    if (!equality_lengths.empty())
        b.note(all_one_mod_four ? "all equality lengths are 1 mod 4" : "some equality lengths are not 1 mod 4");
    return b.finish();
}

VerificationReport verify_construction(unsigned n_max)
{
    if (n_max < 1)
        throw std::invalid_argument("construction needs max-n >= 1");
    ReportBuilder b("construction");
    b.param("max_n", n_max);
    for (unsigned n = 1; n <= n_max; ++n) {
        auto [ok, result] = verify_wn(n);
        const std::string line = "n=" + std::to_string(n) + " length=" + std::to_string(result.word.size())
                                 + " M=" + std::to_string(result.report.m);
        if (ok)
            b.note(line);
        else
            b.fail(result.word, line + " fails");

        // mu(alpha(n)) is expected to start at letter 9 of the Thue-Morse word.
        const Word image = mu(alpha(n));
        const Word t = tm_prefix(8 + image.size());
        const bool at_nine = factor(t, 9, image.size()) == image;
        b.note("n=" + std::to_string(n) + " mu(alpha) at letter 9: " + (at_nine ? "agrees" : "disagrees"));
    }
    return b.finish();
}

VerificationReport verify_lemma_compose(std::size_t x_max, std::size_t w_max)
{
    if (x_max > 16 || w_max > 16)
        throw ResourceLimitError("lemma-compose bounds are limited to 16");
    ReportBuilder b("lemma-compose");
    b.param("max_x", as_param(x_max)).param("max_w", as_param(w_max));

    std::vector<Word> ws;
    for (std::size_t len = 1; len <= w_max; ++len)
        enumerate_all(len, [&](const Word& w) {
            if (is_overlap_free(w + w))
                ws.push_back(w);
        }, 16);

    std::uint64_t pairs = 0, empty_pairs = 0, empty_failures = 0;
    for (std::size_t xl = 0; xl <= x_max; ++xl) {
        enumerate_all(xl, [&](const Word& x) {
            for (const Word& w : ws) {
                if (!is_overlap_free(x + w))
                    continue;
                ++pairs;
                const bool empty_suffix = longest_common_suffix(x, w).empty();
                const Word composed = lemma2_compose(x, w);
                const bool ok = is_overlap_free(composed);
                // With s empty the composition is exactly x w w.
                if (empty_suffix) {
                    ++empty_pairs;
                    if (!ok)
                        ++empty_failures;
                }
                if (!ok)
                    b.fail(composed, "x=" + x.to_text() + " w=" + w.to_text() + (empty_suffix ? " (s empty)" : ""));
            }
        }, 16);
    }
    b.note("hypothesis pairs: " + std::to_string(pairs));
    b.note("pairs with empty common suffix: " + std::to_string(empty_pairs) + ", of which "
           + std::to_string(empty_failures) + " fail");
    return b.finish();
}

std::vector<std::size_t> default_tm_offsets()
{
    std::vector<std::size_t> offsets;
    for (std::size_t o = 0; o <= 64; o += 2)
        offsets.push_back(o);
    return offsets;
}

VerificationReport verify_tm_even(std::size_t len_max, const std::vector<std::size_t>& offsets)
{
    if (len_max < 4)
        throw std::invalid_argument("tm-even needs max-length >= 4");
    for (auto o : offsets)
        if (o % 2 != 0)
            throw std::invalid_argument("tm-even offsets must be even");
    ReportBuilder b("tm-even");
    b.param("max_length", as_param(len_max));
    std::string offs = "offsets:";
    for (auto o : offsets)
        offs += " " + std::to_string(o);
    b.note(offs);

    const std::size_t max_offset = offsets.empty() ? 0 : *std::max_element(offsets.begin(), offsets.end());
    const Word t = tm_prefix(max_offset + len_max);
    std::uint64_t checked = 0;
    for (std::size_t n = 4; n <= len_max; n += 2) {
        for (auto o : offsets) {
            const Word w = factor(t, o + 1, n);
            const auto cs = centres(w);
            ++checked;
            const bool even = std::all_of(cs.begin(), cs.end(), [](Position p) { return p.gap % 2 == 0; });
            if (!even || cs.size() != n / 2 - 1)
                b.fail(w, "n=" + std::to_string(n) + " offset=" + std::to_string(o) + " M=" + std::to_string(cs.size())
                              + (even ? "" : " with an odd centre"));
        }
    }
    b.note("factors checked: " + std::to_string(checked));
    return b.finish();
}

VerificationReport verify_pansiot(std::size_t prefix_len)
{
    if (prefix_len < 4)
        throw std::invalid_argument("pansiot needs prefix-length >= 4");
    ReportBuilder b("pansiot");
    b.param("prefix_length", as_param(prefix_len));
    const Word t = tm_prefix(prefix_len);
    const std::set<Word> allowed{from_text("0"), from_text("1"), from_text("01"), from_text("10")};

    std::set<Word> roots;
    const auto fr = frames(t);
    for (const auto& f : fr) {
        roots.insert(f.root);
        if (!allowed.contains(f.root))
            b.fail(f.root + f.root, "frame at centre " + std::to_string(f.centre.gap) + " has root " + f.root.to_text());
    }
    const auto cs = centres(t);
    for (std::size_t i = 1; i < cs.size(); ++i)
        if (cs[i].gap == cs[i - 1].gap + 1) {
            const std::size_t lo = cs[i - 1].gap;
            const std::size_t start = lo > 3 ? lo - 3 : 1;
            b.fail(factor(t, start, std::min<std::size_t>(8, t.size() - start + 1)),
                   "consecutive centres " + std::to_string(lo) + " and " + std::to_string(lo + 1));
        }
    std::string seen = "frame roots:";
    for (const auto& r : roots)
        seen += " " + r.to_text();
    b.note(seen);
    b.note("frames: " + std::to_string(fr.size()) + ", centres: " + std::to_string(cs.size()));
    return b.finish();
}

VerificationReport verify_alpha_recurrence(unsigned n_max)
{
    if (n_max < 1)
        throw std::invalid_argument("alpha-recurrence needs max-n >= 1");
    ReportBuilder b("alpha-recurrence");
    b.param("max_n", n_max);
    if (alpha(1) != from_text("100110"))
        b.fail(alpha(1), "alpha(1) differs from 100110");
    if (alpha(2) != from_text("100110010110"))
        b.fail(alpha(2), "alpha(2) differs from 100110010110");
    const Word head = from_text("1001");
    for (unsigned n = 1; n <= n_max; ++n) {
        const Word image = mu(alpha(n));
        const Word next = alpha(n + 1);
        if (next != head + drop_suffix(image, 4))
            b.fail(next, "recurrence fails at n=" + std::to_string(n));
        if (!is_conjugate(next, image))
            b.fail(next, "alpha(" + std::to_string(n + 1) + ") is not a conjugate of mu(alpha(" + std::to_string(n) + "))");
    }
    return b.finish();
}

} // namespace squares
