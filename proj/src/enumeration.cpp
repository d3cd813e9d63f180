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

#include "squares/enumeration.hpp"

#include "squares/repetition.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

namespace squares {

namespace {

template <class Visit>
void extend_overlap_free(std::vector<std::uint8_t>& buf, std::size_t n, Visit& visit, std::uint64_t& count)
{
    if (buf.size() == n) {
        ++count;
        visit(buf);
        return;
    }
    for (std::uint8_t c = 0; c < 2; ++c) {
        buf.push_back(c);
        if (!ends_with_overlap(buf))
            extend_overlap_free(buf, n, visit, count);
        buf.pop_back();
    }
}

template <class Visit>
std::uint64_t walk_overlap_free(std::vector<std::uint8_t> buf, std::size_t n, Visit&& visit)
{
    std::uint64_t count = 0;
    if (buf.size() > n)
        return 0;
    for (std::size_t k = 1; k <= buf.size(); ++k)
        if (ends_with_overlap(std::span(buf).first(k)))
            return 0;
    extend_overlap_free(buf, n, visit, count);
    return count;
}

void check_cap(std::size_t n, std::size_t cap, const char* what)
{
    if (n > cap)
        throw ResourceLimitError(std::string(what) + " enumeration at length " + std::to_string(n)
                                 + " exceeds the configured cap of " + std::to_string(cap));
}

void insert_witness(std::vector<Word>& list, const Word& w, std::size_t limit)
{
    auto it = std::lower_bound(list.begin(), list.end(), w);
    if (it != list.end() && *it == w)
        return;
    if (list.size() >= limit && it == list.end())
        return;
    list.insert(it, w);
    if (list.size() > limit)
        list.pop_back();
}

class Accumulator {
public:
    Accumulator(std::size_t n, WordClass c, std::size_t limit) : limit_(limit)
    {
        summary_.length = n;
        summary_.word_class = c;
    }

    void add(const Word& w)
    {
        const std::size_t m = count_centres(w);
        auto& s = summary_;
        if (s.total == 0 || m < s.m_min) {
            s.m_min = m;
            s.min_witnesses.clear();
        }
        if (s.total == 0 || m > s.m_max) {
            s.m_max = m;
            s.max_witnesses.clear();
        }
        if (m == s.m_min)
            insert_witness(s.min_witnesses, w, limit_);
        if (m == s.m_max)
            insert_witness(s.max_witnesses, w, limit_);
        ++s.m_histogram[m];
        ++s.total;
    }

    EnumerationSummary take() { return std::move(summary_); }

private:
    std::size_t limit_;
    EnumerationSummary summary_;
};

// Runs task(i) for i in [0, tasks) on up to `workers` threads.
template <class Task>
void run_pool(std::size_t tasks, unsigned workers, Task&& task)
{
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(tasks, 1))));
    if (workers == 1) {
        for (std::size_t i = 0; i < tasks; ++i)
            task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < workers; ++k)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < tasks; i = next++)
                task(i);
        });
}

} // namespace

const char* to_string(WordClass c) noexcept
{
    return c == WordClass::all_binary ? "all-binary" : "overlap-free";
}

bool ends_with_overlap(std::span<const std::uint8_t> w)
{
    const std::size_t m = w.size();
    for (std::size_t l = 1; 2 * l + 1 <= m; ++l) {
        const std::size_t from = m - 2 * l - 1;
        std::size_t i = from;
        while (i + l < m && w[i] == w[i + l])
            ++i;
        if (i + l == m)
            return true;
    }
    return false;
}

std::uint64_t enumerate_overlap_free(std::size_t n, const WordConsumer& consumer)
{
    return enumerate_overlap_free(Word{}, n, consumer);
}

std::uint64_t enumerate_overlap_free(const Word& prefix, std::size_t n, const WordConsumer& consumer)
{
    std::vector<std::uint8_t> buf(prefix.begin(), prefix.end());
    buf.reserve(n);
    return walk_overlap_free(std::move(buf), n, [&](const std::vector<std::uint8_t>& w) {
        consumer(Word::from_symbols(w));
    });
}

std::uint64_t enumerate_all(std::size_t n, const WordConsumer& consumer, std::size_t cap)
{
    check_cap(n, std::min<std::size_t>(cap, 62), "all-binary");
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < total; ++bits)
        consumer(Word::from_bits(bits, n));
    return total;
}

EnumerationSummary merge(const EnumerationSummary& a, const EnumerationSummary& b, std::size_t witness_limit)
{
    if (a.total == 0)
        return b;
    if (b.total == 0)
        return a;
    EnumerationSummary out;
    out.length = a.length;
    out.word_class = a.word_class;
    out.total = a.total + b.total;
    out.m_histogram = a.m_histogram;
    for (auto [m, c] : b.m_histogram)
        out.m_histogram[m] += c;

    auto pick = [&](std::size_t ma, const std::vector<Word>& wa, std::size_t mb, const std::vector<Word>& wb,
                    bool want_min, std::size_t& m, std::vector<Word>& dst) {
        if (ma == mb) {
            m = ma;
            dst = wa;
            for (const auto& w : wb)
                insert_witness(dst, w, witness_limit);
        } else if ((ma < mb) == want_min) {
            m = ma;
            dst = wa;
        } else {
            m = mb;
            dst = wb;
        }
    };
    pick(a.m_min, a.min_witnesses, b.m_min, b.min_witnesses, true, out.m_min, out.min_witnesses);
    pick(a.m_max, a.max_witnesses, b.m_max, b.max_witnesses, false, out.m_max, out.max_witnesses);
    return out;
}

unsigned default_workers()
{
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("CENTRES_MAX_WORKERS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && cap >= 1)
            workers = std::min<unsigned>(workers, static_cast<unsigned>(cap));
    }
    return workers;
}

EnumerationSummary stats(std::size_t n, WordClass word_class, const EnumerationOptions& options)
{
    const unsigned workers = options.workers == 0 ? default_workers() : options.workers;
    const std::size_t limit = options.witness_limit;

    std::vector<EnumerationSummary> parts;
    if (word_class == WordClass::all_binary) {
        check_cap(n, std::min<std::size_t>(options.all_binary_cap, 40), "all-binary");
        // Tasks are the 2^k blocks sharing their leading k letters.
        const std::size_t k = std::min<std::size_t>(n, 8);
        const std::size_t tasks = std::size_t{1} << k;
        const std::uint64_t block = std::uint64_t{1} << (n - k);
        parts.resize(tasks);
        run_pool(tasks, workers, [&](std::size_t t) {
            Accumulator acc(n, word_class, limit);
            for (std::uint64_t bits = t * block; bits < (t + 1) * block; ++bits)
                acc.add(Word::from_bits(bits, n));
            parts[t] = acc.take();
        });
    } else {
        check_cap(n, options.overlap_free_cap, "overlap-free");
        // Tasks are the overlap-free prefixes of a fixed length.
        std::vector<Word> seeds;
        enumerate_overlap_free(std::min<std::size_t>(n, 10), [&](const Word& w) { seeds.push_back(w); });
        parts.resize(seeds.size());
        run_pool(seeds.size(), workers, [&](std::size_t t) {
            Accumulator acc(n, word_class, limit);
            enumerate_overlap_free(seeds[t], n, [&](const Word& w) { acc.add(w); });
            parts[t] = acc.take();
        });
    }

    EnumerationSummary out;
    out.length = n;
    out.word_class = word_class;
    for (const auto& p : parts)
        out = merge(out, p, limit);
    return out;
}

} // namespace squares
