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

#include "squares/squares.h"

#include "squares/bench.hpp"
#include "squares/constructions.hpp"
#include "squares/enumeration.hpp"
#include "squares/repetition.hpp"
#include "squares/serialize.hpp"
#include "squares/thue_morse.hpp"
#include "squares/verify.hpp"

#include <exception>
#include <new>
#include <stdexcept>
#include <string>

struct sq_word {
    squares::Word value;
};

struct sq_string {
    std::string value;
};

namespace {

thread_local std::string last_error;

template <class Body>
sq_status guarded(Body&& body) noexcept
{
    try {
        last_error.clear();
        return body();
    } catch (const squares::ResourceLimitError& e) {
        last_error = e.what();
        return SQ_ERR_RESOURCE_LIMIT;
    } catch (const std::out_of_range& e) {
        last_error = e.what();
        return SQ_ERR_OUT_OF_RANGE;
    } catch (const std::invalid_argument& e) {
        last_error = e.what();
        return SQ_ERR_INVALID_ARGUMENT;
    } catch (const std::length_error& e) {
        last_error = e.what();
        return SQ_ERR_RESOURCE_LIMIT;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return SQ_ERR_RESOURCE_LIMIT;
    } catch (const std::exception& e) {
        last_error = e.what();
        return SQ_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return SQ_ERR_INTERNAL;
    }
}

sq_status null_arg(const char* name)
{
    last_error = std::string("null argument: ") + name;
    return SQ_ERR_NULL_POINTER;
}

sq_status emit(std::string text, sq_string** out)
{
    *out = new sq_string{std::move(text)};
    return SQ_OK;
}

squares::Tier to_tier(sq_tier t)
{
    return t == SQ_TIER_BRUTEFORCE ? squares::Tier::bruteforce : squares::Tier::fast;
}

squares::WordClass to_class(sq_word_class c)
{
    return c == SQ_CLASS_ALL ? squares::WordClass::all_binary : squares::WordClass::overlap_free;
}

squares::EnumerationOptions to_options(const sq_options* o)
{
    squares::EnumerationOptions opts;
    if (o != nullptr) {
        opts.workers = o->workers;
        if (o->all_binary_cap != 0)
            opts.all_binary_cap = o->all_binary_cap;
        if (o->overlap_free_cap != 0)
            opts.overlap_free_cap = o->overlap_free_cap;
    }
    return opts;
}

std::size_t nonnegative(std::int64_t v, const char* name)
{
    if (v < 0)
        throw std::invalid_argument(std::string(name) + " must be nonnegative");
    return static_cast<std::size_t>(v);
}

unsigned small(std::int64_t v, const char* name)
{
    if (v < 0 || v > 64)
        throw std::invalid_argument(std::string(name) + " must be in [0, 64]");
    return static_cast<unsigned>(v);
}

} // namespace

extern "C" {

const char* sq_version(void)
{
    return "1.0.0";
}

const char* sq_last_error(void)
{
    return last_error.c_str();
}

const char* sq_status_name(sq_status status)
{
    switch (status) {
    case SQ_OK: return "ok";
    case SQ_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SQ_ERR_OUT_OF_RANGE: return "out of range";
    case SQ_ERR_RESOURCE_LIMIT: return "resource limit";
    case SQ_ERR_NULL_POINTER: return "null pointer";
    case SQ_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* sq_string_data(const sq_string* s)
{
    return s != nullptr ? s->value.c_str() : "";
}

size_t sq_string_size(const sq_string* s)
{
    return s != nullptr ? s->value.size() : 0;
}

void sq_string_free(sq_string* s)
{
    delete s;
}

sq_status sq_word_from_text(const char* text, size_t length, sq_word** out, size_t* bad_index)
{
    if (out == nullptr || (text == nullptr && length != 0))
        return null_arg("text/out");
    if (bad_index != nullptr)
        *bad_index = 0;
    return guarded([&] {
        try {
            *out = new sq_word{squares::from_text(std::string_view(text != nullptr ? text : "", length))};
        } catch (const squares::ParseError& e) {
            if (bad_index != nullptr)
                *bad_index = e.index();
            throw;
        }
        return SQ_OK;
    });
}

void sq_word_free(sq_word* w)
{
    delete w;
}

size_t sq_word_length(const sq_word* w)
{
    return w != nullptr ? w->value.size() : 0;
}

sq_status sq_word_to_text(const sq_word* w, sq_string** out)
{
    if (w == nullptr || out == nullptr)
        return null_arg("word/out");
    return guarded([&] { return emit(w->value.to_text(), out); });
}

sq_status sq_count_centres(const sq_word* w, sq_tier tier, size_t* out)
{
    if (w == nullptr || out == nullptr)
        return null_arg("word/out");
    return guarded([&] {
        *out = squares::count_centres(w->value, to_tier(tier));
        return SQ_OK;
    });
}

sq_status sq_centres(const sq_word* w, sq_tier tier, size_t* centres, size_t capacity, size_t* count)
{
    if (w == nullptr || count == nullptr || (centres == nullptr && capacity != 0))
        return null_arg("word/centres/count");
    return guarded([&] {
        const auto cs = squares::centres(w->value, to_tier(tier));
        *count = cs.size();
        for (std::size_t i = 0; i < cs.size() && i < capacity; ++i)
            centres[i] = cs[i].gap;
        return SQ_OK;
    });
}

sq_status sq_is_overlap_free(const sq_word* w, int* out)
{
    if (w == nullptr || out == nullptr)
        return null_arg("word/out");
    return guarded([&] {
        *out = squares::is_overlap_free(w->value) ? 1 : 0;
        return SQ_OK;
    });
}

sq_status sq_analyze(const sq_word* w, sq_format format, sq_string** out)
{
    if (w == nullptr || out == nullptr)
        return null_arg("word/out");
    return guarded([&] {
        const auto report = squares::analyze(w->value);
        return emit(format == SQ_FORMAT_TSV ? squares::to_tsv(report) : squares::dump(squares::to_document(report)),
                    out);
    });
}

sq_status sq_tm_prefix(size_t length, sq_word** out)
{
    if (out == nullptr)
        return null_arg("out");
    return guarded([&] {
        *out = new sq_word{squares::tm_prefix(length)};
        return SQ_OK;
    });
}

sq_status sq_alpha(unsigned n, sq_word** out)
{
    if (out == nullptr)
        return null_arg("out");
    return guarded([&] {
        *out = new sq_word{squares::alpha(n)};
        return SQ_OK;
    });
}

sq_status sq_construct_wn(unsigned n, sq_string** out)
{
    if (out == nullptr)
        return null_arg("out");
    return guarded([&] { return emit(squares::dump(squares::to_document(squares::build_wn(n))), out); });
}

sq_status sq_enumerate(size_t length, sq_word_class word_class, const sq_options* options, sq_word_callback callback,
                       void* user, uint64_t* visited)
{
    if (callback == nullptr)
        return null_arg("callback");
    return guarded([&] {
        const auto opts = to_options(options);
        std::string text;
        auto forward = [&](const squares::Word& w) {
            text = w.to_text();
            callback(text.data(), text.size(), user);
        };
        std::uint64_t n = 0;
        if (word_class == SQ_CLASS_ALL) {
            n = squares::enumerate_all(length, forward, opts.all_binary_cap);
        } else {
            if (length > opts.overlap_free_cap)
                throw squares::ResourceLimitError("overlap-free enumeration length exceeds the configured cap");
            n = squares::enumerate_overlap_free(length, forward);
        }
        if (visited != nullptr)
            *visited = n;
        return SQ_OK;
    });
}

sq_status sq_stats(size_t length, sq_word_class word_class, const sq_options* options, sq_string** out)
{
    if (out == nullptr)
        return null_arg("out");
    return guarded([&] {
        return emit(squares::dump(squares::to_document(squares::stats(length, to_class(word_class), to_options(options)))),
                    out);
    });
}

sq_status sq_verify(sq_check check, int64_t a, int64_t b, const sq_options* options, int* passed, sq_string** out)
{
    if (passed == nullptr || out == nullptr)
        return null_arg("passed/out");
    return guarded([&] {
        squares::VerificationReport report;
        switch (check) {
        case SQ_CHECK_MIN_CENTRES:
            report = squares::verify_min_centres(nonnegative(a, "from"), nonnegative(b, "to"), to_options(options));
            break;
        case SQ_CHECK_UPPER_BOUND:
            report = squares::verify_upper_bound(nonnegative(a, "max-length"));
            break;
        case SQ_CHECK_CONSTRUCTION:
            report = squares::verify_construction(small(a, "max-n"));
            break;
        case SQ_CHECK_LEMMA_COMPOSE:
            report = squares::verify_lemma_compose(nonnegative(a, "max-x"), nonnegative(b, "max-w"));
            break;
        case SQ_CHECK_TM_EVEN:
            report = squares::verify_tm_even(nonnegative(a, "max-length"));
            break;
        case SQ_CHECK_PANSIOT:
            report = squares::verify_pansiot(nonnegative(a, "prefix-length"));
            break;
        case SQ_CHECK_ALPHA_RECURRENCE:
            report = squares::verify_alpha_recurrence(small(a, "max-n"));
            break;
        default:
            throw std::invalid_argument("unknown check");
        }
        *passed = report.passed ? 1 : 0;
        return emit(squares::dump(squares::to_document(report)), out);
    });
}

sq_status sq_bench(sq_tier tier, size_t length, unsigned trials, uint64_t seed, sq_string** out)
{
    if (out == nullptr)
        return null_arg("out");
    return guarded([&] { return emit(squares::to_tsv(squares::run_bench(to_tier(tier), length, trials, seed)), out); });
}

} // extern "C"
