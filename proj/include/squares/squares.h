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

/* C interface to the squares library. All handles are opaque; every call
 * reports an sq_status and, on failure, leaves a thread-local message
 * readable through sq_last_error(). Strings returned through sq_string are
 * owned by the caller and released with sq_string_free. */

#ifndef SQUARES_SQUARES_H
#define SQUARES_SQUARES_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SQUARES_BUILDING)
#    define SQ_API __declspec(dllexport)
#  else
#    define SQ_API __declspec(dllimport)
#  endif
#else
#  define SQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sq_status {
    SQ_OK = 0,
    SQ_ERR_INVALID_ARGUMENT = 1, /* malformed word, bad parameter */
    SQ_ERR_OUT_OF_RANGE = 2,     /* index or position outside the word */
    SQ_ERR_RESOURCE_LIMIT = 3,   /* enumeration cap exceeded */
    SQ_ERR_NULL_POINTER = 4,
    SQ_ERR_INTERNAL = 5
} sq_status;

typedef enum sq_format { SQ_FORMAT_JSON = 0, SQ_FORMAT_TSV = 1 } sq_format;
typedef enum sq_tier { SQ_TIER_FAST = 0, SQ_TIER_BRUTEFORCE = 1 } sq_tier;
typedef enum sq_word_class { SQ_CLASS_OVERLAP_FREE = 0, SQ_CLASS_ALL = 1 } sq_word_class;
typedef enum sq_check {
    SQ_CHECK_MIN_CENTRES = 0,   /* a = from, b = to */
    SQ_CHECK_UPPER_BOUND = 1,   /* a = max length */
    SQ_CHECK_CONSTRUCTION = 2,  /* a = max n */
    SQ_CHECK_LEMMA_COMPOSE = 3, /* a = max |x|, b = max |w| */
    SQ_CHECK_TM_EVEN = 4,       /* a = max length */
    SQ_CHECK_PANSIOT = 5,       /* a = prefix length */
    SQ_CHECK_ALPHA_RECURRENCE = 6 /* a = max n */
} sq_check;

typedef struct sq_word sq_word;
typedef struct sq_string sq_string;

typedef struct sq_options {
    unsigned workers;          /* 0 = default (CENTRES_MAX_WORKERS aware) */
    size_t all_binary_cap;     /* 0 = default 18 */
    size_t overlap_free_cap;   /* 0 = default 1000 */
} sq_options;

/* Called once per enumerated word with its '0'/'1' text (not terminated). */
typedef void (*sq_word_callback)(const char* text, size_t length, void* user);

SQ_API const char* sq_version(void);
SQ_API const char* sq_last_error(void);
SQ_API const char* sq_status_name(sq_status status);

SQ_API const char* sq_string_data(const sq_string* s);
SQ_API size_t sq_string_size(const sq_string* s);
SQ_API void sq_string_free(sq_string* s);

/* On SQ_ERR_INVALID_ARGUMENT, *bad_index (if non-null) receives the 1-based
 * index of the first character that is not '0' or '1'. */
SQ_API sq_status sq_word_from_text(const char* text, size_t length, sq_word** out, size_t* bad_index);
SQ_API void sq_word_free(sq_word* w);
SQ_API size_t sq_word_length(const sq_word* w);
SQ_API sq_status sq_word_to_text(const sq_word* w, sq_string** out);

SQ_API sq_status sq_count_centres(const sq_word* w, sq_tier tier, size_t* out);
/* Writes up to `capacity` centres; *count receives the total. */
SQ_API sq_status sq_centres(const sq_word* w, sq_tier tier, size_t* centres, size_t capacity, size_t* count);
SQ_API sq_status sq_is_overlap_free(const sq_word* w, int* out);
SQ_API sq_status sq_analyze(const sq_word* w, sq_format format, sq_string** out);

SQ_API sq_status sq_tm_prefix(size_t length, sq_word** out);
SQ_API sq_status sq_alpha(unsigned n, sq_word** out);
/* ConstructionResult document for w_n. */
SQ_API sq_status sq_construct_wn(unsigned n, sq_string** out);

SQ_API sq_status sq_enumerate(size_t length, sq_word_class word_class, const sq_options* options,
                              sq_word_callback callback, void* user, uint64_t* visited);
SQ_API sq_status sq_stats(size_t length, sq_word_class word_class, const sq_options* options, sq_string** out);

/* *passed receives 1 or 0; the report document goes to *out. */
SQ_API sq_status sq_verify(sq_check check, int64_t a, int64_t b, const sq_options* options, int* passed,
                           sq_string** out);

SQ_API sq_status sq_bench(sq_tier tier, size_t length, unsigned trials, uint64_t seed, sq_string** out);

#ifdef __cplusplus
}
#endif

#endif /* SQUARES_SQUARES_H */
