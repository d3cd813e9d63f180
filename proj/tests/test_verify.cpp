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

#include <doctest.h>

#include <algorithm>

using namespace squares;

namespace {

bool has_note(const VerificationReport& r, const std::string& needle)
{
    return std::any_of(r.notes.begin(), r.notes.end(),
                       [&](const std::string& n) { return n.find(needle) != std::string::npos; });
}

void check_consistent(const VerificationReport& r)
{
    CHECK(r.passed == r.counterexamples.empty());
}

} // namespace

TEST_CASE("min-centres")
{
    auto r = verify_min_centres(3, 3);
    CHECK(r.passed);
    CHECK(has_note(r, "n=3 empirical=0 formula=0"));
    r = verify_min_centres(5, 5);
    CHECK(r.passed);
    CHECK(has_note(r, "n=5 empirical=1 formula=1"));

    r = verify_min_centres(4, 4);
    CHECK(r.passed);
    CHECK(has_note(r, "n=4 empirical=1 formula=0 (known exception"));

    r = verify_min_centres(3, 14, {.workers = 2});
    CHECK(r.passed);
    check_consistent(r);

    CHECK_THROWS_AS(verify_min_centres(2, 5), std::invalid_argument);
    CHECK_THROWS_AS(verify_min_centres(6, 5), std::invalid_argument);
    CHECK_THROWS_AS(verify_min_centres(3, 19), ResourceLimitError);
}

TEST_CASE("upper-bound")
{
    auto r = verify_upper_bound(13);
    CHECK(r.passed);
    CHECK(has_note(r, "equality lengths: 13"));
    CHECK(has_note(r, "equality witnesses: 4"));
    check_consistent(r);

    r = verify_upper_bound(6);
    CHECK(r.passed);
    CHECK(has_note(r, "equality witnesses: 0"));

    // Never violated; equality also appears at 25 within this range.
    r = verify_upper_bound(30);
    CHECK(r.passed);
    CHECK(has_note(r, "equality lengths: 13 25"));
    CHECK(has_note(r, "all equality lengths are 1 mod 4"));

    r = verify_upper_bound(1);
    CHECK(r.passed);
    CHECK(r.counterexamples.empty());
}

TEST_CASE("construction")
{
    auto r = verify_construction(1);
    CHECK(r.passed);
    CHECK(has_note(r, "n=1 length=13 M=8"));
    r = verify_construction(8);
    CHECK(r.passed);
    CHECK(has_note(r, "n=8 length=1537"));
    CHECK(has_note(r, "n=8 mu(alpha) at letter 9: agrees"));
    CHECK_THROWS_AS(verify_construction(0), std::invalid_argument);
}

TEST_CASE("lemma-compose")
{
    auto r = verify_lemma_compose(1, 2);
    CHECK(r.passed);
    r = verify_lemma_compose(0, 9);
    CHECK(r.passed);
    CHECK(has_note(r, "hypothesis pairs: 34"));

    // The statement fails on six pairs within |x| <= 5, |w| <= 9, all with an
    // empty common suffix. First one: x = 0010, w = 01, x w w = 0010 01 01
    // contains 0010010.
    r = verify_lemma_compose(5, 9);
    CHECK_FALSE(r.passed);
    check_consistent(r);
    CHECK(has_note(r, "hypothesis pairs: 506"));
    const std::vector<Word> expected{from_text("00100101"), from_text("11011010"), from_text("00110011011"),
                                     from_text("0100100"),  from_text("1011011"),  from_text("11001100100")};
    CHECK(r.counterexamples == expected);
    CHECK(has_note(r, "x=0010 w=01 (s empty)"));
    CHECK(has_note(r, "of which 6 fail"));

    // Short prefixes are safe.
    CHECK(verify_lemma_compose(3, 9).passed);
}

TEST_CASE("tm-even")
{
    auto r = verify_tm_even(4, {0});
    CHECK(r.passed);
    r = verify_tm_even(12, {4});
    CHECK(r.passed);
    r = verify_tm_even(200);
    CHECK(r.passed);
    CHECK(has_note(r, "offsets: 0 2 4"));
    CHECK_THROWS_AS(verify_tm_even(2), std::invalid_argument);
    CHECK_THROWS_AS(verify_tm_even(10, {1}), std::invalid_argument);
}

TEST_CASE("pansiot")
{
    auto r = verify_pansiot(16);
    CHECK(r.passed);
    r = verify_pansiot(4);
    CHECK(r.passed);
    CHECK(has_note(r, "frame roots: 1"));
    r = verify_pansiot(1000);
    CHECK(r.passed);
    CHECK(has_note(r, "frame roots: 0 01 1 10"));
    CHECK_THROWS_AS(verify_pansiot(3), std::invalid_argument);
}

TEST_CASE("alpha-recurrence")
{
    const auto r = verify_alpha_recurrence(9);
    CHECK(r.passed);
    check_consistent(r);
}
