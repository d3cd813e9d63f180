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

#ifndef SQUARES_VERIFY_HPP
#define SQUARES_VERIFY_HPP

#include "squares/enumeration.hpp"
#include "squares/word.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace squares {

struct VerificationReport {
    std::string check_name;
    std::vector<std::pair<std::string, std::int64_t>> parameters;
    bool passed = true;
    /// Nonempty exactly when the check failed. Truncated to
    /// `counterexample_limit` entries; the notes carry the full count.
    std::vector<Word> counterexamples;
    std::vector<std::string> notes;
};

inline constexpr std::size_t counterexample_limit = 16;

/// Exhaustive minimum of M over all 2^n words against ceil(n/2) - 2.
/// Length 4 is reported as a known exception when its minimum is 1.
VerificationReport verify_min_centres(std::size_t n_from, std::size_t n_to, const EnumerationOptions& options = {});

/// 2M <= |w| + 3 over every overlap-free word up to n_max, with the shape of
/// the equality cases.
VerificationReport verify_upper_bound(std::size_t n_max);

/// verify_wn for n = 1 .. n_max.
VerificationReport verify_construction(unsigned n_max);

/// x w (w s^-1) is overlap-free whenever x w and w w are.
VerificationReport verify_lemma_compose(std::size_t x_max, std::size_t w_max);

std::vector<std::size_t> default_tm_offsets();
/// Even-length factors of the Thue-Morse word after even-length prefixes:
/// all centres even and M = n/2 - 1.
VerificationReport verify_tm_even(std::size_t len_max, const std::vector<std::size_t>& offsets = default_tm_offsets());

/// Unbordered square roots of a Thue-Morse prefix lie in {0, 1, 01, 10}
/// and no two adjacent gaps are both centres.
VerificationReport verify_pansiot(std::size_t prefix_len);

/// alpha(n+1) = 1001 mu(alpha(n)) with its last four letters deleted, and it
/// is a conjugate of mu(alpha(n)).
VerificationReport verify_alpha_recurrence(unsigned n_max);

} // namespace squares

#endif // SQUARES_VERIFY_HPP
