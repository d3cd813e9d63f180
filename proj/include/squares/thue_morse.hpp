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

#ifndef SQUARES_THUE_MORSE_HPP
#define SQUARES_THUE_MORSE_HPP

#include "squares/word.hpp"

#include <cstddef>

namespace squares {

/// The uniform morphism 0 -> 01, 1 -> 10.
struct MorphismImage {
    Word image_of_zero = from_text("01");
    Word image_of_one = from_text("10");
};

Word mu(const Word& w);

/// Prefix of length L of the Thue-Morse word, by repeated doubling
/// w <- w complement(w).
Word tm_prefix(std::size_t length);
/// Factor of the Thue-Morse word at 1-based letter index `start`.
Word tm_factor(std::size_t start, std::size_t len);

/// Factor of length 3 * 2^n starting at letter 5. Requires n >= 1.
Word alpha(unsigned n);
std::size_t alpha_length(unsigned n);

} // namespace squares

#endif // SQUARES_THUE_MORSE_HPP
