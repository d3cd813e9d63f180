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

#include "squares/constructions.hpp"

#include "squares/thue_morse.hpp"

namespace squares {

ConstructionResult build_wn(unsigned n)
{
    const Word a = alpha(n);
    ConstructionResult result;
    result.n = n;
    result.word = from_text("00") + a + drop_suffix(a, 1);
    result.expected_length = 2 * a.size() + 1;
    result.report = analyze(result.word);
    return result;
}

Word lemma2_compose(const Word& x, const Word& w)
{
    const Word s = longest_common_suffix(x, w);
    return x + w + drop_suffix(w, s.size());
}

std::pair<bool, ConstructionResult> verify_wn(unsigned n)
{
    auto result = build_wn(n);
    static const Word special = from_text("001001");
    const auto& r = result.report;
    const bool ok = result.word.size() == result.expected_length && r.overlap_free
                    && is_prefix_of(special, result.word) && r.bound_lhs == r.bound_rhs;
    return {ok, std::move(result)};
}

} // namespace squares
