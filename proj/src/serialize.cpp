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

#include "squares/serialize.hpp"

namespace squares {

namespace {

Document words(const std::vector<Word>& ws)
{
    Document out = Document::array();
    for (const auto& w : ws)
        out.push_back(w.to_text());
    return out;
}

} // namespace

Document to_document(const AnalysisReport& r)
{
    Document centres = Document::array();
    for (auto p : r.centres)
        centres.push_back(p.gap);
    Document squares = Document::array();
    for (const auto& s : r.minimal_squares)
        squares.push_back(Document{{"centre", s.centre.gap}, {"root", s.root.to_text()}, {"root_length", s.root_length}});
    return Document{
        {"word", r.word.to_text()},
        {"length", r.length},
        {"overlap_free", r.overlap_free},
        {"centres", std::move(centres)},
        {"M", r.m},
        {"minimal_squares", std::move(squares)},
        {"bound_lhs", r.bound_lhs},
        {"bound_rhs", r.bound_rhs},
        {"tight", r.tight},
    };
}

Document to_document(const ConstructionResult& r)
{
    return Document{
        {"word", r.word.to_text()},
        {"n", r.n},
        {"expected_length", r.expected_length},
        {"report", to_document(r.report)},
    };
}

Document to_document(const EnumerationSummary& s)
{
    Document hist = Document::array();
    for (auto [m, c] : s.m_histogram)
        hist.push_back(Document::array({m, c}));
    return Document{
        {"length", s.length},
        {"word_class", to_string(s.word_class)},
        {"total", s.total},
        {"m_min", s.m_min},
        {"m_max", s.m_max},
        {"m_histogram", std::move(hist)},
        {"min_witnesses", words(s.min_witnesses)},
        {"max_witnesses", words(s.max_witnesses)},
    };
}

Document to_document(const VerificationReport& r)
{
    Document params = Document::object();
    for (const auto& [k, v] : r.parameters)
        params[k] = v;
    return Document{
        {"check_name", r.check_name},
        {"parameters", std::move(params)},
        {"pass", r.passed},
        {"counterexamples", words(r.counterexamples)},
        {"notes", r.notes},
    };
}

std::string to_tsv(const AnalysisReport& r)
{
    std::string centres;
    for (std::size_t i = 0; i < r.centres.size(); ++i) {
        if (i > 0)
            centres += ',';
        centres += std::to_string(r.centres[i].gap);
    }
    return r.word.to_text() + '\t' + std::to_string(r.length) + '\t' + (r.overlap_free ? "true" : "false") + '\t'
           + std::to_string(r.m) + '\t' + centres;
}

std::string dump(const Document& d)
{
    return d.dump();
}

} // namespace squares
