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

#ifndef SQUARES_SERIALIZE_HPP
#define SQUARES_SERIALIZE_HPP

#include "squares/constructions.hpp"
#include "squares/enumeration.hpp"
#include "squares/repetition.hpp"
#include "squares/verify.hpp"

#include <json.hpp>

#include <string>

namespace squares {

// Canonical documents: keys in declaration order, compact single-line text.
using Document = nlohmann::ordered_json;

Document to_document(const AnalysisReport& r);
Document to_document(const ConstructionResult& r);
Document to_document(const EnumerationSummary& s);
Document to_document(const VerificationReport& r);

/// word, length, overlap_free, M, comma-joined centres; tab separated, no
/// trailing newline.
std::string to_tsv(const AnalysisReport& r);

std::string dump(const Document& d);

} // namespace squares

#endif // SQUARES_SERIALIZE_HPP
