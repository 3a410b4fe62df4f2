// Copyright 2026 The modframe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "modframe/module_space.hpp"
#include "modframe/nonunital.hpp"

namespace modframe {

/// A frame document: algebra shape, module rank and a possibly empty family.
struct FrameDocument {
    AlgebraShape shape;
    std::size_t rank;
    std::vector<ModuleVector> vectors;
};

// Parsers throw ParseError for malformed JSON or wrong value types and
// DimensionError / ShapeMismatch for sizes inconsistent with the declared shape.

/// {"algebra": {"block_dims": [..]}, "module_rank": m, "vectors": [vector]}, where a
/// vector is m components, a component is one matrix per block, and a matrix is a
/// list of rows of [re, im] pairs.
FrameDocument parse_frame_document(std::string_view text);
std::string frame_document_json(const AlgebraShape& shape, std::size_t rank, const std::vector<ModuleVector>& vectors);

/// {"algebra": {...}, "rows": N, "cols": m, "entries": [[component]]}, entries
/// being N rows of m algebra elements in the component layout above.
ModuleOperator parse_operator_document(std::string_view text);
std::string operator_document_json(const ModuleOperator& t);

/// {"elements": [{"prefix": [[re, im], ...], "tail": [re, im]}]}
std::vector<nonunital::TailSequence> parse_nonunital_document(std::string_view text);
std::string nonunital_document_json(const std::vector<nonunital::TailSequence>& elements);

}  // namespace modframe
