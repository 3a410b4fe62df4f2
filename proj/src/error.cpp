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

#include "modframe/error.hpp"

namespace modframe {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NonSquare: return "NonSquare";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::DimensionError: return "DimensionError";
        case ErrorCode::NotPositive: return "NotPositive";
        case ErrorCode::SingularElement: return "SingularElement";
        case ErrorCode::NotAFrame: return "NotAFrame";
        case ErrorCode::NotSurjective: return "NotSurjective";
        case ErrorCode::ChainNotIncreasing: return "ChainNotIncreasing";
        case ErrorCode::LastNotIdentity: return "LastNotIdentity";
        case ErrorCode::NotContraction: return "NotContraction";
        case ErrorCode::NotDual: return "NotDual";
        case ErrorCode::LowerBoundBelowOne: return "LowerBoundBelowOne";
        case ErrorCode::InsufficientCorank: return "InsufficientCorank";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::NotDominated: return "NotDominated";
        case ErrorCode::BesselBoundExceedsOne: return "BesselBoundExceedsOne";
        case ErrorCode::EmptySystem: return "EmptySystem";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace modframe
