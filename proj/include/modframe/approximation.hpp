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
#include <optional>

#include "modframe/frames.hpp"

namespace modframe {

struct PerturbationVerdict {
    double distance;                        // ||U - V||
    double radius;                          // sqrt(A) of the reference frame
    bool within;                            // distance < radius
    std::optional<double> guaranteed_lower; // (sqrt(A) - distance)^2 when within
    double per_element_bound;               // ||x_n - y_n|| <= distance
};

/// How far `candidate` sits from `f` in analysis-operator distance, and what
/// lower frame bound that distance guarantees.
PerturbationVerdict perturb_check(const FrameSystem& f, const FrameSystem& candidate);

struct RemovalResult {
    bool removable;                    // ||x_j|| < sqrt(A) - tol
    double element_norm;
    double radius;
    std::optional<FrameReport> remaining;  // absent only when nothing remains
};

RemovalResult removal_check(const FrameSystem& f, std::size_t j, double tol_frame = kFrameTol);

struct ApproximationResult {
    FrameSystem approx;
    double distance;       // direct ||U - V||
    double closed_form;    // formula in terms of the optimal bounds
    double tight_constant; // 1 for the Parseval approximation
};

/// Canonical Parseval frame and its distance max{1 - sqrt(A), sqrt(B) - 1}.
ApproximationResult best_parseval(const FrameSystem& f, double tol_frame = kFrameTol);

/// ((sqrt(A) + sqrt(B)) / 2) U S^{-1/2}, at distance (sqrt(B) - sqrt(A)) / 2.
ApproximationResult best_tight(const FrameSystem& f, double tol_frame = kFrameTol);

}  // namespace modframe
