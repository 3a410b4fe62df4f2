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

#include "modframe/approximation.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "modframe/error.hpp"

namespace modframe {

PerturbationVerdict perturb_check(const FrameSystem& f, const FrameSystem& candidate) {
    if (f.shape() != candidate.shape() || f.rank() != candidate.rank() || f.size() != candidate.size()) {
        throw Error(ErrorCode::ShapeMismatch, "systems have different dimensions");
    }
    const FrameReport rep = analyze(f);
    PerturbationVerdict v;
    v.distance = operator_norm(sub(f.analysis(), candidate.analysis()));
    v.radius = rep.is_frame ? std::sqrt(rep.lower) : 0.0;
    v.within = v.distance < v.radius;
    if (v.within) v.guaranteed_lower = (v.radius - v.distance) * (v.radius - v.distance);
    v.per_element_bound = v.distance;
    return v;
}

RemovalResult removal_check(const FrameSystem& f, std::size_t j, double tol_frame) {
    if (j >= f.size()) throw Error(ErrorCode::IndexOutOfRange, "no vector at that index");
    const FrameReport rep = analyze(f, tol_frame);
    if (!rep.is_frame) throw Error(ErrorCode::NotAFrame, "system is not a frame");
    RemovalResult r;
    r.element_norm = module_norm(f.vector(j));
    r.radius = std::sqrt(rep.lower);
    r.removable = r.element_norm < r.radius - tol_frame;
    if (f.size() > 1) {
        std::vector<ModuleVector> rest;
        for (std::size_t n = 0; n < f.size(); ++n) {
            if (n != j) rest.push_back(f.vector(n));
        }
        r.remaining = analyze(FrameSystem(std::move(rest)), tol_frame);
    }
    return r;
}

ApproximationResult best_parseval(const FrameSystem& f, double tol_frame) {
    const FrameReport rep = analyze(f, tol_frame);
    FrameSystem approx = canonical_parseval(f, tol_frame);
    const double distance = operator_norm(sub(f.analysis(), approx.analysis()));
    const double closed = std::max(1.0 - std::sqrt(rep.lower), std::sqrt(rep.upper) - 1.0);
    return {std::move(approx), distance, closed, 1.0};
}

ApproximationResult best_tight(const FrameSystem& f, double tol_frame) {
    const FrameReport rep = analyze(f, tol_frame);
    if (!rep.is_frame) throw Error(ErrorCode::NotAFrame, "system is not a frame");
    const double ra = std::sqrt(rep.lower);
    const double rb = std::sqrt(rep.upper);
    const double lambda = 0.5 * (ra + rb);
    const ModuleOperator v0 = scale(compose(f.analysis(), operator_inv_sqrt(f.frame_operator())), lambda);
    FrameSystem approx = FrameSystem::from_analysis(v0);
    const double distance = operator_norm(sub(f.analysis(), v0));
    return {std::move(approx), distance, 0.5 * (rb - ra), lambda * lambda};
}

}  // namespace modframe
