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
#include <span>
#include <vector>

#include "modframe/module_space.hpp"

namespace modframe {

/// Relative frame threshold: a system is a frame iff
/// lambda_min(S) > kFrameTol * max(1, lambda_max(S)).
inline constexpr double kFrameTol = 1e-8;

/// Finite family (x_n) in A^m with its analysis operator U (N x m, U[n,i] = x_{n,i}*)
/// and frame operator S = U*U, both computed at construction.
class FrameSystem {
public:
    explicit FrameSystem(std::vector<ModuleVector> vectors);

    /// The family whose analysis operator is `u`: x_n = (row n of u)*.
    static FrameSystem from_analysis(const ModuleOperator& u);

    const std::vector<ModuleVector>& vectors() const noexcept { return vectors_; }
    const ModuleVector& vector(std::size_t n) const { return vectors_.at(n); }
    std::size_t size() const noexcept { return vectors_.size(); }
    std::size_t rank() const noexcept { return analysis_.in_rank(); }
    const AlgebraShape& shape() const noexcept { return analysis_.shape(); }

    const ModuleOperator& analysis() const noexcept { return analysis_; }
    ModuleOperator synthesis() const { return adjoint(analysis_); }
    const ModuleOperator& frame_operator() const noexcept { return frame_op_; }

private:
    FrameSystem(std::vector<ModuleVector> vectors, ModuleOperator analysis);

    std::vector<ModuleVector> vectors_;
    ModuleOperator analysis_;
    ModuleOperator frame_op_;
};

struct FrameReport {
    bool is_bessel = true;  // finite systems always are
    bool is_frame = false;
    double lower = 0.0;
    double upper = 0.0;
    bool is_parseval = false;
    bool is_tight = false;
    std::optional<double> tight_constant;
};

/// Optimal bounds from the spectrum of S, block by block.
FrameReport analyze(const FrameSystem& f, double tol_frame = kFrameTol);

/// Optimal bounds by operator norms instead of spectra:
/// B = ||U||^2 and A = ||S^{-1/2}||^{-2}. Requires a frame.
std::pair<double, double> bounds_from_norms(const FrameSystem& f, double tol_frame = kFrameTol);

/// sum_n theta_{x_n, x_n}
ModuleOperator frame_operator_as_theta_sum(const FrameSystem& f);

/// (S^{-1} x_n). Throws NotAFrame.
FrameSystem canonical_dual(const FrameSystem& f, double tol_frame = kFrameTol);

/// (S^{-1/2} x_n), analysis operator U S^{-1/2}. Throws NotAFrame.
FrameSystem canonical_parseval(const FrameSystem& f, double tol_frame = kFrameTol);

/// Columns of a surjection T: A^N -> A^m (an m x N operator); the synthesis
/// operator of the result is T. Throws NotSurjective.
FrameSystem frame_from_surjection(const ModuleOperator& t);

struct UnitChainResult {
    FrameSystem system;
    /// stage_end[s] is one past the last vector contributed by stage s.
    std::vector<std::size_t> stage_end;
    /// ||P_s - E_s|| for the stage partial theta-sums P_s.
    std::vector<double> stage_residual;
    /// P_s <= E_s in the operator order.
    std::vector<bool> stage_dominated;
};

/// Parseval frame peeled off an increasing chain of positive contractions
/// E_1 <= ... <= E_last = I: each increment E_s - E_{s-1} is written as a
/// theta-sum of the columns of its square root.
UnitChainResult parseval_from_unit_chain(std::span<const ModuleOperator> chain);

}  // namespace modframe
