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

#include "modframe/frames.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "modframe/error.hpp"

namespace modframe {

namespace {

constexpr double kChainTol = 1e-9;
constexpr double kPruneNorm = 1e-10;

ModuleOperator analysis_of(const std::vector<ModuleVector>& vectors) {
    if (vectors.empty()) throw Error(ErrorCode::EmptySystem, "frame system needs at least one vector");
    std::vector<ModuleOperator> rows;
    rows.reserve(vectors.size());
    for (const auto& x : vectors) {
        if (x.shape() != vectors.front().shape() || x.rank() != vectors.front().rank()) {
            throw Error(ErrorCode::ShapeMismatch, "frame vectors differ in algebra or rank");
        }
        rows.push_back(adjoint(x.as_column()));
    }
    return stack_rows(rows);
}

ModuleOperator hermitian_part(const ModuleOperator& t) {
    FlattenedBlocks blocks;
    for (const auto& b : t.blocks()) blocks.push_back(symmetrized(b));
    return unflatten(t.shape(), std::move(blocks), t.out_rank(), t.in_rank());
}

void require_frame(const FrameSystem& f, double tol_frame) {
    if (!analyze(f, tol_frame).is_frame) throw Error(ErrorCode::NotAFrame, "system is not a frame");
}

}  // namespace

FrameSystem::FrameSystem(std::vector<ModuleVector> vectors)
    : FrameSystem(vectors, analysis_of(vectors)) {}

FrameSystem::FrameSystem(std::vector<ModuleVector> vectors, ModuleOperator analysis)
    : vectors_(std::move(vectors)),
      analysis_(std::move(analysis)),
      frame_op_(hermitian_part(compose(adjoint(analysis_), analysis_))) {}

FrameSystem FrameSystem::from_analysis(const ModuleOperator& u) {
    std::vector<ModuleVector> vectors;
    vectors.reserve(u.out_rank());
    for (std::size_t n = 0; n < u.out_rank(); ++n) vectors.emplace_back(adjoint(row(u, n)));
    if (vectors.empty()) throw Error(ErrorCode::EmptySystem, "analysis operator has no rows");
    return FrameSystem(std::move(vectors), u);
}

FrameReport analyze(const FrameSystem& f, double tol_frame) {
    const auto [lo, hi] = operator_spectrum_range(f.frame_operator());
    FrameReport r;
    r.upper = std::max(hi, 0.0);
    r.lower = std::max(lo, 0.0);
    r.is_frame = r.lower > tol_frame * std::max(1.0, r.upper);
    r.is_parseval = r.is_frame && std::abs(r.lower - 1.0) <= tol_frame && std::abs(r.upper - 1.0) <= tol_frame;
    r.is_tight = r.is_frame && (r.upper - r.lower) <= tol_frame * std::max(1.0, r.upper);
    if (r.is_tight) r.tight_constant = 0.5 * (r.lower + r.upper);
    return r;
}

std::pair<double, double> bounds_from_norms(const FrameSystem& f, double tol_frame) {
    require_frame(f, tol_frame);
    const double norm_u = operator_norm(f.analysis());
    const double norm_inv_root = operator_norm(operator_inv_sqrt(f.frame_operator()));
    return {1.0 / (norm_inv_root * norm_inv_root), norm_u * norm_u};
}

ModuleOperator frame_operator_as_theta_sum(const FrameSystem& f) {
    ModuleOperator sum(f.shape(), f.rank(), f.rank());
    for (const auto& x : f.vectors()) sum = add(sum, theta(x, x));
    return sum;
}

FrameSystem canonical_dual(const FrameSystem& f, double tol_frame) {
    require_frame(f, tol_frame);
    return FrameSystem::from_analysis(compose(f.analysis(), operator_inverse(f.frame_operator())));
}

FrameSystem canonical_parseval(const FrameSystem& f, double tol_frame) {
    require_frame(f, tol_frame);
    return FrameSystem::from_analysis(compose(f.analysis(), operator_inv_sqrt(f.frame_operator())));
}

FrameSystem frame_from_surjection(const ModuleOperator& t) {
    for (std::size_t k = 0; k < t.blocks().size(); ++k) {
        const ComplexMatrix& b = t.blocks()[k];
        if (numerical_rank(b) != b.rows()) {
            throw Error(ErrorCode::NotSurjective, "flattened block " + std::to_string(k) + " lacks full row rank");
        }
    }
    std::vector<ModuleVector> vectors;
    vectors.reserve(t.in_rank());
    for (std::size_t n = 0; n < t.in_rank(); ++n) vectors.push_back(column(t, n));
    return FrameSystem(std::move(vectors));
}

UnitChainResult parseval_from_unit_chain(std::span<const ModuleOperator> chain) {
    if (chain.empty()) throw Error(ErrorCode::LastNotIdentity, "empty chain");
    const AlgebraShape& shape = chain.front().shape();
    const std::size_t m = chain.front().out_rank();
    const ModuleOperator id = ModuleOperator::identity(shape, m);

    for (std::size_t s = 0; s < chain.size(); ++s) {
        const ModuleOperator& e = chain[s];
        if (e.shape() != shape || e.out_rank() != m || e.in_rank() != m) {
            throw Error(ErrorCode::ShapeMismatch, "chain members must be m x m over one algebra");
        }
        if (!is_positive_operator(e) || !is_positive_operator(sub(id, e))) {
            throw Error(ErrorCode::NotContraction, "chain member " + std::to_string(s) + " is not a positive contraction");
        }
        if (s > 0 && !is_positive_operator(sub(e, chain[s - 1]))) {
            throw Error(ErrorCode::ChainNotIncreasing, "chain decreases at member " + std::to_string(s));
        }
    }
    if (max_entry_distance(chain.back(), id) > kChainTol) {
        throw Error(ErrorCode::LastNotIdentity, "last chain member differs from the identity");
    }

    std::vector<ModuleVector> vectors;
    std::vector<std::size_t> stage_end;
    std::vector<double> stage_residual;
    std::vector<bool> stage_dominated;
    ModuleOperator partial(shape, m, m);
    ModuleOperator previous(shape, m, m);
    for (const ModuleOperator& e : chain) {
        const ModuleOperator root = operator_sqrt(hermitian_part(sub(e, previous)));
        for (std::size_t q = 0; q < m; ++q) {
            ModuleVector x = column(root, q);
            if (module_norm(x) <= kPruneNorm) continue;
            partial = add(partial, theta(x, x));
            vectors.push_back(std::move(x));
        }
        stage_end.push_back(vectors.size());
        stage_residual.push_back(operator_norm(sub(partial, e)));
        stage_dominated.push_back(is_positive_operator(hermitian_part(sub(e, partial))));
        previous = e;
    }
    return UnitChainResult{FrameSystem(std::move(vectors)), std::move(stage_end), std::move(stage_residual),
                           std::move(stage_dominated)};
}

}  // namespace modframe
