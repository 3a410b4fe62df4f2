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

#include "modframe/duality.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "modframe/error.hpp"

namespace modframe {

namespace {

void require_same_dims(const FrameSystem& f, const FrameSystem& g) {
    if (f.shape() != g.shape() || f.rank() != g.rank() || f.size() != g.size()) {
        throw Error(ErrorCode::ShapeMismatch, "frame systems have different dimensions");
    }
}

void require_frame(const FrameSystem& f) {
    if (!analyze(f).is_frame) throw Error(ErrorCode::NotAFrame, "system is not a frame");
}

// Eigenvalues of S_k - I above this count towards its rank.
double excess_cut(const ComplexMatrix& s) { return kRankTol * std::max(1.0, op_norm(s)); }

}  // namespace

DualCheck is_dual(const FrameSystem& f, const FrameSystem& g, double tol_dual) {
    require_same_dims(f, g);
    const ModuleOperator cross = compose(adjoint(g.analysis()), f.analysis());
    const double residual = operator_norm(sub(cross, ModuleOperator::identity(f.shape(), f.rank())));
    return {residual <= tol_dual, residual};
}

DualPair::DualPair(FrameSystem primal, FrameSystem dual, double tol_dual)
    : primal_(std::move(primal)), dual_(std::move(dual)) {
    const DualCheck c = is_dual(primal_, dual_, tol_dual);
    if (!c.ok) throw Error(ErrorCode::NotDual, "residual " + std::to_string(c.residual));
    residual_ = c.residual;
}

ModuleOperator range_complement_projection(const FrameSystem& f) {
    require_frame(f);
    const ModuleOperator& u = f.analysis();
    const ModuleOperator range = compose(compose(u, operator_inverse(f.frame_operator())), adjoint(u));
    return sub(ModuleOperator::identity(f.shape(), f.size()), range);
}

FrameSystem dual_from_parameter(const FrameSystem& f, const ModuleOperator& l) {
    require_frame(f);
    if (l.shape() != f.shape() || l.out_rank() != f.size() || l.in_rank() != f.rank()) {
        throw Error(ErrorCode::ShapeMismatch, "parameter must be an N x m operator over the same algebra");
    }
    const ModuleOperator canonical = compose(f.analysis(), operator_inverse(f.frame_operator()));
    return FrameSystem::from_analysis(add(canonical, compose(range_complement_projection(f), l)));
}

ObliqueReport oblique_structure(const DualPair& pair) {
    const ModuleOperator& u = pair.primal().analysis();
    const ModuleOperator v_adj = adjoint(pair.dual().analysis());
    ModuleOperator proj = compose(u, v_adj);
    const double idem = operator_norm(sub(compose(proj, proj), proj));
    const double range = operator_norm(sub(compose(proj, u), u));
    const double corange = operator_norm(sub(compose(v_adj, proj), v_adj));
    const double herm = operator_hermitian_defect(proj);
    return ObliqueReport{std::move(proj), idem, range, corange, herm, herm <= kDualTol};
}

MinimalityReport minimality_check(const DualPair& pair, double tol_psd) {
    const ModuleOperator& v = pair.dual().analysis();
    const ModuleOperator diff = sub(compose(adjoint(v), v), operator_inverse(pair.primal().frame_operator()));
    FlattenedBlocks sym;
    for (const auto& b : diff.blocks()) sym.push_back(symmetrized(b));
    double lo = INFINITY;
    bool holds = true;
    for (const auto& b : sym) {
        const PsdCheck c = psd_check(b, tol_psd);
        lo = std::min(lo, c.min_eig);
        holds = holds && c.is_psd;
    }
    return {holds, lo};
}

std::vector<ParsevalDualBlock> parseval_dual_criterion(const FrameSystem& f) {
    require_frame(f);
    const ModuleOperator& s = f.frame_operator();
    const ModuleOperator& u = f.analysis();
    std::vector<ParsevalDualBlock> out;
    for (std::size_t k = 0; k < s.blocks().size(); ++k) {
        const ComplexMatrix& sk = s.blocks()[k];
        const HermitianEigen e = eig_hermitian(sk - ComplexMatrix::identity(sk.rows()));
        const double cut = excess_cut(sk);
        const auto rank = static_cast<std::size_t>(
            std::count_if(e.eigenvalues.begin(), e.eigenvalues.end(), [&](double l) { return l > cut; }));
        const ComplexMatrix& uk = u.blocks()[k];
        out.push_back({e.eigenvalues.front(), rank, uk.rows() - numerical_rank(uk)});
    }
    return out;
}

FrameSystem parseval_dual(const FrameSystem& f) {
    const std::vector<ParsevalDualBlock> crit = parseval_dual_criterion(f);
    const ModuleOperator& s = f.frame_operator();
    for (std::size_t k = 0; k < crit.size(); ++k) {
        const double norm = op_norm(s.blocks()[k]);
        if (crit[k].min_excess < -kPsdTol * (1.0 + norm)) {
            throw Error(ErrorCode::LowerBoundBelowOne, "lower frame bound is below one");
        }
        if (crit[k].excess_rank > crit[k].range_corank) {
            throw Error(ErrorCode::InsufficientCorank,
                        "rank(S - I) = " + std::to_string(crit[k].excess_rank) + " exceeds dim R(U)^perp = " +
                            std::to_string(crit[k].range_corank));
        }
    }

    const ModuleOperator& u = f.analysis();
    const ModuleOperator inv_root = operator_inv_sqrt(s);
    const ModuleOperator isometry = compose(u, inv_root);
    FlattenedBlocks t_blocks;
    for (std::size_t k = 0; k < s.blocks().size(); ++k) {
        const ComplexMatrix& sk = s.blocks()[k];
        const HermitianEigen e = eig_hermitian(sk - ComplexMatrix::identity(sk.rows()));
        const ComplexMatrix complement = orthonormal_complement(isometry.blocks()[k]);
        const double cut = excess_cut(sk);
        ComplexMatrix tk(u.blocks()[k].rows(), sk.cols());
        std::size_t used = 0;
        for (std::size_t i = e.eigenvalues.size(); i-- > 0;) {
            if (e.eigenvalues[i] <= cut) break;
            const double w = std::sqrt(e.eigenvalues[i]);
            for (std::size_t r = 0; r < tk.rows(); ++r) {
                for (std::size_t c = 0; c < tk.cols(); ++c) {
                    tk(r, c) += w * complement(r, used) * std::conj(e.eigenvectors(c, i));
                }
            }
            ++used;
        }
        t_blocks.push_back(std::move(tk));
    }
    const ModuleOperator t = unflatten(f.shape(), std::move(t_blocks), f.size(), f.rank());
    const ModuleOperator v = add(compose(u, operator_inverse(s)),
                                 compose(compose(range_complement_projection(f), t), inv_root));
    return FrameSystem::from_analysis(v);
}

bool has_unique_dual(const FrameSystem& f) {
    require_frame(f);
    return std::all_of(f.analysis().blocks().begin(), f.analysis().blocks().end(),
                       [](const ComplexMatrix& b) { return numerical_rank(b) == b.rows(); });
}

UniqueDualReport unique_dual_report(const FrameSystem& f) {
    UniqueDualReport r{has_unique_dual(f), std::nullopt};
    if (r.unique) {
        const ModuleOperator w = compose(f.analysis(), operator_inv_sqrt(f.frame_operator()));
        r.orthogonality_residual =
            max_entry_distance(compose(w, adjoint(w)), ModuleOperator::identity(f.shape(), f.size()));
    }
    return r;
}

PseudodualResult pseudodual_check(const FrameSystem& f, const FrameSystem& g) {
    require_same_dims(f, g);
    const ModuleOperator cross = compose(adjoint(g.analysis()), f.analysis());
    if (!is_invertible(cross)) return {false, std::nullopt};
    // y'_n = K y_n with K = (V*U)^{-1}; its analysis operator is V K*.
    const ModuleOperator k = general_inverse(cross);
    return {true, FrameSystem::from_analysis(compose(g.analysis(), adjoint(k)))};
}

}  // namespace modframe
