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
#include <vector>

#include "modframe/frames.hpp"

namespace modframe {

/// Absolute tolerance on ||V*U - I|| for accepting a dual pair.
inline constexpr double kDualTol = 1e-9;

struct DualCheck {
    bool ok;
    double residual;  // ||V*U - I||
};

/// (y_n) is dual to (x_n) iff V*U = I. Symmetric in its arguments.
DualCheck is_dual(const FrameSystem& f, const FrameSystem& g, double tol_dual = kDualTol);

/// A primal frame together with an accepted dual.
class DualPair {
public:
    /// Throws NotDual when the residual exceeds `tol_dual`.
    DualPair(FrameSystem primal, FrameSystem dual, double tol_dual = kDualTol);

    const FrameSystem& primal() const noexcept { return primal_; }
    const FrameSystem& dual() const noexcept { return dual_; }
    double residual() const noexcept { return residual_; }

private:
    FrameSystem primal_;
    FrameSystem dual_;
    double residual_;
};

/// P = I - U S^{-1} U*, the orthogonal projection onto R(U)^perp in A^N.
ModuleOperator range_complement_projection(const FrameSystem& f);

/// Dual whose analysis operator is V = U S^{-1} + (I - U S^{-1} U*) L, with
/// L an N x m operator. L = 0 gives the canonical dual.
FrameSystem dual_from_parameter(const FrameSystem& f, const ModuleOperator& l);

struct ObliqueReport {
    ModuleOperator projection;     // U V*
    double idempotency_residual;   // ||F^2 - F||
    double range_residual;         // ||F U - U||
    double corange_residual;       // ||V* F - V*||
    double hermitian_defect;       // max |F - F*|
    bool is_orthogonal;            // F = F* (only for the canonical dual)
};

ObliqueReport oblique_structure(const DualPair& pair);

struct MinimalityReport {
    bool holds;
    double min_eig;  // lambda_min(V*V - S^{-1})
};

/// V*V - S^{-1} >= 0 for every dual V.
MinimalityReport minimality_check(const DualPair& pair, double tol_psd = kPsdTol);

/// Per flattened block data deciding whether a Parseval dual exists.
struct ParsevalDualBlock {
    double min_excess;               // lambda_min(S_k - I)
    std::size_t excess_rank;         // rank(S_k - I)
    std::size_t range_corank;        // N n_k - rank(U_k)
};

std::vector<ParsevalDualBlock> parseval_dual_criterion(const FrameSystem& f);

/// Parseval frame dual to f, built as V = U S^{-1} + P T S^{-1/2} with
/// T*PT = S - I. Throws LowerBoundBelowOne or InsufficientCorank.
FrameSystem parseval_dual(const FrameSystem& f);

/// True iff U is onto A^N, i.e. the canonical dual is the only dual.
bool has_unique_dual(const FrameSystem& f);

struct UniqueDualReport {
    bool unique;
    /// max |<y_n, y_m> - delta_nm e| for the canonical Parseval frame (y_n);
    /// absent when the dual is not unique.
    std::optional<double> orthogonality_residual;
};

UniqueDualReport unique_dual_report(const FrameSystem& f);

struct PseudodualResult {
    bool ok;                                   // V*U invertible
    std::optional<FrameSystem> corrected_dual; // ((V*U)^{-1} y_n), dual to f
};

PseudodualResult pseudodual_check(const FrameSystem& f, const FrameSystem& g);

}  // namespace modframe
