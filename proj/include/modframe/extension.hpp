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
#include <span>
#include <vector>

#include "modframe/frames.hpp"

namespace modframe {

/// Vectors with norm at or below this are dropped from extensions.
inline constexpr double kPruneNorm = 1e-10;
/// Eigenvalues of I - S at or below this (relative to max(1, B)) count as zero.
inline constexpr double kDeficitFloor = 1e-12;

/// Given 0 <= a <= <x, x>, returns z with <z, z> = a. Uses the closed form of
/// the limit b = lim (c + e/n)^{-1/2} a^{1/2}, z = y b, where y = v <v,v>^{1/4},
/// x = v <v,v> and c = <y, y>.
/// Throws NotPositive (a not >= 0) or NotDominated (a not <= <x,x>).
ModuleVector dominated_sqrt_factor(const ModuleVector& x, const AlgebraElement& a);

/// Trace of the approximating sequence b_n = (c + e/n)^{-1/2} a^{1/2}, n = 1..terms.
struct DominatedSequenceTrace {
    AlgebraElement limit;                 // closed-form b
    std::vector<double> distance_to_limit;  // ||b_n - b||
    std::vector<double> residual;           // ||a - <y b_n, y b_n>||
    std::vector<double> cauchy;             // ||b_{2n} - b_n||, n = 1..terms/2
    std::vector<double> uniform_bound;      // sup over spec(c) of |t (t + 1/n)^{-1/2} - sqrt(t)|
};

DominatedSequenceTrace dominated_sqrt_sequence(const ModuleVector& x, const AlgebraElement& a,
                                               std::size_t terms = 64);

/// Writes a positive T on A^m as sum_q theta_{x_q, x_q} with exactly m vectors:
/// x_q is column q of T^{1/2}.
std::vector<ModuleVector> positive_theta_decomposition(const ModuleOperator& t);

struct ExtensionCertificate {
    double input_upper_bound;  // optimal Bessel bound B of the input
    double residual;           // ||I - S_combined|| (parseval) or theta-witness residual (frame)
    FrameReport combined;
};

struct ExtensionResult {
    std::vector<ModuleVector> added;  // appended after the input vectors
    FrameSystem combined;
    ExtensionCertificate certificate;
};

/// Appends the m standard generators e^{(q)}. The certificate residual is
/// ||(I - V*U) - sum theta_{g_n, f_n}|| for the canonical dual (y_n) ++ (g_n)
/// of the combined system.
ExtensionResult extend_to_frame(const AlgebraShape& shape, std::size_t rank, std::span<const ModuleVector> vectors);
ExtensionResult extend_to_frame(const FrameSystem& f);

/// Appends the nonzero columns of (I - S)^{1/2}. Throws BesselBoundExceedsOne
/// when B > 1 + tol_frame. Accepts an empty input family.
ExtensionResult extend_to_parseval(const AlgebraShape& shape, std::size_t rank, std::span<const ModuleVector> vectors,
                                   double tol_frame = kFrameTol);
ExtensionResult extend_to_parseval(const FrameSystem& f, double tol_frame = kFrameTol);

}  // namespace modframe
