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

#include "modframe/cstar.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "modframe/error.hpp"

namespace modframe {

namespace {

void require_same_shape(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.shape() != b.shape()) throw Error(ErrorCode::ShapeMismatch, "algebra elements of different shapes");
}

void require_hermitian(const AlgebraElement& a) {
    const double defect = alg_hermitian_defect(a);
    double scale = 1.0;
    for (const auto& b : a.blocks()) scale = std::max(scale, max_abs(b));
    if (defect > kHermTol * scale) {
        throw Error(ErrorCode::NotHermitian, "element asymmetry " + std::to_string(defect));
    }
}

template <typename Op>
AlgebraElement blockwise(const AlgebraElement& a, Op op) {
    std::vector<ComplexMatrix> out;
    out.reserve(a.blocks().size());
    for (const auto& b : a.blocks()) out.push_back(op(b));
    return AlgebraElement(a.shape(), std::move(out));
}

template <typename Op>
AlgebraElement blockwise(const AlgebraElement& a, const AlgebraElement& b, Op op) {
    require_same_shape(a, b);
    std::vector<ComplexMatrix> out;
    out.reserve(a.blocks().size());
    for (std::size_t k = 0; k < a.blocks().size(); ++k) out.push_back(op(a.block(k), b.block(k)));
    return AlgebraElement(a.shape(), std::move(out));
}

// Smallest and largest eigenvalue over all blocks.
std::pair<double, double> spectrum_range(const AlgebraElement& a) {
    double lo = INFINITY;
    double hi = -INFINITY;
    for (const auto& b : a.blocks()) {
        const HermitianEigen e = eig_hermitian(b);
        lo = std::min(lo, e.eigenvalues.front());
        hi = std::max(hi, e.eigenvalues.back());
    }
    return {lo, hi};
}

void require_invertible(const AlgebraElement& a, double tol_rank) {
    require_hermitian(a);
    const auto [lo, hi] = spectrum_range(a);
    const double norm = std::max(std::abs(lo), std::abs(hi));
    if (lo <= tol_rank * norm) {
        if (lo < -kPsdTol * (1.0 + norm)) throw Error(ErrorCode::NotPositive, "element has negative spectrum");
        throw Error(ErrorCode::SingularElement, "min eigenvalue " + std::to_string(lo));
    }
}

}  // namespace

AlgebraShape::AlgebraShape(std::vector<std::size_t> block_dims) : dims_(std::move(block_dims)) {
    if (dims_.empty()) throw Error(ErrorCode::DimensionError, "algebra needs at least one block");
    for (std::size_t n : dims_) {
        if (n == 0) throw Error(ErrorCode::DimensionError, "block dimension must be positive");
    }
}

AlgebraElement::AlgebraElement(const AlgebraShape& shape) : shape_(shape) {
    blocks_.reserve(shape.block_count());
    for (std::size_t n : shape.block_dims()) blocks_.emplace_back(n, n);
}

AlgebraElement::AlgebraElement(const AlgebraShape& shape, std::vector<ComplexMatrix> blocks)
    : shape_(shape), blocks_(std::move(blocks)) {
    if (blocks_.size() != shape_.block_count()) {
        throw Error(ErrorCode::ShapeMismatch, "block count does not match algebra shape");
    }
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
        const std::size_t n = shape_.block_dim(k);
        if (blocks_[k].rows() != n || blocks_[k].cols() != n) {
            throw Error(ErrorCode::ShapeMismatch, "block " + std::to_string(k) + " must be " + std::to_string(n) +
                                                      "x" + std::to_string(n));
        }
    }
}

AlgebraElement AlgebraElement::unit(const AlgebraShape& shape) { return scalar(shape, 1.0); }

AlgebraElement AlgebraElement::scalar(const AlgebraShape& shape, Complex value) {
    std::vector<ComplexMatrix> blocks;
    for (std::size_t n : shape.block_dims()) blocks.push_back(ComplexMatrix::identity(n) * value);
    return AlgebraElement(shape, std::move(blocks));
}

AlgebraElement alg_add(const AlgebraElement& a, const AlgebraElement& b) {
    return blockwise(a, b, [](const ComplexMatrix& x, const ComplexMatrix& y) { return x + y; });
}

AlgebraElement alg_sub(const AlgebraElement& a, const AlgebraElement& b) {
    return blockwise(a, b, [](const ComplexMatrix& x, const ComplexMatrix& y) { return x - y; });
}

AlgebraElement alg_mul(const AlgebraElement& a, const AlgebraElement& b) {
    return blockwise(a, b, [](const ComplexMatrix& x, const ComplexMatrix& y) { return x * y; });
}

AlgebraElement alg_star(const AlgebraElement& a) {
    return blockwise(a, [](const ComplexMatrix& x) { return x.adjoint(); });
}

AlgebraElement alg_scale(const AlgebraElement& a, Complex s) {
    return blockwise(a, [s](const ComplexMatrix& x) { return x * s; });
}

double alg_norm(const AlgebraElement& a) {
    double r = 0.0;
    for (const auto& b : a.blocks()) r = std::max(r, op_norm(b));
    return r;
}

double alg_hermitian_defect(const AlgebraElement& a) {
    double d = 0.0;
    for (const auto& b : a.blocks()) d = std::max(d, hermitian_defect(b));
    return d;
}

bool alg_is_positive(const AlgebraElement& a, double tol_psd) {
    require_hermitian(a);
    return std::all_of(a.blocks().begin(), a.blocks().end(),
                       [&](const ComplexMatrix& b) { return psd_check(b, tol_psd).is_psd; });
}

bool alg_leq(const AlgebraElement& a, const AlgebraElement& b, double tol_psd) {
    require_same_shape(a, b);
    require_hermitian(a);
    require_hermitian(b);
    return alg_is_positive(alg_sub(b, a), tol_psd);
}

AlgebraElement alg_apply(const AlgebraElement& a, const std::function<double(double)>& f) {
    require_hermitian(a);
    return blockwise(a, [&](const ComplexMatrix& x) { return apply_spectral_function(x, f); });
}

AlgebraElement alg_sqrt(const AlgebraElement& a, double /*tol_rank*/) {
    if (!alg_is_positive(a)) throw Error(ErrorCode::NotPositive, "square root of a non-positive element");
    return alg_apply(a, [](double t) { return std::sqrt(std::max(t, 0.0)); });
}

AlgebraElement alg_inv_sqrt(const AlgebraElement& a, double tol_rank) {
    require_invertible(a, tol_rank);
    return alg_apply(a, [](double t) { return 1.0 / std::sqrt(t); });
}

AlgebraElement alg_inv(const AlgebraElement& a, double tol_rank) {
    require_invertible(a, tol_rank);
    return alg_apply(a, [](double t) { return 1.0 / t; });
}

}  // namespace modframe
