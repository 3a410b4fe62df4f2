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

#include "modframe/module_space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "modframe/error.hpp"

namespace modframe {

namespace {

void require_same_shape(const AlgebraShape& a, const AlgebraShape& b) {
    if (a != b) throw Error(ErrorCode::ShapeMismatch, "operands live over different algebras");
}

template <typename Op>
ModuleOperator map_blocks(const ModuleOperator& t, std::size_t out_rank, std::size_t in_rank, Op op) {
    FlattenedBlocks out;
    out.reserve(t.blocks().size());
    for (const auto& b : t.blocks()) out.push_back(op(b));
    return unflatten(t.shape(), std::move(out), out_rank, in_rank);
}

void require_square_hermitian(const ModuleOperator& t) {
    if (!t.is_square()) throw Error(ErrorCode::NonSquare, "operator is not square");
    double scale = 1.0;
    for (const auto& b : t.blocks()) scale = std::max(scale, max_abs(b));
    const double defect = operator_hermitian_defect(t);
    if (defect > kHermTol * scale) {
        throw Error(ErrorCode::NotHermitian, "operator asymmetry " + std::to_string(defect));
    }
}

}  // namespace

ModuleOperator::ModuleOperator(const AlgebraShape& shape, std::size_t out_rank, std::size_t in_rank)
    : shape_(shape), out_rank_(out_rank), in_rank_(in_rank) {
    blocks_.reserve(shape.block_count());
    for (std::size_t n : shape.block_dims()) blocks_.emplace_back(out_rank * n, in_rank * n);
}

ModuleOperator::ModuleOperator(const AlgebraShape& shape, std::size_t out_rank, std::size_t in_rank,
                               const std::vector<AlgebraElement>& entries)
    : ModuleOperator(shape, out_rank, in_rank) {
    if (entries.size() != out_rank * in_rank) {
        throw Error(ErrorCode::DimensionError, "expected " + std::to_string(out_rank * in_rank) + " entries, got " +
                                                   std::to_string(entries.size()));
    }
    for (std::size_t p = 0; p < out_rank; ++p) {
        for (std::size_t q = 0; q < in_rank; ++q) {
            const AlgebraElement& e = entries[p * in_rank + q];
            require_same_shape(e.shape(), shape);
            for (std::size_t k = 0; k < shape.block_count(); ++k) {
                const std::size_t n = shape.block_dim(k);
                blocks_[k].set_block(p * n, q * n, e.block(k));
            }
        }
    }
}

ModuleOperator::ModuleOperator(const AlgebraShape& shape, std::size_t out_rank, std::size_t in_rank,
                               FlattenedBlocks blocks)
    : shape_(shape), out_rank_(out_rank), in_rank_(in_rank), blocks_(std::move(blocks)) {}

ModuleOperator ModuleOperator::identity(const AlgebraShape& shape, std::size_t rank) {
    FlattenedBlocks blocks;
    for (std::size_t n : shape.block_dims()) blocks.push_back(ComplexMatrix::identity(rank * n));
    return ModuleOperator(shape, rank, rank, std::move(blocks));
}

AlgebraElement ModuleOperator::entry(std::size_t p, std::size_t q) const {
    if (p >= out_rank_ || q >= in_rank_) throw Error(ErrorCode::IndexOutOfRange, "operator entry out of range");
    std::vector<ComplexMatrix> parts;
    parts.reserve(blocks_.size());
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
        const std::size_t n = shape_.block_dim(k);
        parts.push_back(blocks_[k].block(p * n, q * n, n, n));
    }
    return AlgebraElement(shape_, std::move(parts));
}

ModuleVector::ModuleVector(const AlgebraShape& shape, const std::vector<AlgebraElement>& components)
    : column_(shape, components.size(), 1, components) {}

ModuleVector::ModuleVector(ModuleOperator column) : column_(std::move(column)) {
    if (column_.in_rank() != 1) throw Error(ErrorCode::DimensionError, "module vector needs a single column");
}

ModuleVector ModuleVector::zero(const AlgebraShape& shape, std::size_t rank) {
    return ModuleVector(ModuleOperator(shape, rank, 1));
}

ModuleVector ModuleVector::basis(const AlgebraShape& shape, std::size_t rank, std::size_t q) {
    if (q >= rank) throw Error(ErrorCode::IndexOutOfRange, "basis index out of range");
    std::vector<AlgebraElement> comps(rank, AlgebraElement(shape));
    comps[q] = AlgebraElement::unit(shape);
    return ModuleVector(shape, comps);
}

std::vector<AlgebraElement> ModuleVector::components() const {
    std::vector<AlgebraElement> out;
    out.reserve(rank());
    for (std::size_t i = 0; i < rank(); ++i) out.push_back(component(i));
    return out;
}

FlattenedBlocks flatten(const ModuleOperator& t) { return t.blocks(); }

ModuleOperator unflatten(const AlgebraShape& shape, FlattenedBlocks blocks, std::size_t out_rank,
                         std::size_t in_rank) {
    if (blocks.size() != shape.block_count()) {
        throw Error(ErrorCode::DimensionError, "flattened block count does not match algebra");
    }
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        const std::size_t n = shape.block_dim(k);
        if (blocks[k].rows() != out_rank * n || blocks[k].cols() != in_rank * n) {
            throw Error(ErrorCode::DimensionError, "flattened block " + std::to_string(k) + " has wrong size");
        }
    }
    return ModuleOperator(shape, out_rank, in_rank, std::move(blocks));
}

AlgebraElement inner_product(const ModuleVector& x, const ModuleVector& y) {
    require_same_shape(x.shape(), y.shape());
    if (x.rank() != y.rank()) throw Error(ErrorCode::ShapeMismatch, "vectors of different rank");
    return compose(adjoint(x.as_column()), y.as_column()).entry(0, 0);
}

double module_norm(const ModuleVector& x) { return std::sqrt(alg_norm(inner_product(x, x))); }

ModuleVector apply(const ModuleOperator& t, const ModuleVector& x) { return ModuleVector(compose(t, x.as_column())); }

ModuleVector right_multiply(const ModuleVector& x, const AlgebraElement& a) {
    require_same_shape(x.shape(), a.shape());
    const ModuleOperator& c = x.as_column();
    FlattenedBlocks out;
    out.reserve(c.blocks().size());
    for (std::size_t k = 0; k < c.blocks().size(); ++k) out.push_back(c.blocks()[k] * a.block(k));
    return ModuleVector(unflatten(x.shape(), std::move(out), x.rank(), 1));
}

ModuleVector add(const ModuleVector& x, const ModuleVector& y) { return ModuleVector(add(x.as_column(), y.as_column())); }
ModuleVector sub(const ModuleVector& x, const ModuleVector& y) { return ModuleVector(sub(x.as_column(), y.as_column())); }
ModuleVector scale(const ModuleVector& x, Complex s) { return ModuleVector(scale(x.as_column(), s)); }

ModuleOperator adjoint(const ModuleOperator& t) {
    return map_blocks(t, t.in_rank(), t.out_rank(), [](const ComplexMatrix& b) { return b.adjoint(); });
}

ModuleOperator compose(const ModuleOperator& s, const ModuleOperator& t) {
    require_same_shape(s.shape(), t.shape());
    if (s.in_rank() != t.out_rank()) {
        throw Error(ErrorCode::ShapeMismatch, "cannot compose " + std::to_string(s.out_rank()) + "x" +
                                                  std::to_string(s.in_rank()) + " with " +
                                                  std::to_string(t.out_rank()) + "x" + std::to_string(t.in_rank()));
    }
    FlattenedBlocks out;
    out.reserve(s.blocks().size());
    for (std::size_t k = 0; k < s.blocks().size(); ++k) out.push_back(s.blocks()[k] * t.blocks()[k]);
    return unflatten(s.shape(), std::move(out), s.out_rank(), t.in_rank());
}

ModuleOperator add(const ModuleOperator& s, const ModuleOperator& t) {
    require_same_shape(s.shape(), t.shape());
    if (s.out_rank() != t.out_rank() || s.in_rank() != t.in_rank()) {
        throw Error(ErrorCode::ShapeMismatch, "operator ranks differ");
    }
    FlattenedBlocks out;
    for (std::size_t k = 0; k < s.blocks().size(); ++k) out.push_back(s.blocks()[k] + t.blocks()[k]);
    return unflatten(s.shape(), std::move(out), s.out_rank(), s.in_rank());
}

ModuleOperator sub(const ModuleOperator& s, const ModuleOperator& t) { return add(s, scale(t, -1.0)); }

ModuleOperator scale(const ModuleOperator& t, Complex s) {
    return map_blocks(t, t.out_rank(), t.in_rank(), [s](const ComplexMatrix& b) { return b * s; });
}

ModuleOperator theta(const ModuleVector& y, const ModuleVector& x) {
    require_same_shape(y.shape(), x.shape());
    return compose(y.as_column(), adjoint(x.as_column()));
}

ModuleOperator stack_rows(std::span<const ModuleOperator> parts) {
    if (parts.empty()) throw Error(ErrorCode::DimensionError, "nothing to stack");
    const AlgebraShape& shape = parts.front().shape();
    const std::size_t in_rank = parts.front().in_rank();
    std::size_t out_rank = 0;
    for (const auto& p : parts) {
        require_same_shape(shape, p.shape());
        if (p.in_rank() != in_rank) throw Error(ErrorCode::ShapeMismatch, "stacked operators differ in in_rank");
        out_rank += p.out_rank();
    }
    ModuleOperator zero(shape, out_rank, in_rank);
    FlattenedBlocks blocks = zero.blocks();
    std::size_t offset = 0;
    for (const auto& p : parts) {
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            blocks[k].set_block(offset * shape.block_dim(k), 0, p.blocks()[k]);
        }
        offset += p.out_rank();
    }
    return unflatten(shape, std::move(blocks), out_rank, in_rank);
}

ModuleOperator columns_to_operator(std::span<const ModuleVector> columns) {
    if (columns.empty()) throw Error(ErrorCode::DimensionError, "no columns");
    std::vector<ModuleOperator> rows;
    rows.reserve(columns.size());
    for (const auto& c : columns) rows.push_back(adjoint(c.as_column()));
    return adjoint(stack_rows(rows));
}

ModuleVector column(const ModuleOperator& t, std::size_t q) {
    if (q >= t.in_rank()) throw Error(ErrorCode::IndexOutOfRange, "column index out of range");
    FlattenedBlocks out;
    for (std::size_t k = 0; k < t.blocks().size(); ++k) {
        const std::size_t n = t.shape().block_dim(k);
        out.push_back(t.blocks()[k].block(0, q * n, t.out_rank() * n, n));
    }
    return ModuleVector(unflatten(t.shape(), std::move(out), t.out_rank(), 1));
}

ModuleOperator row(const ModuleOperator& t, std::size_t p) {
    if (p >= t.out_rank()) throw Error(ErrorCode::IndexOutOfRange, "row index out of range");
    FlattenedBlocks out;
    for (std::size_t k = 0; k < t.blocks().size(); ++k) {
        const std::size_t n = t.shape().block_dim(k);
        out.push_back(t.blocks()[k].block(p * n, 0, n, t.in_rank() * n));
    }
    return unflatten(t.shape(), std::move(out), 1, t.in_rank());
}

double operator_norm(const ModuleOperator& t) {
    double r = 0.0;
    for (const auto& b : t.blocks()) r = std::max(r, op_norm(b));
    return r;
}

double max_entry_distance(const ModuleOperator& s, const ModuleOperator& t) {
    require_same_shape(s.shape(), t.shape());
    if (s.out_rank() != t.out_rank() || s.in_rank() != t.in_rank()) {
        throw Error(ErrorCode::ShapeMismatch, "operator ranks differ");
    }
    double r = 0.0;
    for (std::size_t k = 0; k < s.blocks().size(); ++k) r = std::max(r, max_abs(s.blocks()[k] - t.blocks()[k]));
    return r;
}

double operator_hermitian_defect(const ModuleOperator& t) {
    if (!t.is_square()) throw Error(ErrorCode::NonSquare, "operator is not square");
    double d = 0.0;
    for (const auto& b : t.blocks()) d = std::max(d, hermitian_defect(b));
    return d;
}

bool is_positive_operator(const ModuleOperator& t, double tol_psd) {
    require_square_hermitian(t);
    return std::all_of(t.blocks().begin(), t.blocks().end(),
                       [&](const ComplexMatrix& b) { return psd_check(b, tol_psd).is_psd; });
}

bool is_invertible(const ModuleOperator& t, double tol_rank) {
    if (!t.is_square()) return false;
    for (const auto& b : t.blocks()) {
        const std::vector<double> sv = singular_values(b);
        if (sv.front() == 0.0 || sv.back() <= tol_rank * sv.front()) return false;
    }
    return true;
}

std::pair<double, double> operator_spectrum_range(const ModuleOperator& t) {
    require_square_hermitian(t);
    double lo = INFINITY;
    double hi = -INFINITY;
    for (const auto& b : t.blocks()) {
        const HermitianEigen e = eig_hermitian(b);
        lo = std::min(lo, e.eigenvalues.front());
        hi = std::max(hi, e.eigenvalues.back());
    }
    return {lo, hi};
}

ModuleOperator operator_function(const ModuleOperator& t, const std::function<double(double)>& f) {
    require_square_hermitian(t);
    return map_blocks(t, t.out_rank(), t.in_rank(),
                      [&](const ComplexMatrix& b) { return apply_spectral_function(b, f); });
}

ModuleOperator operator_sqrt(const ModuleOperator& t) {
    if (!is_positive_operator(t)) throw Error(ErrorCode::NotPositive, "square root of a non-positive operator");
    return operator_function(t, [](double x) { return std::sqrt(std::max(x, 0.0)); });
}

namespace {

void require_positive_invertible(const ModuleOperator& t, double tol_rank) {
    const auto [lo, hi] = operator_spectrum_range(t);
    const double norm = std::max(std::abs(lo), std::abs(hi));
    if (!(lo > tol_rank * norm)) {
        if (lo < -kPsdTol * (1.0 + norm)) throw Error(ErrorCode::NotPositive, "operator has negative spectrum");
        throw Error(ErrorCode::SingularElement, "operator min eigenvalue " + std::to_string(lo));
    }
}

}  // namespace

ModuleOperator operator_inverse(const ModuleOperator& t, double tol_rank) {
    require_positive_invertible(t, tol_rank);
    return operator_function(t, [](double x) { return 1.0 / x; });
}

ModuleOperator operator_inv_sqrt(const ModuleOperator& t, double tol_rank) {
    require_positive_invertible(t, tol_rank);
    return operator_function(t, [](double x) { return 1.0 / std::sqrt(x); });
}

ModuleOperator general_inverse(const ModuleOperator& t, double tol_rank) {
    if (!is_invertible(t, tol_rank)) throw Error(ErrorCode::SingularElement, "operator is not invertible");
    return map_blocks(t, t.in_rank(), t.out_rank(), [](const ComplexMatrix& b) { return inverse(b); });
}

}  // namespace modframe
