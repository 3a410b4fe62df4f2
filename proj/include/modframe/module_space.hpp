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
#include <functional>
#include <span>
#include <vector>

#include "modframe/cstar.hpp"

namespace modframe {

/// Per algebra block k, the (out_rank * n_k) x (in_rank * n_k) complex matrix
/// whose (p, q) sub-block is block k of entry (p, q).
using FlattenedBlocks = std::vector<ComplexMatrix>;

/// Adjointable operator A^m -> A^N as an N x m matrix over A acting by left
/// multiplication. Stored flattened, so composition and adjoint are plain
/// complex matrix operations per block.
class ModuleOperator {
public:
    /// Zero operator.
    ModuleOperator(const AlgebraShape& shape, std::size_t out_rank, std::size_t in_rank);
    /// Entries in row-major order, out_rank * in_rank of them.
    ModuleOperator(const AlgebraShape& shape, std::size_t out_rank, std::size_t in_rank,
                   const std::vector<AlgebraElement>& entries);

    static ModuleOperator identity(const AlgebraShape& shape, std::size_t rank);

    const AlgebraShape& shape() const noexcept { return shape_; }
    std::size_t out_rank() const noexcept { return out_rank_; }
    std::size_t in_rank() const noexcept { return in_rank_; }
    bool is_square() const noexcept { return out_rank_ == in_rank_; }

    AlgebraElement entry(std::size_t p, std::size_t q) const;
    const FlattenedBlocks& blocks() const noexcept { return blocks_; }

    friend bool operator==(const ModuleOperator&, const ModuleOperator&) = default;

private:
    friend ModuleOperator unflatten(const AlgebraShape&, FlattenedBlocks, std::size_t, std::size_t);
    ModuleOperator(const AlgebraShape& shape, std::size_t out_rank, std::size_t in_rank, FlattenedBlocks blocks);

    AlgebraShape shape_;
    std::size_t out_rank_;
    std::size_t in_rank_;
    FlattenedBlocks blocks_;
};

/// Element of the standard module A^m, held as an m x 1 operator.
class ModuleVector {
public:
    ModuleVector(const AlgebraShape& shape, const std::vector<AlgebraElement>& components);
    explicit ModuleVector(ModuleOperator column);

    static ModuleVector zero(const AlgebraShape& shape, std::size_t rank);
    /// e^{(q)}: unit in component q, zero elsewhere.
    static ModuleVector basis(const AlgebraShape& shape, std::size_t rank, std::size_t q);

    const AlgebraShape& shape() const noexcept { return column_.shape(); }
    std::size_t rank() const noexcept { return column_.out_rank(); }
    AlgebraElement component(std::size_t i) const { return column_.entry(i, 0); }
    std::vector<AlgebraElement> components() const;
    const ModuleOperator& as_column() const noexcept { return column_; }

    friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

private:
    ModuleOperator column_;
};

FlattenedBlocks flatten(const ModuleOperator& t);
ModuleOperator unflatten(const AlgebraShape& shape, FlattenedBlocks blocks, std::size_t out_rank,
                         std::size_t in_rank);

/// <x, y> = sum_i x_i* y_i
AlgebraElement inner_product(const ModuleVector& x, const ModuleVector& y);
/// ||x|| = ||<x, x>||^{1/2}
double module_norm(const ModuleVector& x);

ModuleVector apply(const ModuleOperator& t, const ModuleVector& x);
/// x . a (right module action)
ModuleVector right_multiply(const ModuleVector& x, const AlgebraElement& a);
ModuleVector add(const ModuleVector& x, const ModuleVector& y);
ModuleVector sub(const ModuleVector& x, const ModuleVector& y);
ModuleVector scale(const ModuleVector& x, Complex s);

ModuleOperator adjoint(const ModuleOperator& t);
ModuleOperator compose(const ModuleOperator& s, const ModuleOperator& t);
ModuleOperator add(const ModuleOperator& s, const ModuleOperator& t);
ModuleOperator sub(const ModuleOperator& s, const ModuleOperator& t);
ModuleOperator scale(const ModuleOperator& t, Complex s);

/// theta_{y,x}(z) = y <x, z>
ModuleOperator theta(const ModuleVector& y, const ModuleVector& x);

/// Stacks operators with equal in_rank on top of each other.
ModuleOperator stack_rows(std::span<const ModuleOperator> parts);
/// Places columns side by side into an m x N operator.
ModuleOperator columns_to_operator(std::span<const ModuleVector> columns);
ModuleVector column(const ModuleOperator& t, std::size_t q);
/// Row p as a 1 x m operator.
ModuleOperator row(const ModuleOperator& t, std::size_t p);

double operator_norm(const ModuleOperator& t);
/// Largest |entry| difference over the flattened blocks.
double max_entry_distance(const ModuleOperator& s, const ModuleOperator& t);
double operator_hermitian_defect(const ModuleOperator& t);
/// T >= 0 in M_m(A). Throws NotHermitian for non-Hermitian input.
bool is_positive_operator(const ModuleOperator& t, double tol_psd = kPsdTol);
/// Every flattened block has sigma_min > tol_rank * sigma_max.
bool is_invertible(const ModuleOperator& t, double tol_rank = kRankTol);
/// Smallest and largest eigenvalue over the flattened blocks of a Hermitian operator.
std::pair<double, double> operator_spectrum_range(const ModuleOperator& t);

/// Functional calculus on a Hermitian square operator, block by block.
ModuleOperator operator_function(const ModuleOperator& t, const std::function<double(double)>& f);
/// Principal square root of a positive operator.
ModuleOperator operator_sqrt(const ModuleOperator& t);
/// Inverse and inverse square root of a positive invertible operator (SingularElement otherwise).
ModuleOperator operator_inverse(const ModuleOperator& t, double tol_rank = kRankTol);
ModuleOperator operator_inv_sqrt(const ModuleOperator& t, double tol_rank = kRankTol);
/// Inverse of an arbitrary invertible square operator (Gauss-Jordan with partial pivoting).
ModuleOperator general_inverse(const ModuleOperator& t, double tol_rank = kRankTol);

}  // namespace modframe
