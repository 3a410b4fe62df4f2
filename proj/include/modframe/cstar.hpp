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
#include <vector>

#include "modframe/linalg.hpp"

namespace modframe {

/// The algebra A = M_{n_1}(C) + ... + M_{n_K}(C), given by its block sizes.
class AlgebraShape {
public:
    explicit AlgebraShape(std::vector<std::size_t> block_dims);

    const std::vector<std::size_t>& block_dims() const noexcept { return dims_; }
    std::size_t block_count() const noexcept { return dims_.size(); }
    std::size_t block_dim(std::size_t k) const { return dims_.at(k); }

    friend bool operator==(const AlgebraShape&, const AlgebraShape&) = default;

private:
    std::vector<std::size_t> dims_;
};

/// An element of A stored as one square complex matrix per block.
class AlgebraElement {
public:
    /// Zero element.
    explicit AlgebraElement(const AlgebraShape& shape);
    AlgebraElement(const AlgebraShape& shape, std::vector<ComplexMatrix> blocks);

    static AlgebraElement unit(const AlgebraShape& shape);
    /// Scalar multiple of the unit.
    static AlgebraElement scalar(const AlgebraShape& shape, Complex value);

    const AlgebraShape& shape() const noexcept { return shape_; }
    const std::vector<ComplexMatrix>& blocks() const noexcept { return blocks_; }
    const ComplexMatrix& block(std::size_t k) const { return blocks_.at(k); }

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

private:
    AlgebraShape shape_;
    std::vector<ComplexMatrix> blocks_;
};

AlgebraElement alg_add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement alg_sub(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement alg_mul(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement alg_star(const AlgebraElement& a);
AlgebraElement alg_scale(const AlgebraElement& a, Complex s);

/// C*-norm: the largest block operator norm.
double alg_norm(const AlgebraElement& a);

/// Largest blockwise |a_ij - conj(a_ji)|.
double alg_hermitian_defect(const AlgebraElement& a);

bool alg_is_positive(const AlgebraElement& a, double tol_psd = kPsdTol);

/// a <= b in the C*-order. Both arguments must be Hermitian (NotHermitian otherwise).
bool alg_leq(const AlgebraElement& a, const AlgebraElement& b, double tol_psd = kPsdTol);

/// Blockwise functional calculus on a Hermitian element.
AlgebraElement alg_apply(const AlgebraElement& a, const std::function<double(double)>& f);

AlgebraElement alg_sqrt(const AlgebraElement& a, double tol_rank = kRankTol);
AlgebraElement alg_inv_sqrt(const AlgebraElement& a, double tol_rank = kRankTol);
AlgebraElement alg_inv(const AlgebraElement& a, double tol_rank = kRankTol);

}  // namespace modframe
