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

#include "modframe/sampling.hpp"

#include <algorithm>

#include "modframe/error.hpp"

namespace modframe::sampling {

namespace {

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

std::size_t uniform_count(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

Complex random_complex(Rng& rng) {
    const double re = uniform(rng, -1.0, 1.0);
    const double im = uniform(rng, -1.0, 1.0);
    return {re, im};
}

ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_complex(rng);
    }
    return m;
}

ComplexMatrix random_hermitian(std::size_t n, Rng& rng) { return symmetrized(random_matrix(n, n, rng)); }

AlgebraElement random_element(const AlgebraShape& shape, Rng& rng) {
    std::vector<ComplexMatrix> blocks;
    for (std::size_t d : shape.block_dims()) blocks.push_back(random_matrix(d, d, rng));
    return AlgebraElement(shape, std::move(blocks));
}

AlgebraElement random_positive(const AlgebraShape& shape, Rng& rng, double shift) {
    const AlgebraElement b = random_element(shape, rng);
    return alg_add(alg_mul(alg_star(b), b), AlgebraElement::scalar(shape, shift));
}

ModuleVector random_vector(const AlgebraShape& shape, std::size_t rank, Rng& rng) {
    std::vector<AlgebraElement> comps;
    for (std::size_t i = 0; i < rank; ++i) comps.push_back(random_element(shape, rng));
    return ModuleVector(shape, comps);
}

ModuleOperator random_operator(const AlgebraShape& shape, std::size_t out_rank, std::size_t in_rank, Rng& rng) {
    FlattenedBlocks blocks;
    for (std::size_t d : shape.block_dims()) blocks.push_back(random_matrix(out_rank * d, in_rank * d, rng));
    return unflatten(shape, std::move(blocks), out_rank, in_rank);
}

FrameSystem random_frame(const AlgebraShape& shape, std::size_t rank, std::size_t count, Rng& rng,
                         double min_ratio) {
    if (count < rank) throw Error(ErrorCode::DimensionError, "a frame of A^m needs at least m vectors");
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<ModuleVector> vs;
        for (std::size_t n = 0; n < count; ++n) vs.push_back(random_vector(shape, rank, rng));
        FrameSystem f(std::move(vs));
        const FrameReport rep = analyze(f);
        if (rep.is_frame && rep.lower >= min_ratio * rep.upper) return f;
    }
    throw Error(ErrorCode::NoConvergence, "no well-conditioned frame sampled");
}

FrameSystem random_parseval(const AlgebraShape& shape, std::size_t rank, std::size_t count, Rng& rng) {
    if (count < rank) throw Error(ErrorCode::DimensionError, "a frame of A^m needs at least m vectors");
    FlattenedBlocks blocks;
    for (std::size_t d : shape.block_dims()) {
        blocks.push_back(orthonormalize_columns(random_matrix(count * d, rank * d, rng)));
    }
    return FrameSystem::from_analysis(unflatten(shape, std::move(blocks), count, rank));
}

const std::vector<AlgebraShape>& standard_shapes() {
    static const std::vector<AlgebraShape> shapes{AlgebraShape({1}), AlgebraShape({2}), AlgebraShape({1, 2}),
                                                  AlgebraShape({3})};
    return shapes;
}

DominatedPair random_dominated_pair(const AlgebraShape& shape, std::size_t rank, Rng& rng) {
    ModuleVector x = random_vector(shape, rank, rng);
    const AlgebraElement g_root = alg_sqrt(inner_product(x, x));
    AlgebraElement r = random_element(shape, rng);
    r = alg_scale(r, uniform(rng, 0.0, 1.0) / alg_norm(r));
    AlgebraElement a = alg_mul(alg_mul(g_root, alg_mul(alg_star(r), r)), g_root);
    return {std::move(x), std::move(a)};
}

std::vector<nonunital::TailSequence> random_tail_system(Rng& rng, double ideal_probability) {
    const std::size_t n = uniform_count(rng, 1, 4);
    std::vector<nonunital::TailSequence> out;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Complex> prefix(uniform_count(rng, 0, 4));
        for (auto& z : prefix) {
            // Exact zeros are common so that some coordinate sums vanish.
            z = uniform(rng, 0.0, 1.0) < 0.25 ? Complex(0.0) : random_complex(rng);
        }
        const Complex tail = uniform(rng, 0.0, 1.0) < ideal_probability ? Complex(0.0) : random_complex(rng);
        out.emplace_back(std::move(prefix), tail);
    }
    return out;
}

}  // namespace modframe::sampling
