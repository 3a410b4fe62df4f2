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
#include <random>
#include <vector>

#include "modframe/frames.hpp"
#include "modframe/nonunital.hpp"

namespace modframe::sampling {

using Rng = std::mt19937_64;

/// Real and imaginary parts uniform in [-1, 1].
Complex random_complex(Rng& rng);
ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng);
ComplexMatrix random_hermitian(std::size_t n, Rng& rng);

AlgebraElement random_element(const AlgebraShape& shape, Rng& rng);
/// b*b + shift e for a random b.
AlgebraElement random_positive(const AlgebraShape& shape, Rng& rng, double shift = 0.0);
ModuleVector random_vector(const AlgebraShape& shape, std::size_t rank, Rng& rng);
ModuleOperator random_operator(const AlgebraShape& shape, std::size_t out_rank, std::size_t in_rank, Rng& rng);

/// Random frame of `count` >= rank vectors whose bound ratio A/B is at least min_ratio.
FrameSystem random_frame(const AlgebraShape& shape, std::size_t rank, std::size_t count, Rng& rng,
                         double min_ratio = 1e-2);
/// Random Parseval frame: each flattened block of U has orthonormal columns.
FrameSystem random_parseval(const AlgebraShape& shape, std::size_t rank, std::size_t count, Rng& rng);

/// Shapes used across the randomized suites.
const std::vector<AlgebraShape>& standard_shapes();

struct DominatedPair {
    ModuleVector x;
    AlgebraElement a;  // 0 <= a <= <x, x>
};

/// a = G^{1/2} r* r G^{1/2} with G = <x, x> and ||r|| <= 1.
DominatedPair random_dominated_pair(const AlgebraShape& shape, std::size_t rank, Rng& rng);

/// 1 to 4 eventually constant sequences; prefixes up to length 4; tails zero with
/// probability ideal_probability.
std::vector<nonunital::TailSequence> random_tail_system(Rng& rng, double ideal_probability = 0.3);

}  // namespace modframe::sampling
