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

#include "modframe/extension.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "modframe/error.hpp"

namespace modframe {

namespace {

// t^p on the spectrum above cut, 0 below.
AlgebraElement pseudo_power(const AlgebraElement& a, double p) {
    const double cut = kRankTol * alg_norm(a);
    return alg_apply(a, [=](double t) { return t > cut ? std::pow(t, p) : 0.0; });
}

struct Factorization {
    ModuleVector y;
    AlgebraElement c;       // <y, y> = <x, x>^{1/2}
    AlgebraElement a_root;  // a^{1/2}
    AlgebraElement b;       // closed-form limit
};

Factorization factorize(const ModuleVector& x, const AlgebraElement& a) {
    const AlgebraElement gram = inner_product(x, x);
    if (!alg_is_positive(a)) throw Error(ErrorCode::NotPositive, "a is not positive");
    if (!alg_leq(a, gram)) throw Error(ErrorCode::NotDominated, "a is not dominated by <x, x>");

    // x = v <v, v> with v = x <x,x>^{-1/3}; then y = v <v,v>^{1/4} has <y,y>^2 = <x,x>.
    const ModuleVector v = right_multiply(x, pseudo_power(gram, -1.0 / 3.0));
    const ModuleVector y = right_multiply(v, pseudo_power(inner_product(v, v), 0.25));
    AlgebraElement c = inner_product(y, y);
    AlgebraElement a_root = alg_sqrt(a);
    AlgebraElement b = alg_mul(pseudo_power(c, -0.5), a_root);
    return {y, std::move(c), std::move(a_root), std::move(b)};
}

ModuleOperator vectors_analysis(const AlgebraShape& shape, std::size_t rank, std::span<const ModuleVector> vectors) {
    std::vector<ModuleOperator> rows;
    for (const auto& x : vectors) {
        if (x.shape() != shape || x.rank() != rank) throw Error(ErrorCode::ShapeMismatch, "vector dimensions differ");
        rows.push_back(adjoint(x.as_column()));
    }
    if (rows.empty()) return ModuleOperator(shape, 1, rank);  // the zero row acts as the empty family
    return stack_rows(rows);
}

ExtensionResult assemble(std::span<const ModuleVector> input, std::vector<ModuleVector> added, double input_upper,
                         double tol_frame) {
    std::vector<ModuleVector> all(input.begin(), input.end());
    all.insert(all.end(), added.begin(), added.end());
    FrameSystem combined(std::move(all));
    FrameReport rep = analyze(combined, tol_frame);
    return ExtensionResult{std::move(added), std::move(combined), ExtensionCertificate{input_upper, 0.0, rep}};
}

}  // namespace

ModuleVector dominated_sqrt_factor(const ModuleVector& x, const AlgebraElement& a) {
    const Factorization fz = factorize(x, a);
    return right_multiply(fz.y, fz.b);
}

DominatedSequenceTrace dominated_sqrt_sequence(const ModuleVector& x, const AlgebraElement& a, std::size_t terms) {
    const Factorization fz = factorize(x, a);
    const AlgebraShape& shape = a.shape();
    std::vector<AlgebraElement> seq;
    seq.reserve(terms);
    for (std::size_t n = 1; n <= terms; ++n) {
        const AlgebraElement shifted = alg_add(fz.c, AlgebraElement::scalar(shape, 1.0 / static_cast<double>(n)));
        seq.push_back(alg_mul(alg_apply(shifted, [](double t) { return 1.0 / std::sqrt(t); }), fz.a_root));
    }

    std::vector<double> spectrum;
    for (const auto& blk : fz.c.blocks()) {
        const HermitianEigen e = eig_hermitian(blk);
        for (double l : e.eigenvalues) spectrum.push_back(std::max(l, 0.0));
    }

    DominatedSequenceTrace tr{fz.b, {}, {}, {}, {}};
    for (std::size_t i = 0; i < terms; ++i) {
        const double n = static_cast<double>(i + 1);
        tr.distance_to_limit.push_back(alg_norm(alg_sub(seq[i], fz.b)));
        const ModuleVector z = right_multiply(fz.y, seq[i]);
        tr.residual.push_back(alg_norm(alg_sub(a, inner_product(z, z))));
        double bound = 0.0;
        for (double t : spectrum) bound = std::max(bound, std::abs(t / std::sqrt(t + 1.0 / n) - std::sqrt(t)));
        tr.uniform_bound.push_back(bound);
    }
    for (std::size_t n = 1; 2 * n <= terms; ++n) {
        tr.cauchy.push_back(alg_norm(alg_sub(seq[2 * n - 1], seq[n - 1])));
    }
    return tr;
}

std::vector<ModuleVector> positive_theta_decomposition(const ModuleOperator& t) {
    if (!t.is_square()) throw Error(ErrorCode::NonSquare, "decomposition needs an operator on A^m");
    const ModuleOperator root = operator_sqrt(t);
    std::vector<ModuleVector> out;
    out.reserve(t.in_rank());
    for (std::size_t q = 0; q < t.in_rank(); ++q) out.push_back(column(root, q));
    return out;
}

ExtensionResult extend_to_frame(const AlgebraShape& shape, std::size_t rank, std::span<const ModuleVector> vectors) {
    const ModuleOperator u = vectors_analysis(shape, rank, vectors);
    const double input_upper = std::pow(operator_norm(u), 2);

    std::vector<ModuleVector> added;
    for (std::size_t q = 0; q < rank; ++q) added.push_back(ModuleVector::basis(shape, rank, q));
    ExtensionResult res = assemble(vectors, added, input_upper, kFrameTol);

    // Theta-witness: split the canonical dual of the combined system into the
    // part paired with the input (V) and the part paired with the generators (g_n).
    const FrameSystem dual = canonical_dual(res.combined);
    const std::size_t n_in = vectors.size();
    ModuleOperator witness = ModuleOperator::identity(shape, rank);
    if (n_in > 0) {
        std::vector<ModuleOperator> v_rows;
        for (std::size_t n = 0; n < n_in; ++n) v_rows.push_back(row(dual.analysis(), n));
        witness = sub(witness, compose(adjoint(stack_rows(v_rows)), u));
    }
    ModuleOperator theta_sum(shape, rank, rank);
    for (std::size_t q = 0; q < added.size(); ++q) theta_sum = add(theta_sum, theta(dual.vector(n_in + q), added[q]));
    res.certificate.residual = operator_norm(sub(witness, theta_sum));
    return res;
}

ExtensionResult extend_to_frame(const FrameSystem& f) { return extend_to_frame(f.shape(), f.rank(), f.vectors()); }

ExtensionResult extend_to_parseval(const AlgebraShape& shape, std::size_t rank, std::span<const ModuleVector> vectors,
                                   double tol_frame) {
    const ModuleOperator u = vectors_analysis(shape, rank, vectors);
    ModuleOperator s = compose(adjoint(u), u);
    FlattenedBlocks sym;
    for (const auto& b : s.blocks()) sym.push_back(symmetrized(b));
    s = unflatten(shape, std::move(sym), rank, rank);
    const double upper = std::max(0.0, operator_spectrum_range(s).second);
    if (upper > 1.0 + tol_frame) {
        throw Error(ErrorCode::BesselBoundExceedsOne, "Bessel bound " + std::to_string(upper) + " exceeds one");
    }

    const ModuleOperator id = ModuleOperator::identity(shape, rank);
    // Rounding leaves eigenvalues of I - S near 1e-16 that the square root would
    // lift to 1e-8; treat the spectrum below the noise floor as zero. B may also
    // exceed 1 by up to tol_frame, so negatives are clipped.
    const double floor = kDeficitFloor * std::max(1.0, upper);
    const ModuleOperator deficit =
        operator_function(sub(id, s), [floor](double t) { return t > floor ? t : 0.0; });
    std::vector<ModuleVector> added;
    for (auto& z : positive_theta_decomposition(deficit)) {
        if (module_norm(z) > kPruneNorm) added.push_back(std::move(z));
    }
    ExtensionResult res = assemble(vectors, std::move(added), upper, tol_frame);
    res.certificate.residual = operator_norm(sub(id, res.combined.frame_operator()));
    return res;
}

ExtensionResult extend_to_parseval(const FrameSystem& f, double tol_frame) {
    return extend_to_parseval(f.shape(), f.rank(), f.vectors(), tol_frame);
}

}  // namespace modframe
