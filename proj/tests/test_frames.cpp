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

#include <doctest.h>

#include <cmath>

#include "modframe/frames.hpp"
#include "modframe/sampling.hpp"
#include "oracles.hpp"

using namespace modframe;

namespace {

const AlgebraShape kS1({1});

AlgebraElement s1(Complex z) { return AlgebraElement::scalar(kS1, z); }

ModuleVector vec1(std::initializer_list<Complex> zs) {
    std::vector<AlgebraElement> comps;
    for (Complex z : zs) comps.push_back(s1(z));
    return ModuleVector(kS1, comps);
}

FrameSystem scalar_frame(std::initializer_list<Complex> zs) {
    std::vector<ModuleVector> vs;
    for (Complex z : zs) vs.push_back(vec1({z}));
    return FrameSystem(vs);
}

// {(1,0), (0,2)} over C.
FrameSystem diag_frame() { return FrameSystem({vec1({1.0, 0.0}), vec1({0.0, 2.0})}); }

ModuleOperator diag_op(std::initializer_list<double> ds) {
    const std::size_t m = ds.size();
    std::vector<AlgebraElement> entries(m * m, s1(0.0));
    std::size_t i = 0;
    for (double d : ds) {
        entries[i * m + i] = s1(d);
        ++i;
    }
    return ModuleOperator(kS1, m, m, entries);
}

double vec_dist(const ModuleVector& a, const ModuleVector& b) { return module_norm(sub(a, b)); }

double system_dist(const FrameSystem& a, const FrameSystem& b) {
    return max_entry_distance(a.analysis(), b.analysis());
}

}  // namespace

TEST_CASE("construction rejects empty and mixed systems") {
    CHECK(oracle::error_code_of([] { FrameSystem({}); }) == ErrorCode::EmptySystem);
    CHECK(oracle::error_code_of([] { FrameSystem({vec1({1.0}), vec1({1.0, 2.0})}); }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("analysis operator rows are adjoints of the vectors") {
    sampling::Rng rng(20);
    const AlgebraShape shape({1, 2});
    const FrameSystem f = sampling::random_frame(shape, 2, 4, rng);
    for (std::size_t n = 0; n < f.size(); ++n) {
        for (std::size_t i = 0; i < 2; ++i) CHECK(f.analysis().entry(n, i) == alg_star(f.vector(n).component(i)));
    }
    CHECK(FrameSystem::from_analysis(f.analysis()).vectors() == f.vectors());
}

TEST_CASE("analyze examples") {
    FrameReport r = analyze(diag_frame());
    CHECK(r.lower == doctest::Approx(1.0));
    CHECK(r.upper == doctest::Approx(4.0));
    CHECK(r.is_frame);
    CHECK(r.is_bessel);
    CHECK_FALSE(r.is_tight);
    CHECK_FALSE(r.tight_constant.has_value());

    r = analyze(scalar_frame({1.0}));
    CHECK(r.lower == 1.0);
    CHECK(r.upper == 1.0);
    CHECK(r.is_parseval);
    CHECK(r.is_tight);

    const AlgebraShape s2({2});
    const double d0[] = {1.0, 0.0};
    const double d1[] = {0.0, 1.0};
    const FrameSystem p({ModuleVector(s2, {AlgebraElement(s2, {ComplexMatrix::diagonal(d0)})}),
                         ModuleVector(s2, {AlgebraElement(s2, {ComplexMatrix::diagonal(d1)})})});
    r = analyze(p);
    CHECK(r.lower == doctest::Approx(1.0));
    CHECK(r.upper == doctest::Approx(1.0));
    CHECK(r.is_parseval);

    r = analyze(FrameSystem({vec1({0.0, 0.0})}));
    CHECK_FALSE(r.is_frame);
    CHECK(r.lower == 0.0);
}

TEST_CASE("theta-sum examples") {
    CHECK(max_entry_distance(frame_operator_as_theta_sum(scalar_frame({1.0})), diag_op({1.0})) == 0.0);
    CHECK(max_entry_distance(frame_operator_as_theta_sum(diag_frame()), diag_op({1.0, 4.0})) == 0.0);
    const ModuleOperator zero = frame_operator_as_theta_sum(FrameSystem({vec1({0.0, 0.0})}));
    CHECK(operator_norm(zero) == 0.0);
}

TEST_CASE("canonical dual examples") {
    sampling::Rng rng(21);
    const FrameSystem p = sampling::random_parseval(AlgebraShape({2}), 2, 3, rng);
    CHECK(system_dist(canonical_dual(p), p) < 1e-12);
    CHECK(system_dist(canonical_dual(scalar_frame({1.0, 2.0})), scalar_frame({0.2, 0.4})) < 1e-15);
    CHECK(system_dist(canonical_dual(diag_frame()), FrameSystem({vec1({1.0, 0.0}), vec1({0.0, 0.5})})) < 1e-15);
    CHECK(oracle::error_code_of([] { canonical_dual(FrameSystem({vec1({1.0, 0.0})})); }) == ErrorCode::NotAFrame);
}

TEST_CASE("canonical dual bounds are reciprocal") {
    sampling::Rng rng(22);
    for (const auto& shape : sampling::standard_shapes()) {
        const FrameSystem f = sampling::random_frame(shape, 2, 4, rng);
        const FrameReport r = analyze(f);
        const FrameReport d = analyze(canonical_dual(f));
        CHECK(std::abs(d.lower - 1.0 / r.upper) <= 1e-9 * (1.0 / r.upper));
        CHECK(std::abs(d.upper - 1.0 / r.lower) <= 1e-9 * (1.0 / r.lower));
    }
}

TEST_CASE("canonical Parseval examples") {
    sampling::Rng rng(23);
    const FrameSystem p = sampling::random_parseval(AlgebraShape({1, 2}), 2, 4, rng);
    CHECK(system_dist(canonical_parseval(p), p) < 1e-12);
    const double r5 = 1.0 / std::sqrt(5.0);
    CHECK(system_dist(canonical_parseval(scalar_frame({1.0, 2.0})), scalar_frame({r5, 2.0 * r5})) < 1e-15);
    CHECK(system_dist(canonical_parseval(diag_frame()), FrameSystem({vec1({1.0, 0.0}), vec1({0.0, 1.0})})) < 1e-15);
    for (const auto& shape : sampling::standard_shapes()) {
        CHECK(analyze(canonical_parseval(sampling::random_frame(shape, 3, 5, rng))).is_parseval);
    }
}

TEST_CASE("frame_from_surjection examples") {
    const FrameSystem basis = frame_from_surjection(ModuleOperator::identity(kS1, 3));
    REQUIRE(basis.size() == 3);
    for (std::size_t q = 0; q < 3; ++q) CHECK(basis.vector(q) == ModuleVector::basis(kS1, 3, q));
    CHECK(analyze(basis).is_parseval);

    const FrameSystem ones = frame_from_surjection(ModuleOperator(kS1, 1, 2, {s1(1.0), s1(1.0)}));
    CHECK(ones.frame_operator().entry(0, 0) == s1(2.0));

    CHECK(oracle::error_code_of([] { frame_from_surjection(ModuleOperator(kS1, 1, 2)); }) ==
          ErrorCode::NotSurjective);

    sampling::Rng rng(24);
    const ModuleOperator t = sampling::random_operator(AlgebraShape({2}), 2, 4, rng);
    const FrameSystem f = frame_from_surjection(t);
    CHECK(max_entry_distance(f.synthesis(), t) == 0.0);
    CHECK(analyze(f).is_frame);
}

TEST_CASE("parseval_from_unit_chain examples") {
    {
        const ModuleOperator chain[] = {ModuleOperator::identity(kS1, 2)};
        const UnitChainResult r = parseval_from_unit_chain(chain);
        CHECK(analyze(r.system).is_parseval);
        REQUIRE(r.stage_end.size() == 1);
        CHECK(r.stage_end[0] == r.system.size());
    }
    {
        const ModuleOperator chain[] = {diag_op({0.5}), diag_op({1.0})};
        const UnitChainResult r = parseval_from_unit_chain(chain);
        REQUIRE(r.system.size() == 2);
        CHECK(r.stage_end == std::vector<std::size_t>{1, 2});
        const double h = std::sqrt(0.5);
        CHECK(vec_dist(r.system.vector(0), vec1({h})) < 1e-15);
        CHECK(vec_dist(r.system.vector(1), vec1({h})) < 1e-15);
        CHECK(r.stage_residual[0] <= 1e-9);
        CHECK(r.stage_residual[1] <= 1e-9);
    }
    {
        const ModuleOperator chain[] = {diag_op({1.0, 0.0}), diag_op({1.0, 1.0})};
        const UnitChainResult r = parseval_from_unit_chain(chain);
        ModuleOperator p1(kS1, 2, 2);
        for (std::size_t n = 0; n < r.stage_end[0]; ++n) p1 = add(p1, theta(r.system.vector(n), r.system.vector(n)));
        CHECK(max_entry_distance(p1, diag_op({1.0, 0.0})) <= 1e-12);
        CHECK(analyze(r.system).is_parseval);
    }
}

TEST_CASE("parseval_from_unit_chain errors") {
    const ModuleOperator bad_order[] = {diag_op({1.0}), diag_op({0.5}), diag_op({1.0})};
    CHECK(oracle::error_code_of([&] { parseval_from_unit_chain(bad_order); }) == ErrorCode::ChainNotIncreasing);
    const ModuleOperator short_chain[] = {diag_op({0.5})};
    CHECK(oracle::error_code_of([&] { parseval_from_unit_chain(short_chain); }) == ErrorCode::LastNotIdentity);
    const ModuleOperator big[] = {diag_op({2.0}), diag_op({1.0})};
    CHECK(oracle::error_code_of([&] { parseval_from_unit_chain(big); }) == ErrorCode::NotContraction);
}

TEST_CASE("property: reconstruction through the canonical dual") {
    sampling::Rng rng(25);
    for (const auto& shape : sampling::standard_shapes()) {
        for (int t = 0; t < 10; ++t) {
            const std::size_t m = 1 + t % 3;
            const FrameSystem f = sampling::random_frame(shape, m, m + 2, rng);
            const FrameSystem d = canonical_dual(f);
            std::vector<ModuleVector> probes;
            for (std::size_t q = 0; q < m; ++q) probes.push_back(ModuleVector::basis(shape, m, q));
            for (int i = 0; i < 10; ++i) probes.push_back(sampling::random_vector(shape, m, rng));
            for (const auto& x : probes) {
                ModuleVector rec = ModuleVector::zero(shape, m);
                for (std::size_t n = 0; n < f.size(); ++n) {
                    rec = add(rec, right_multiply(d.vector(n), inner_product(f.vector(n), x)));
                }
                CHECK(vec_dist(rec, x) <= 1e-9 * std::max(1.0, module_norm(x)));
            }
        }
    }
}

TEST_CASE("property: spectral and norm bounds agree") {
    sampling::Rng rng(26);
    for (const auto& shape : sampling::standard_shapes()) {
        for (int t = 0; t < 20; ++t) {
            const FrameSystem f = sampling::random_frame(shape, 1 + t % 3, 4, rng);
            const FrameReport r = analyze(f);
            const auto [a, b] = bounds_from_norms(f);
            CHECK(std::abs(a - r.lower) <= 1e-9 * std::max(1.0, r.upper));
            CHECK(std::abs(b - r.upper) <= 1e-9 * std::max(1.0, r.upper));
        }
    }
}

TEST_CASE("property: order form A I <= S <= B I and the frame inequality on vectors") {
    sampling::Rng rng(27);
    for (const auto& shape : sampling::standard_shapes()) {
        for (int t = 0; t < 20; ++t) {
            const std::size_t m = 1 + t % 3;
            const FrameSystem f = sampling::random_frame(shape, m, m + 1, rng);
            const FrameReport r = analyze(f);
            const ModuleOperator id = ModuleOperator::identity(shape, m);
            CHECK(is_positive_operator(sub(f.frame_operator(), scale(id, r.lower))));
            CHECK(is_positive_operator(sub(scale(id, r.upper), f.frame_operator())));

            // Direct check of A<x,x> <= sum <x,x_n><x_n,x> <= B<x,x> without the frame operator.
            for (int i = 0; i < 5; ++i) {
                const ModuleVector x = sampling::random_vector(shape, m, rng);
                AlgebraElement sum(shape);
                for (const auto& xn : f.vectors()) {
                    const AlgebraElement c = inner_product(xn, x);
                    sum = alg_add(sum, alg_mul(alg_star(c), c));
                }
                const AlgebraElement xx = inner_product(x, x);
                CHECK(alg_leq(alg_scale(xx, r.lower), sum));
                CHECK(alg_leq(sum, alg_scale(xx, r.upper)));
            }
        }
    }
}

TEST_CASE("property: Parseval iff the theta-sum is the identity") {
    sampling::Rng rng(28);
    for (const auto& shape : sampling::standard_shapes()) {
        for (int t = 0; t < 10; ++t) {
            const std::size_t m = 1 + t % 3;
            const ModuleOperator id = ModuleOperator::identity(shape, m);
            const FrameSystem p = sampling::random_parseval(shape, m, m + 2, rng);
            CHECK(analyze(p).is_parseval);
            CHECK(max_entry_distance(frame_operator_as_theta_sum(p), id) <= 1e-10);

            const FrameSystem f = sampling::random_frame(shape, m, m + 2, rng);
            const bool theta_is_unit = max_entry_distance(frame_operator_as_theta_sum(f), id) <= 1e-10;
            CHECK(theta_is_unit == analyze(f).is_parseval);
            CHECK(max_entry_distance(frame_operator_as_theta_sum(f), f.frame_operator()) <= 1e-12);
        }
    }
}

TEST_CASE("property: unit chain partial sums increase up to the identity") {
    sampling::Rng rng(29);
    for (const auto& shape : sampling::standard_shapes()) {
        const std::size_t m = 2;
        const ModuleOperator id = ModuleOperator::identity(shape, m);
        // E_s = I - (s/3-weighted) shrinking of a random positive contraction.
        const ModuleOperator b = sampling::random_operator(shape, m, m, rng);
        ModuleOperator c = compose(adjoint(b), b);
        c = scale(c, 1.0 / operator_norm(c));
        std::vector<ModuleOperator> chain;
        for (double w : {0.75, 0.5, 0.25, 0.0}) chain.push_back(sub(id, scale(c, w)));
        const UnitChainResult r = parseval_from_unit_chain(chain);
        ModuleOperator partial(shape, m, m);
        ModuleOperator previous = partial;
        std::size_t n = 0;
        for (std::size_t s = 0; s < chain.size(); ++s) {
            for (; n < r.stage_end[s]; ++n) partial = add(partial, theta(r.system.vector(n), r.system.vector(n)));
            CHECK(r.stage_dominated[s]);
            CHECK(r.stage_residual[s] <= 1e-9);
            CHECK(is_positive_operator(sub(partial, previous)));
            CHECK(is_positive_operator(sub(id, partial)));
            previous = partial;
        }
        CHECK(analyze(r.system).is_parseval);
    }
}
