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

#include "modframe/cstar.hpp"
#include "modframe/sampling.hpp"
#include "oracles.hpp"

using namespace modframe;

namespace {

const AlgebraShape kS2({2});

AlgebraElement mat2(ComplexMatrix m) { return AlgebraElement(kS2, {std::move(m)}); }

double dist(const AlgebraElement& a, const AlgebraElement& b) { return alg_norm(alg_sub(a, b)); }

}  // namespace

TEST_CASE("shape validation") {
    CHECK(oracle::error_code_of([] { AlgebraShape({}); }) == ErrorCode::DimensionError);
    CHECK(oracle::error_code_of([] { AlgebraShape({2, 0}); }) == ErrorCode::DimensionError);
    CHECK(oracle::error_code_of([] { AlgebraElement(kS2, {ComplexMatrix::identity(3)}); }) ==
          ErrorCode::ShapeMismatch);
}

TEST_CASE("arithmetic examples") {
    const AlgebraElement e = AlgebraElement::unit(kS2);
    CHECK(alg_star(e) == e);
    sampling::Rng rng(1);
    const AlgebraElement a = sampling::random_element(kS2, rng);
    CHECK(alg_mul(a, e) == a);
    const AlgebraElement p = alg_mul(mat2({{0.0, 1.0}, {0.0, 0.0}}), mat2({{0.0, 0.0}, {1.0, 0.0}}));
    CHECK(p == mat2({{1.0, 0.0}, {0.0, 0.0}}));
    CHECK(oracle::error_code_of([&] { alg_add(a, AlgebraElement::unit(AlgebraShape({1}))); }) ==
          ErrorCode::ShapeMismatch);
}

TEST_CASE("order examples") {
    const AlgebraElement e = AlgebraElement::unit(kS2);
    const AlgebraElement h = mat2({{2.0, Complex(0.0, 1.0)}, {Complex(0.0, -1.0), -1.0}});
    CHECK(alg_leq(h, h));
    CHECK(alg_leq(AlgebraElement(kS2), e));
    CHECK_FALSE(alg_leq(mat2({{1.0, 0.0}, {0.0, 0.0}}), mat2({{0.0, 0.0}, {0.0, 1.0}})));
    CHECK(oracle::error_code_of([&] { alg_leq(mat2({{0.0, 1.0}, {0.0, 0.0}}), e); }) == ErrorCode::NotHermitian);
    CHECK(oracle::error_code_of([&] { alg_leq(e, AlgebraElement::unit(AlgebraShape({1}))); }) ==
          ErrorCode::ShapeMismatch);
}

TEST_CASE("norm examples") {
    CHECK(alg_norm(AlgebraElement::unit(kS2)) == doctest::Approx(1.0));
    const double d[] = {1.0, 2.0};
    const AlgebraElement a(AlgebraShape({1, 2}), {ComplexMatrix{{3.0}}, ComplexMatrix::diagonal(d)});
    CHECK(alg_norm(a) == doctest::Approx(3.0));
    CHECK(alg_norm(mat2({{0.0, 2.0}, {0.0, 0.0}})) == doctest::Approx(2.0));
}

TEST_CASE("functional calculus examples") {
    const AlgebraElement e = AlgebraElement::unit(kS2);
    CHECK(dist(alg_sqrt(e), e) < 1e-14);

    const AlgebraShape s11({1, 1});
    const AlgebraElement d(s11, {ComplexMatrix{{4.0}}, ComplexMatrix{{9.0}}});
    const AlgebraElement want(s11, {ComplexMatrix{{0.5}}, ComplexMatrix{{1.0 / 3.0}}});
    CHECK(dist(alg_inv_sqrt(d), want) < 1e-14);

    const AlgebraElement m = mat2({{5.0, 3.0}, {3.0, 5.0}});
    const AlgebraElement r = alg_sqrt(m);
    CHECK(dist(alg_mul(r, r), m) <= 1e-9);

    CHECK(oracle::error_code_of([] { alg_sqrt(mat2({{-1.0, 0.0}, {0.0, 1.0}})); }) == ErrorCode::NotPositive);
    CHECK(oracle::error_code_of([] { alg_inv(mat2({{1.0, 0.0}, {0.0, 0.0}})); }) == ErrorCode::SingularElement);
}

TEST_CASE("property: C*-identity") {
    sampling::Rng rng(3);
    for (const auto& shape : sampling::standard_shapes()) {
        for (int t = 0; t < 50; ++t) {
            const AlgebraElement a = sampling::random_element(shape, rng);
            const double n = alg_norm(a);
            CHECK(std::abs(alg_norm(alg_mul(alg_star(a), a)) - n * n) <= 1e-9);
        }
    }
}

TEST_CASE("property: order is transitive and antisymmetric") {
    sampling::Rng rng(4);
    for (const auto& shape : sampling::standard_shapes()) {
        for (int t = 0; t < 50; ++t) {
            const AlgebraElement a = sampling::random_positive(shape, rng);
            const AlgebraElement b = alg_add(a, sampling::random_positive(shape, rng));
            const AlgebraElement c = alg_add(b, sampling::random_positive(shape, rng));
            REQUIRE(alg_leq(a, b));
            REQUIRE(alg_leq(b, c));
            CHECK(alg_leq(a, c));
            CHECK(alg_leq(a, a));
            // a <= b <= a only for equal elements.
            if (alg_leq(b, a)) CHECK(dist(a, b) <= 1e-8);
        }
    }
}

TEST_CASE("property: inverse of well-conditioned Hermitian elements") {
    sampling::Rng rng(5);
    for (const auto& shape : sampling::standard_shapes()) {
        for (int t = 0; t < 50; ++t) {
            const AlgebraElement a = sampling::random_positive(shape, rng, 0.5);
            const AlgebraElement inv = alg_inv(a);
            const AlgebraElement e = AlgebraElement::unit(shape);
            CHECK(dist(alg_mul(inv, a), e) <= 1e-9);
            CHECK(dist(alg_mul(a, inv), e) <= 1e-9);
        }
    }
}

TEST_CASE("property: positive elements sit between 0 and their norm") {
    sampling::Rng rng(6);
    for (const auto& shape : sampling::standard_shapes()) {
        for (int t = 0; t < 50; ++t) {
            const AlgebraElement a = sampling::random_positive(shape, rng);
            CHECK(alg_leq(AlgebraElement(shape), a));
            CHECK(alg_leq(a, AlgebraElement::scalar(shape, alg_norm(a))));
        }
    }
}
