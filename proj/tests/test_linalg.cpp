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
#include <vector>

#include "modframe/error.hpp"
#include "modframe/linalg.hpp"
#include "modframe/sampling.hpp"
#include "oracles.hpp"

using namespace modframe;

namespace {

ComplexMatrix reconstruct(const HermitianEigen& e) {
    return e.eigenvectors * ComplexMatrix::diagonal(e.eigenvalues) * e.eigenvectors.adjoint();
}

}  // namespace

TEST_CASE("eig_hermitian examples") {
    SUBCASE("identity") {
        const auto e = eig_hermitian(ComplexMatrix::identity(2));
        CHECK(e.eigenvalues[0] == doctest::Approx(1.0));
        CHECK(e.eigenvalues[1] == doctest::Approx(1.0));
        CHECK(oracle::max_diff(e.eigenvectors.adjoint() * e.eigenvectors, ComplexMatrix::identity(2)) < 1e-12);
    }
    SUBCASE("diagonal sorted ascending") {
        const auto e = eig_hermitian(ComplexMatrix{{3.0, 0.0}, {0.0, -1.0}});
        CHECK(e.eigenvalues[0] == doctest::Approx(-1.0));
        CHECK(e.eigenvalues[1] == doctest::Approx(3.0));
    }
    SUBCASE("matches characteristic polynomial") {
        const ComplexMatrix m{{2.0, 1.0}, {1.0, 2.0}};
        const auto [lo, hi] = oracle::eigenvalues_2x2(m);
        CHECK(lo == doctest::Approx(1.0));
        CHECK(hi == doctest::Approx(3.0));
        const auto e = eig_hermitian(m);
        CHECK(std::abs(e.eigenvalues[0] - lo) < 1e-12);
        CHECK(std::abs(e.eigenvalues[1] - hi) < 1e-12);
    }
    SUBCASE("complex off-diagonal") {
        const ComplexMatrix m{{1.0, Complex(0.0, 2.0)}, {Complex(0.0, -2.0), -1.0}};
        const auto [lo, hi] = oracle::eigenvalues_2x2(m);
        const auto e = eig_hermitian(m);
        CHECK(std::abs(e.eigenvalues[0] - lo) < 1e-12);
        CHECK(std::abs(e.eigenvalues[1] - hi) < 1e-12);
    }
}

TEST_CASE("eig_hermitian errors") {
    CHECK(oracle::error_code_of([] { eig_hermitian(ComplexMatrix(2, 3)); }) == ErrorCode::NonSquare);
    CHECK(oracle::error_code_of([] { eig_hermitian(ComplexMatrix{{1.0, 1.0}, {0.0, 1.0}}); }) == ErrorCode::NotHermitian);
}

TEST_CASE("matrix entries must be finite") {
    CHECK(oracle::error_code_of([] { ComplexMatrix{{NAN}}; }) == ErrorCode::DomainError);
}

TEST_CASE("apply_spectral_function examples") {
    const ComplexMatrix m{{2.0, Complex(1.0, 1.0)}, {Complex(1.0, -1.0), 5.0}};
    CHECK(oracle::max_diff(apply_spectral_function(m, [](double t) { return t; }), m) < 1e-12);

    const double d[] = {4.0, 9.0};
    const ComplexMatrix r = apply_spectral_function(ComplexMatrix::diagonal(d), [](double t) { return std::sqrt(t); });
    const double want[] = {2.0, 3.0};
    CHECK(oracle::max_diff(r, ComplexMatrix::diagonal(want)) < 1e-12);

    const ComplexMatrix p{{5.0, 3.0}, {3.0, 5.0}};
    const ComplexMatrix inv_root = apply_spectral_function(p, [](double t) { return 1.0 / std::sqrt(t); });
    CHECK(oracle::max_diff(inv_root * inv_root * p, ComplexMatrix::identity(2)) < 1e-12);

    CHECK(oracle::error_code_of([] {
              apply_spectral_function(ComplexMatrix{{0.0}}, [](double t) { return 1.0 / t; });
          }) == ErrorCode::DomainError);
}

TEST_CASE("op_norm examples") {
    CHECK(op_norm(ComplexMatrix::identity(3)) == doctest::Approx(1.0));
    const double d[] = {2.0, -3.0};
    CHECK(op_norm(ComplexMatrix::diagonal(d)) == 3.0);
    CHECK(op_norm(ComplexMatrix{{0.0, 2.0}, {0.0, 0.0}}) == 2.0);
}

TEST_CASE("psd_check examples") {
    auto r = psd_check(ComplexMatrix::identity(2));
    CHECK(r.is_psd);
    CHECK(r.min_eig == doctest::Approx(1.0));
    const double d[] = {1.0, -1.0};
    r = psd_check(ComplexMatrix::diagonal(d));
    CHECK_FALSE(r.is_psd);
    CHECK(r.min_eig == doctest::Approx(-1.0));
    r = psd_check(ComplexMatrix{{2.0, 1.0}, {1.0, 2.0}});
    CHECK(r.is_psd);
    CHECK(r.min_eig == doctest::Approx(1.0));
    CHECK(oracle::error_code_of([] { psd_check(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}); }) == ErrorCode::NotHermitian);
}

TEST_CASE("numerical_rank examples") {
    CHECK(numerical_rank(ComplexMatrix(3, 3)) == 0);
    CHECK(numerical_rank(ComplexMatrix::identity(4)) == 4);
    CHECK(numerical_rank(ComplexMatrix{{1.0, 1.0}, {1.0, 1.0}}) == 1);
    CHECK(numerical_rank(ComplexMatrix{{1.0, 2.0, 3.0}, {2.0, 4.0, 6.0}}) == 1);
}

TEST_CASE("singular values of a rectangular matrix") {
    const ComplexMatrix m{{3.0, 0.0}, {0.0, 0.0}, {0.0, 4.0}};
    const auto s = singular_values(m);
    REQUIRE(s.size() == 2);
    CHECK(s[0] == doctest::Approx(4.0));
    CHECK(s[1] == doctest::Approx(3.0));
}

TEST_CASE("inverse and orthonormal helpers") {
    sampling::Rng rng(7);
    const ComplexMatrix a = sampling::random_matrix(5, 5, rng);
    CHECK(oracle::max_diff(inverse(a) * a, ComplexMatrix::identity(5)) < 1e-10);
    CHECK(oracle::error_code_of([] { inverse(ComplexMatrix{{1.0, 2.0}, {2.0, 4.0}}); }) == ErrorCode::SingularElement);

    const ComplexMatrix q = orthonormalize_columns(sampling::random_matrix(6, 2, rng));
    CHECK(oracle::max_diff(q.adjoint() * q, ComplexMatrix::identity(2)) < 1e-12);
    const ComplexMatrix c = orthonormal_complement(q);
    REQUIRE(c.cols() == 4);
    CHECK(oracle::max_diff(c.adjoint() * c, ComplexMatrix::identity(4)) < 1e-12);
    CHECK(max_abs(q.adjoint() * c) < 1e-12);
}

TEST_CASE("matrix product agrees with the naive product") {
    sampling::Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        const ComplexMatrix a = sampling::random_matrix(4, 7, rng);
        const ComplexMatrix b = sampling::random_matrix(7, 3, rng);
        CHECK(oracle::max_diff(a * b, oracle::naive_product(a, b)) < 1e-13);
    }
}

TEST_CASE("property: eigendecomposition reconstructs random Hermitian matrices") {
    sampling::Rng rng(2026);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 1 + t % 12;
        const ComplexMatrix m = sampling::random_hermitian(n, rng);
        const auto e = eig_hermitian(m);
        CHECK(oracle::max_diff(reconstruct(e), m) <= 1e-10);
        CHECK(oracle::max_diff(e.eigenvectors.adjoint() * e.eigenvectors, ComplexMatrix::identity(n)) <= 1e-10);
        CHECK(std::is_sorted(e.eigenvalues.begin(), e.eigenvalues.end()));
    }
}

TEST_CASE("property: square root squares back for PSD input") {
    sampling::Rng rng(5);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + t % 8;
        const ComplexMatrix b = sampling::random_matrix(n, n, rng);
        const ComplexMatrix p = b.adjoint() * b;
        const ComplexMatrix r = apply_spectral_function(p, [](double x) { return std::sqrt(std::max(x, 0.0)); });
        CHECK(oracle::max_diff(r * r, p) <= 1e-9);
    }
}

TEST_CASE("property: op_norm of Hermitian matrices is the spectral radius") {
    sampling::Rng rng(99);
    for (int t = 0; t < 100; ++t) {
        const ComplexMatrix m = sampling::random_hermitian(1 + t % 10, rng);
        const auto e = eig_hermitian(m);
        const double radius = std::max(std::abs(e.eigenvalues.front()), std::abs(e.eigenvalues.back()));
        CHECK(std::abs(op_norm(m) - radius) <= 1e-10);
    }
}

TEST_CASE("property: psd_check agrees with Cholesky outside the margin band") {
    sampling::Rng rng(31337);
    int compared = 0;
    while (compared < 1000) {
        const std::size_t n = 1 + compared % 6;
        ComplexMatrix m = sampling::random_hermitian(n, rng);
        // Shift toward the PSD boundary so both verdicts occur.
        const auto e = eig_hermitian(m);
        std::uniform_real_distribution<double> shift(-0.5, 0.5);
        m += ComplexMatrix::identity(n) * Complex(shift(rng) - e.eigenvalues.front());
        const auto r = psd_check(m);
        if (std::abs(r.min_eig) <= 1e-6) continue;
        CHECK(r.is_psd == oracle::cholesky_succeeds(m));
        ++compared;
    }
}
