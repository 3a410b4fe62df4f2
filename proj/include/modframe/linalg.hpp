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

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace modframe {

using Complex = std::complex<double>;

/// Default tolerances of the dense kernel. Every operation taking one of
/// these accepts an override.
inline constexpr double kEigTol = 1e-10;
inline constexpr double kPsdTol = 1e-9;
inline constexpr double kRankTol = 1e-8;
/// Max-entry asymmetry accepted as Hermitian, scaled by max(1, max|M_ij|).
inline constexpr double kHermTol = 1e-10;

/// Dense row-major complex matrix. Entries are always finite.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return entries_.empty(); }

    Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Complex> data() const noexcept { return entries_; }

    ComplexMatrix adjoint() const;
    /// Copy of rows [r0, r0+nr) x cols [c0, c0+nc).
    ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& b);

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

double max_abs(const ComplexMatrix& m);
double frobenius_norm(const ComplexMatrix& m);
/// max |M_ij - conj(M_ji)|; throws NonSquare for rectangular input.
double hermitian_defect(const ComplexMatrix& m);
/// (M + M*) / 2
ComplexMatrix symmetrized(const ComplexMatrix& m);

struct HermitianEigen {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // columns
};

/// Cyclic complex Jacobi. The input must be Hermitian within kHermTol and is
/// symmetrized before rotating. `tol_eig` bounds the off-diagonal mass accepted
/// if the sweep limit is reached.
HermitianEigen eig_hermitian(const ComplexMatrix& m, double tol_eig = kEigTol);

/// V diag(f(lambda)) V*. Throws DomainError when f is not finite at an eigenvalue.
ComplexMatrix apply_spectral_function(const ComplexMatrix& m, const std::function<double(double)>& f,
                                      double tol_eig = kEigTol);

/// Largest singular value, sqrt(lambda_max(M*M)).
double op_norm(const ComplexMatrix& m);

/// All min(rows, cols) singular values, descending. Computed from the
/// Hermitian dilation [[0, M], [M*, 0]] so that small singular values keep
/// absolute accuracy eps * sigma_max.
std::vector<double> singular_values(const ComplexMatrix& m);

struct PsdCheck {
    bool is_psd;
    double min_eig;
};

PsdCheck psd_check(const ComplexMatrix& m, double tol_psd = kPsdTol);

/// Number of singular values above tol_rank * sigma_max.
std::size_t numerical_rank(const ComplexMatrix& m, double tol_rank = kRankTol);

/// Inverse of a square matrix by Gauss-Jordan elimination with partial
/// pivoting. Throws SingularElement when a pivot vanishes.
ComplexMatrix inverse(const ComplexMatrix& m);

/// Orthonormalizes the columns (modified Gram-Schmidt, two passes).
/// Throws DomainError if the columns are numerically dependent.
ComplexMatrix orthonormalize_columns(const ComplexMatrix& m);

/// Given Q (n x r) with orthonormal columns, returns an n x (n - r) matrix whose
/// columns are an orthonormal basis of R(Q)^perp.
ComplexMatrix orthonormal_complement(const ComplexMatrix& q);

}  // namespace modframe
