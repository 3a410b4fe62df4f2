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

#include "modframe/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "modframe/error.hpp"

namespace modframe {

namespace {

constexpr int kSweepLimit = 100;
constexpr double kOffDiagRel = 1e-14;

void require_finite(std::span<const Complex> v) {
    for (const Complex& z : v) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorCode::DomainError, "matrix entry is not finite");
        }
    }
}

void require_same_dims(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::DimensionError,
                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                        std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
}

double off_diagonal_mass(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i != j) s += std::norm(a(i, j));
        }
    }
    return std::sqrt(s);
}

void require_hermitian(const ComplexMatrix& m) {
    const double defect = hermitian_defect(m);
    if (defect > kHermTol * std::max(1.0, max_abs(m))) {
        throw Error(ErrorCode::NotHermitian, "max asymmetry " + std::to_string(defect));
    }
}

// One complex Jacobi rotation annihilating a(p, q), accumulated into v.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const std::size_t n = a.rows();
    const Complex h = a(p, q);
    const double g = std::abs(h);
    const Complex ph = h / g;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();

    const double theta = (aqq - app) / (2.0 * g);
    double t;
    if (std::abs(theta) > 1e150) {
        t = 0.5 / theta;
    } else {
        t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    for (std::size_t k = 0; k < n; ++k) {
        if (k == p || k == q) continue;
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        const Complex np = c * apk - s * ph * aqk;
        const Complex nq = s * apk + c * ph * aqk;
        a(p, k) = np;
        a(q, k) = nq;
        a(k, p) = std::conj(np);
        a(k, q) = std::conj(nq);
    }
    a(p, p) = app - t * g;
    a(q, q) = aqq + t * g;
    a(p, q) = 0.0;
    a(q, p) = 0.0;

    const Complex cph = std::conj(ph);
    for (std::size_t k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = c * vkp - s * cph * vkq;
        v(k, q) = s * vkp + c * cph * vkq;
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw Error(ErrorCode::DimensionError, "entry count does not match rows x cols");
    }
    require_finite(entries_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(ErrorCode::DimensionError, "ragged initializer");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
    require_finite(entries_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    }
    return r;
}

ComplexMatrix ComplexMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorCode::DimensionError, "block out of range");
    ComplexMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    }
    return b;
}

void ComplexMatrix::set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) {
        throw Error(ErrorCode::DimensionError, "block out of range");
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    require_same_dims(*this, o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    require_same_dims(*this, o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (Complex& z : entries_) z *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) {
        throw Error(ErrorCode::DimensionError, "product of " + std::to_string(a.rows_) + "x" +
                                                   std::to_string(a.cols_) + " and " +
                                                   std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    }
    ComplexMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

double max_abs(const ComplexMatrix& m) {
    double r = 0.0;
    for (const Complex& z : m.data()) r = std::max(r, std::abs(z));
    return r;
}

double frobenius_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (const Complex& z : m.data()) s += std::norm(z);
    return std::sqrt(s);
}

double hermitian_defect(const ComplexMatrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::NonSquare, "matrix is not square");
    double d = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = i; j < m.cols(); ++j) d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
    }
    return d;
}

ComplexMatrix symmetrized(const ComplexMatrix& m) {
    ComplexMatrix r = m;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        r(i, i) = m(i, i).real();
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
            const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            r(i, j) = avg;
            r(j, i) = std::conj(avg);
        }
    }
    return r;
}

HermitianEigen eig_hermitian(const ComplexMatrix& m, double tol_eig) {
    require_hermitian(m);
    const std::size_t n = m.rows();
    ComplexMatrix a = symmetrized(m);
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double scale = frobenius_norm(a);

    bool converged = false;
    for (int sweep = 0; sweep < kSweepLimit; ++sweep) {
        if (off_diagonal_mass(a) <= kOffDiagRel * scale) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double g = std::abs(a(p, q));
                if (g == 0.0) continue;
                const double app = std::abs(a(p, p).real());
                const double aqq = std::abs(a(q, q).real());
                // Entries below the rounding level of both diagonals are dropped.
                if (sweep > 3 && app + 100.0 * g == app && aqq + 100.0 * g == aqq) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                rotate(a, v, p, q);
            }
        }
    }
    if (!converged && off_diagonal_mass(a) > std::max(kOffDiagRel, tol_eig) * scale) {
        throw Error(ErrorCode::NoConvergence, "Jacobi sweep limit exceeded");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

ComplexMatrix apply_spectral_function(const ComplexMatrix& m, const std::function<double(double)>& f,
                                      double tol_eig) {
    const HermitianEigen e = eig_hermitian(m, tol_eig);
    const std::size_t n = m.rows();
    std::vector<double> fl(n);
    for (std::size_t k = 0; k < n; ++k) {
        fl[k] = f(e.eigenvalues[k]);
        if (!std::isfinite(fl[k])) {
            throw Error(ErrorCode::DomainError,
                        "spectral function undefined at eigenvalue " + std::to_string(e.eigenvalues[k]));
        }
    }
    ComplexMatrix r(n, n);
    const ComplexMatrix& vec = e.eigenvectors;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Complex s{};
            for (std::size_t k = 0; k < n; ++k) s += vec(i, k) * fl[k] * std::conj(vec(j, k));
            r(i, j) = s;
            r(j, i) = std::conj(s);
        }
        r(i, i) = r(i, i).real();
    }
    return r;
}

double op_norm(const ComplexMatrix& m) {
    if (m.empty()) return 0.0;
    const ComplexMatrix gram = m.rows() < m.cols() ? m * m.adjoint() : m.adjoint() * m;
    const HermitianEigen e = eig_hermitian(symmetrized(gram));
    return std::sqrt(std::max(0.0, e.eigenvalues.back()));
}

std::vector<double> singular_values(const ComplexMatrix& m) {
    const std::size_t r = m.rows();
    const std::size_t c = m.cols();
    const std::size_t k = std::min(r, c);
    if (k == 0) return {};
    ComplexMatrix dil(r + c, r + c);
    dil.set_block(0, r, m);
    dil.set_block(r, 0, m.adjoint());
    const HermitianEigen e = eig_hermitian(dil);
    std::vector<double> sv(k);
    for (std::size_t i = 0; i < k; ++i) sv[i] = std::max(0.0, e.eigenvalues[r + c - 1 - i]);
    return sv;
}

PsdCheck psd_check(const ComplexMatrix& m, double tol_psd) {
    const HermitianEigen e = eig_hermitian(m);
    if (e.eigenvalues.empty()) return {true, 0.0};
    const double lo = e.eigenvalues.front();
    const double norm = std::max(std::abs(lo), std::abs(e.eigenvalues.back()));
    return {lo >= -tol_psd * (1.0 + norm), lo};
}

std::size_t numerical_rank(const ComplexMatrix& m, double tol_rank) {
    const std::vector<double> sv = singular_values(m);
    if (sv.empty() || sv.front() == 0.0) return 0;
    const double cut = tol_rank * sv.front();
    return static_cast<std::size_t>(std::count_if(sv.begin(), sv.end(), [&](double s) { return s > cut; }));
}

ComplexMatrix inverse(const ComplexMatrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::NonSquare, "inverse of a rectangular matrix");
    const std::size_t n = m.rows();
    ComplexMatrix a = m;
    ComplexMatrix inv = ComplexMatrix::identity(n);
    const double scale = max_abs(m);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        }
        if (std::abs(a(piv, col)) <= 1e-14 * scale || scale == 0.0) {
            throw Error(ErrorCode::SingularElement, "matrix is singular");
        }
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        }
        const Complex d = 1.0 / a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) *= d;
            inv(col, j) *= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const Complex f = a(r, col);
            if (f == Complex{}) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

ComplexMatrix orthonormalize_columns(const ComplexMatrix& m) {
    ComplexMatrix q = m;
    const std::size_t n = m.rows();
    const double scale = std::max(max_abs(m), 1e-300);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t i = 0; i < j; ++i) {
                Complex dot{};
                for (std::size_t r = 0; r < n; ++r) dot += std::conj(q(r, i)) * q(r, j);
                for (std::size_t r = 0; r < n; ++r) q(r, j) -= dot * q(r, i);
            }
        }
        double nrm = 0.0;
        for (std::size_t r = 0; r < n; ++r) nrm += std::norm(q(r, j));
        nrm = std::sqrt(nrm);
        if (nrm <= 1e-10 * scale) throw Error(ErrorCode::DomainError, "columns are linearly dependent");
        for (std::size_t r = 0; r < n; ++r) q(r, j) /= nrm;
    }
    return q;
}

ComplexMatrix orthonormal_complement(const ComplexMatrix& q) {
    const std::size_t n = q.rows();
    const std::size_t have = q.cols();
    if (have > n) throw Error(ErrorCode::DimensionError, "more orthonormal columns than rows");
    const std::size_t need = n - have;

    std::vector<std::vector<Complex>> basis;
    basis.reserve(n);
    for (std::size_t j = 0; j < have; ++j) {
        std::vector<Complex> col(n);
        for (std::size_t r = 0; r < n; ++r) col[r] = q(r, j);
        basis.push_back(std::move(col));
    }

    auto residual_of = [&](std::size_t e) {
        std::vector<Complex> x(n);
        x[e] = 1.0;
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& b : basis) {
                Complex dot{};
                for (std::size_t r = 0; r < n; ++r) dot += std::conj(b[r]) * x[r];
                for (std::size_t r = 0; r < n; ++r) x[r] -= dot * b[r];
            }
        }
        return x;
    };

    ComplexMatrix out(n, need);
    for (std::size_t k = 0; k < need; ++k) {
        // Pivot on the standard basis vector with the largest residual.
        std::vector<Complex> best;
        double best_norm = -1.0;
        for (std::size_t e = 0; e < n; ++e) {
            std::vector<Complex> x = residual_of(e);
            double nrm = 0.0;
            for (const Complex& z : x) nrm += std::norm(z);
            if (nrm > best_norm) {
                best_norm = nrm;
                best = std::move(x);
            }
        }
        const double nrm = std::sqrt(best_norm);
        for (Complex& z : best) z /= nrm;
        for (std::size_t r = 0; r < n; ++r) out(r, k) = best[r];
        basis.push_back(std::move(best));
    }
    return out;
}

}  // namespace modframe
