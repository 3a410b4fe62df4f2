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
#include <optional>
#include <string_view>
#include <vector>

namespace modframe::nonunital {

using Complex = std::complex<double>;

/// Eventually constant sequence: value prefix[k] at k < prefix.size(), tail afterwards.
/// Models the multiplier algebra of the eventually-zero sequences; tail == 0 means
/// the element lies in the ideal itself.
class TailSequence {
public:
    TailSequence() = default;
    TailSequence(std::vector<Complex> prefix, Complex tail);

    static TailSequence unit() { return TailSequence({}, 1.0); }
    static TailSequence delta(std::size_t k);
    /// 0 on positions < from, 1 afterwards.
    static TailSequence tail_indicator(std::size_t from);

    const std::vector<Complex>& prefix() const noexcept { return prefix_; }
    Complex tail() const noexcept { return tail_; }
    Complex at(std::size_t k) const noexcept { return k < prefix_.size() ? prefix_[k] : tail_; }
    bool in_ideal() const noexcept { return tail_ == Complex(0.0); }
    bool is_zero() const noexcept { return prefix_.empty() && in_ideal(); }

    /// Sup norm.
    double norm() const noexcept;
    /// Infimum of the real parts over all positions.
    double inf_real() const noexcept;
    /// Supremum of the real parts over all positions.
    double sup_real() const noexcept;

    bool operator==(const TailSequence&) const = default;

private:
    void canonicalize();

    std::vector<Complex> prefix_;
    Complex tail_{0.0};
};

TailSequence seq_add(const TailSequence& u, const TailSequence& v);
TailSequence seq_sub(const TailSequence& u, const TailSequence& v);
TailSequence seq_mul(const TailSequence& u, const TailSequence& v);
TailSequence seq_star(const TailSequence& u);
TailSequence seq_scale(const TailSequence& u, Complex c);
/// Pointwise f applied to each value (prefix and tail).
template <class F>
TailSequence seq_map(const TailSequence& u, F f) {
    std::vector<Complex> p;
    p.reserve(u.prefix().size());
    for (Complex z : u.prefix()) p.push_back(f(z));
    return TailSequence(std::move(p), f(u.tail()));
}

enum class FrameKind { Frame, OuterFrame, OuterBesselOnly, NotBesselIrrelevant, NotFrame };

std::string_view to_string(FrameKind kind) noexcept;

struct OuterFrameVerdict {
    FrameKind kind = FrameKind::NotFrame;
    double lower = 0.0;
    double upper = 0.0;
    bool strict_check = false;  // lower bound positive over the multiplier test family
    double strict_lower = 0.0;
    bool is_parseval = false;   // lower == upper == 1 within tol
};

/// Pointwise frame sum s(k) = sum_n |v_n(k)|^2.
TailSequence frame_sum(const std::vector<TailSequence>& vs);

/// Throws EmptySystem on an empty list.
OuterFrameVerdict classify_finite_system(const std::vector<TailSequence>& vs, double tol = 1e-12);

/// Returns vs followed by w = sqrt(1 - s) (omitted when ||w|| <= 1e-10), so that the
/// result is Parseval. An empty list yields {e}. Throws BesselBoundExceedsOne.
std::vector<TailSequence> outer_parseval_complete(const std::vector<TailSequence>& vs, double tol = 1e-12);

struct ModelDualReport {
    std::size_t corank = 0;  // N - 1: the pointwise analysis map has rank one
    bool unique = false;
    std::vector<TailSequence> canonical;               // v_n / s
    double canonical_residual = 0.0;                   // sup |sum v_n conj(w_n) - 1|
    std::optional<std::vector<TailSequence>> alternative;  // parameter L = e_j
    double alternative_residual = 0.0;
    double separation = 0.0;  // max_n ||alt_n - canonical_n||
};

/// Duals of a finite frame or outer frame. Throws NotAFrame when the lower bound is 0.
ModelDualReport model_dual_report(const std::vector<TailSequence>& vs);

/// model_dual_report({e}).
ModelDualReport unique_dual_witness();

}  // namespace modframe::nonunital
