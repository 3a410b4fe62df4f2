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

#include "modframe/nonunital.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "modframe/error.hpp"

namespace modframe::nonunital {

TailSequence::TailSequence(std::vector<Complex> prefix, Complex tail) : prefix_(std::move(prefix)), tail_(tail) {
    auto finite = [](Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
    if (!finite(tail_) || !std::all_of(prefix_.begin(), prefix_.end(), finite)) {
        throw Error(ErrorCode::DomainError, "sequence values must be finite");
    }
    canonicalize();
}

void TailSequence::canonicalize() {
    while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
}

TailSequence TailSequence::delta(std::size_t k) {
    std::vector<Complex> p(k + 1, 0.0);
    p[k] = 1.0;
    return TailSequence(std::move(p), 0.0);
}

TailSequence TailSequence::tail_indicator(std::size_t from) { return TailSequence(std::vector<Complex>(from, 0.0), 1.0); }

double TailSequence::norm() const noexcept {
    double m = std::abs(tail_);
    for (Complex z : prefix_) m = std::max(m, std::abs(z));
    return m;
}

double TailSequence::inf_real() const noexcept {
    double m = tail_.real();
    for (Complex z : prefix_) m = std::min(m, z.real());
    return m;
}

double TailSequence::sup_real() const noexcept {
    double m = tail_.real();
    for (Complex z : prefix_) m = std::max(m, z.real());
    return m;
}

namespace {

template <class Op>
TailSequence zip(const TailSequence& u, const TailSequence& v, Op op) {
    const std::size_t p = std::max(u.prefix().size(), v.prefix().size());
    std::vector<Complex> out(p);
    for (std::size_t k = 0; k < p; ++k) out[k] = op(u.at(k), v.at(k));
    return TailSequence(std::move(out), op(u.tail(), v.tail()));
}

std::size_t max_prefix(const std::vector<TailSequence>& vs) {
    std::size_t p = 0;
    for (const auto& v : vs) p = std::max(p, v.prefix().size());
    return p;
}

// Lower bound over the test family {delta_k : k < p} + {tail indicator at p} + {e}:
// the largest c with sum <x, v_n><v_n, x> >= c <x, x>, read off where <x, x> != 0.
double strict_lower_bound(const std::vector<TailSequence>& vs) {
    const std::size_t p = max_prefix(vs);
    std::vector<TailSequence> tests;
    for (std::size_t k = 0; k < p; ++k) tests.push_back(TailSequence::delta(k));
    tests.push_back(TailSequence::tail_indicator(p));
    tests.push_back(TailSequence::unit());

    double best = INFINITY;
    for (const auto& x : tests) {
        TailSequence lhs;
        for (const auto& v : vs) {
            const TailSequence c = seq_mul(seq_star(v), x);  // <v_n, x>
            lhs = seq_add(lhs, seq_mul(seq_star(c), c));
        }
        const TailSequence xx = seq_mul(seq_star(x), x);
        for (std::size_t k = 0; k <= std::max(p, xx.prefix().size()); ++k) {
            if (xx.at(k).real() > 0.0) best = std::min(best, lhs.at(k).real() / xx.at(k).real());
        }
    }
    return best;
}

double dual_residual(const std::vector<TailSequence>& vs, const std::vector<TailSequence>& ws) {
    TailSequence acc;
    for (std::size_t n = 0; n < vs.size(); ++n) acc = seq_add(acc, seq_mul(vs[n], seq_star(ws[n])));
    return seq_sub(acc, TailSequence::unit()).norm();
}

}  // namespace

TailSequence seq_add(const TailSequence& u, const TailSequence& v) {
    return zip(u, v, [](Complex a, Complex b) { return a + b; });
}
TailSequence seq_sub(const TailSequence& u, const TailSequence& v) {
    return zip(u, v, [](Complex a, Complex b) { return a - b; });
}
TailSequence seq_mul(const TailSequence& u, const TailSequence& v) {
    return zip(u, v, [](Complex a, Complex b) { return a * b; });
}
TailSequence seq_star(const TailSequence& u) {
    return seq_map(u, [](Complex z) { return std::conj(z); });
}
TailSequence seq_scale(const TailSequence& u, Complex c) {
    return seq_map(u, [c](Complex z) { return c * z; });
}

std::string_view to_string(FrameKind kind) noexcept {
    switch (kind) {
        case FrameKind::Frame: return "frame";
        case FrameKind::OuterFrame: return "outer_frame";
        case FrameKind::OuterBesselOnly: return "outer_bessel_only";
        case FrameKind::NotBesselIrrelevant: return "not_bessel_irrelevant";
        case FrameKind::NotFrame: return "not_frame";
    }
    return "unknown";
}

TailSequence frame_sum(const std::vector<TailSequence>& vs) {
    TailSequence s;
    for (const auto& v : vs) s = seq_add(s, seq_map(v, [](Complex z) { return Complex(std::norm(z)); }));
    return s;
}

OuterFrameVerdict classify_finite_system(const std::vector<TailSequence>& vs, double tol) {
    if (vs.empty()) throw Error(ErrorCode::EmptySystem, "no elements");
    // Frame route: for x in the ideal the inequality is pointwise, and x may sit
    // arbitrarily far out in the constant region, so the tail value counts too.
    const TailSequence s = frame_sum(vs);
    OuterFrameVerdict out;
    out.lower = s.inf_real();
    out.upper = s.sup_real();
    const bool outer = std::any_of(vs.begin(), vs.end(), [](const TailSequence& v) { return !v.in_ideal(); });
    if (out.lower > 0.0) {
        out.kind = outer ? FrameKind::OuterFrame : FrameKind::Frame;
    } else {
        out.kind = outer ? FrameKind::OuterBesselOnly : FrameKind::NotFrame;
    }
    out.strict_lower = strict_lower_bound(vs);
    out.strict_check = out.strict_lower > 0.0;
    out.is_parseval = out.lower > 0.0 && std::abs(out.lower - 1.0) <= tol && std::abs(out.upper - 1.0) <= tol;
    return out;
}

std::vector<TailSequence> outer_parseval_complete(const std::vector<TailSequence>& vs, double tol) {
    const TailSequence s = frame_sum(vs);
    const double upper = s.sup_real();
    if (upper > 1.0 + tol) {
        throw Error(ErrorCode::BesselBoundExceedsOne, "Bessel bound " + std::to_string(upper) + " exceeds one");
    }
    const TailSequence w = seq_map(s, [](Complex z) { return Complex(std::sqrt(std::max(0.0, 1.0 - z.real()))); });
    std::vector<TailSequence> out = vs;
    if (w.norm() > 1e-10) out.push_back(w);
    return out;
}

ModelDualReport model_dual_report(const std::vector<TailSequence>& vs) {
    const OuterFrameVerdict verdict = classify_finite_system(vs);
    if (!(verdict.lower > 0.0)) throw Error(ErrorCode::NotAFrame, "lower bound is zero");
    const TailSequence s = frame_sum(vs);
    const TailSequence s_inv = seq_map(s, [](Complex z) { return Complex(1.0 / z.real()); });

    ModelDualReport rep;
    rep.corank = vs.size() - 1;
    rep.unique = rep.corank == 0;
    for (const auto& v : vs) rep.canonical.push_back(seq_mul(v, s_inv));
    rep.canonical_residual = dual_residual(vs, rep.canonical);
    if (rep.unique) return rep;

    // Parameter L = e_j: w_n = v_n / s + delta_nj - v_n conj(v_j) / s. Keep the j
    // giving the largest departure from the canonical dual.
    for (std::size_t j = 0; j < vs.size(); ++j) {
        std::vector<TailSequence> alt;
        double sep = 0.0;
        const TailSequence vj_over_s = seq_mul(seq_star(vs[j]), s_inv);
        for (std::size_t n = 0; n < vs.size(); ++n) {
            TailSequence w = seq_sub(rep.canonical[n], seq_mul(vs[n], vj_over_s));
            if (n == j) w = seq_add(w, TailSequence::unit());
            sep = std::max(sep, seq_sub(w, rep.canonical[n]).norm());
            alt.push_back(std::move(w));
        }
        if (!rep.alternative || sep > rep.separation) {
            rep.separation = sep;
            rep.alternative_residual = dual_residual(vs, alt);
            rep.alternative = std::move(alt);
        }
    }
    return rep;
}

ModelDualReport unique_dual_witness() { return model_dual_report({TailSequence::unit()}); }

}  // namespace modframe::nonunital
