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

#include "modframe/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "modframe/approximation.hpp"
#include "modframe/duality.hpp"
#include "modframe/extension.hpp"
#include "modframe/nonunital.hpp"
#include "modframe/sampling.hpp"

namespace modframe {

namespace {

using sampling::Rng;

std::string worst(double value, double limit) {
    std::ostringstream os;
    os << "max deviation " << value << " (limit " << limit << ")";
    return os.str();
}

SelfTestCheck check_reconstruction(Rng& rng) {
    double err = 0.0;
    for (int t = 0; t < 20; ++t) {
        const auto& shape = sampling::standard_shapes()[t % 4];
        const std::size_t m = 1 + t % 3;
        const FrameSystem f = sampling::random_frame(shape, m, m + 1 + t % 2, rng);
        const FrameSystem d = canonical_dual(f);
        for (std::size_t q = 0; q < m; ++q) {
            const ModuleVector x = ModuleVector::basis(shape, m, q);
            ModuleVector rec = ModuleVector::zero(shape, m);
            for (std::size_t n = 0; n < f.size(); ++n) {
                rec = add(rec, right_multiply(d.vector(n), inner_product(f.vector(n), x)));
            }
            err = std::max(err, module_norm(sub(rec, x)));
        }
    }
    return {"canonical reconstruction", err <= 1e-9, worst(err, 1e-9)};
}

SelfTestCheck check_bounds(Rng& rng) {
    double err = 0.0;
    for (int t = 0; t < 20; ++t) {
        const FrameSystem f = sampling::random_frame(sampling::standard_shapes()[t % 4], 2, 3, rng);
        const FrameReport r = analyze(f);
        const auto [a, b] = bounds_from_norms(f);
        err = std::max({err, std::abs(a - r.lower), std::abs(b - r.upper)});
    }
    return {"bounds by spectrum and by norms", err <= 1e-9, worst(err, 1e-9)};
}

SelfTestCheck check_duals(Rng& rng) {
    double err = 0.0;
    for (int t = 0; t < 10; ++t) {
        const auto& shape = sampling::standard_shapes()[t % 4];
        const FrameSystem f = sampling::random_frame(shape, 2, 4, rng);
        for (int i = 0; i < 3; ++i) {
            const FrameSystem g = dual_from_parameter(f, sampling::random_operator(shape, 4, 2, rng));
            err = std::max(err, is_dual(f, g).residual);
            err = std::max(err, max_entry_distance(dual_from_parameter(f, g.analysis()).analysis(), g.analysis()));
        }
    }
    return {"dual parametrization", err <= 1e-9, worst(err, 1e-9)};
}

SelfTestCheck check_extension(Rng& rng) {
    double err = 0.0;
    for (int t = 0; t < 10; ++t) {
        const auto& shape = sampling::standard_shapes()[t % 4];
        const std::size_t m = 1 + t % 3;
        std::vector<ModuleVector> vs;
        for (int n = 0; n < 2; ++n) vs.push_back(sampling::random_vector(shape, m, rng));
        const FrameSystem f(vs);
        const FrameSystem g = FrameSystem::from_analysis(scale(f.analysis(), 0.9 / std::sqrt(analyze(f).upper)));
        const ExtensionResult r = extend_to_parseval(g);
        err = std::max(err, r.certificate.residual);
    }
    return {"Parseval extension", err <= 1e-8, worst(err, 1e-8)};
}

SelfTestCheck check_nonunital(Rng& rng) {
    int mismatches = 0;
    for (int t = 0; t < 200; ++t) {
        const auto verdict = nonunital::classify_finite_system(sampling::random_tail_system(rng));
        const bool frame_like =
            verdict.kind == nonunital::FrameKind::Frame || verdict.kind == nonunital::FrameKind::OuterFrame;
        mismatches += frame_like != verdict.strict_check;
    }
    return {"frame and strict verdicts agree", mismatches == 0, std::to_string(mismatches) + " mismatches"};
}

SelfTestCheck check_eigensolver(Rng& rng) {
    double err = 0.0;
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 1 + t % 12;
        const ComplexMatrix m = sampling::random_hermitian(n, rng);
        const HermitianEigen e = eig_hermitian(m);
        const ComplexMatrix& v = e.eigenvectors;
        err = std::max(err, max_abs(v * ComplexMatrix::diagonal(e.eigenvalues) * v.adjoint() - m));
        err = std::max(err, max_abs(v.adjoint() * v - ComplexMatrix::identity(n)));
    }
    return {"eigensolver reconstruction", err <= 1e-10, worst(err, 1e-10)};
}

}  // namespace

std::vector<SelfTestCheck> run_selftest(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<SelfTestCheck> out;
    for (auto* fn : {check_reconstruction, check_bounds, check_duals, check_extension, check_nonunital,
                     check_eigensolver}) {
        try {
            out.push_back(fn(rng));
        } catch (const std::exception& e) {
            out.push_back({"check raised", false, e.what()});
        }
    }
    return out;
}

}  // namespace modframe
