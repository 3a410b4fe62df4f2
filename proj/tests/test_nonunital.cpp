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

#include <algorithm>
#include <cmath>

#include "modframe/nonunital.hpp"
#include "modframe/sampling.hpp"
#include "oracles.hpp"

using namespace modframe;
using namespace modframe::nonunital;

namespace {

const TailSequence kE = TailSequence::unit();

}  // namespace

TEST_CASE("canonical form trims trailing tail values") {
    const TailSequence u({1.0, 2.0, 2.0}, 2.0);
    CHECK(u.prefix() == std::vector<Complex>{1.0});
    CHECK(TailSequence({0.0, 0.0}, 0.0).is_zero());
    CHECK(TailSequence({3.0}, 0.0).in_ideal());
    CHECK_FALSE(kE.in_ideal());
    CHECK(oracle::error_code_of([] { TailSequence({NAN}, 0.0); }) == ErrorCode::DomainError);
}

TEST_CASE("pointwise operation examples") {
    const TailSequence v({Complex(0.0, 1.0), 3.0}, 0.5);
    CHECK(seq_mul(kE, v) == v);
    const TailSequence a({1.0, 2.0}, 0.0);
    const TailSequence b({0.0, 5.0, 7.0}, 0.0);
    CHECK(seq_mul(a, b).in_ideal());
    CHECK(seq_mul(TailSequence({2.0}, 1.0), TailSequence({0.0, 3.0}, 1.0)) == TailSequence({0.0, 3.0}, 1.0));
    CHECK(seq_star(v) == TailSequence({Complex(0.0, -1.0), 3.0}, 0.5));
    CHECK(seq_add(v, seq_scale(v, -1.0)).is_zero());
    CHECK(seq_mul(v, v).tail() == v.tail() * v.tail());
}

TEST_CASE("classify examples") {
    OuterFrameVerdict r = classify_finite_system({kE});
    CHECK(r.kind == FrameKind::OuterFrame);
    CHECK(r.lower == 1.0);
    CHECK(r.upper == 1.0);
    CHECK(r.is_parseval);
    CHECK(r.strict_check);

    r = classify_finite_system({TailSequence({1.0, 2.0}, 0.0), TailSequence({0.0, 0.0, 1.0}, 0.0)});
    CHECK(r.kind == FrameKind::NotFrame);
    CHECK(r.lower == 0.0);
    CHECK_FALSE(r.strict_check);

    r = classify_finite_system({TailSequence({0.5}, 1.0)});
    CHECK(r.kind == FrameKind::OuterFrame);
    CHECK(r.lower == 0.25);
    CHECK(r.upper == 1.0);
    CHECK_FALSE(r.is_parseval);

    r = classify_finite_system({TailSequence({0.0}, 1.0)});
    CHECK(r.kind == FrameKind::OuterBesselOnly);
    CHECK_FALSE(r.strict_check);

    CHECK(oracle::error_code_of([] { classify_finite_system({}); }) == ErrorCode::EmptySystem);
    CHECK(to_string(FrameKind::OuterFrame) == "outer_frame");
}

TEST_CASE("outer_parseval_complete examples") {
    auto out = outer_parseval_complete({TailSequence()});
    REQUIRE(out.size() == 2);
    CHECK(out[1] == kE);

    out = outer_parseval_complete({TailSequence({1.0}, 0.0)});
    REQUIRE(out.size() == 2);
    CHECK(out[1] == TailSequence({0.0}, 1.0));
    CHECK_FALSE(out[1].in_ideal());
    CHECK(classify_finite_system(out).is_parseval);

    out = outer_parseval_complete({kE});
    CHECK(out.size() == 1);

    out = outer_parseval_complete({});
    REQUIRE(out.size() == 1);
    CHECK(out[0] == kE);

    CHECK(oracle::error_code_of([] { outer_parseval_complete({TailSequence({2.0}, 0.0)}); }) ==
          ErrorCode::BesselBoundExceedsOne);
}

TEST_CASE("dual witness examples") {
    const ModelDualReport e = unique_dual_witness();
    CHECK(e.unique);
    CHECK(e.corank == 0);
    REQUIRE(e.canonical.size() == 1);
    CHECK(e.canonical[0] == kE);
    CHECK(e.canonical_residual == 0.0);
    CHECK_FALSE(e.alternative.has_value());

    const ModelDualReport two = model_dual_report({kE, TailSequence()});
    CHECK_FALSE(two.unique);
    CHECK(two.corank == 1);
    REQUIRE(two.alternative.has_value());
    CHECK(two.separation > 0.5);
    CHECK(two.canonical_residual == 0.0);
    CHECK(two.alternative_residual == 0.0);
    CHECK(*two.alternative != two.canonical);

    const ModelDualReport half = model_dual_report({TailSequence({0.5}, 1.0)});
    CHECK(half.unique);
    CHECK(half.canonical[0] == TailSequence({2.0}, 1.0));

    CHECK(oracle::error_code_of([] { model_dual_report({TailSequence({1.0}, 0.0)}); }) == ErrorCode::NotAFrame);
}

TEST_CASE("property: the ideal absorbs multipliers") {
    sampling::Rng rng(90);
    for (int t = 0; t < 200; ++t) {
        const auto sys = sampling::random_tail_system(rng, 0.5);
        const TailSequence ideal(sys.front().prefix(), 0.0);
        for (const auto& m : sys) {
            CHECK(seq_mul(ideal, m).in_ideal());
            CHECK(seq_mul(m, ideal).in_ideal());
        }
    }
}

TEST_CASE("property: frame verdict equals the strict verdict") {
    sampling::Rng rng(91);
    int frames = 0;
    for (int t = 0; t < 1000; ++t) {
        const auto sys = sampling::random_tail_system(rng);
        const OuterFrameVerdict r = classify_finite_system(sys);
        const bool frame_like = r.kind == FrameKind::Frame || r.kind == FrameKind::OuterFrame;
        CHECK(frame_like == r.strict_check);
        CHECK(r.strict_check == (r.lower > 0.0));
        if (r.strict_check) CHECK(r.strict_lower == doctest::Approx(r.lower));
        frames += frame_like;
        if (r.kind == FrameKind::OuterFrame) {
            CHECK(std::any_of(sys.begin(), sys.end(), [](const TailSequence& v) { return !v.in_ideal(); }));
        }
    }
    CHECK(frames > 100);
    CHECK(frames < 900);
}

TEST_CASE("property: systems inside the ideal are never frames") {
    sampling::Rng rng(92);
    for (int t = 0; t < 300; ++t) {
        const auto sys = sampling::random_tail_system(rng, 1.0);
        const OuterFrameVerdict r = classify_finite_system(sys);
        CHECK(r.kind == FrameKind::NotFrame);
        CHECK(r.lower == 0.0);
    }
}

TEST_CASE("property: completion yields Parseval systems") {
    sampling::Rng rng(93);
    for (int t = 0; t < 300; ++t) {
        auto sys = sampling::random_tail_system(rng);
        const double b = frame_sum(sys).sup_real();
        if (b > 1.0) {
            for (auto& v : sys) v = seq_scale(v, 1.0 / std::sqrt(b));
        }
        const auto done = outer_parseval_complete(sys);
        const OuterFrameVerdict r = classify_finite_system(done);
        CHECK(std::abs(r.lower - 1.0) <= 1e-12);
        CHECK(std::abs(r.upper - 1.0) <= 1e-12);
    }
}

TEST_CASE("property: model duals reconstruct") {
    sampling::Rng rng(94);
    int checked = 0;
    for (int t = 0; t < 300; ++t) {
        const auto sys = sampling::random_tail_system(rng, 0.0);
        if (!(classify_finite_system(sys).lower > 1e-3)) continue;
        const ModelDualReport r = model_dual_report(sys);
        CHECK(r.canonical_residual <= 1e-12);
        CHECK(r.unique == (sys.size() == 1));
        if (r.alternative) CHECK(r.alternative_residual <= 1e-10);
        ++checked;
    }
    CHECK(checked > 50);
}
