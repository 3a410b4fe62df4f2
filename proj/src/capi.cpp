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

#include "modframe/modframe.h"

#include <cstring>
#include <optional>
#include <string>

#include <json.hpp>

#include "modframe/approximation.hpp"
#include "modframe/document.hpp"
#include "modframe/duality.hpp"
#include "modframe/error.hpp"
#include "modframe/extension.hpp"
#include "modframe/nonunital.hpp"
#include "modframe/selftest.hpp"

struct mf_frame {
    modframe::AlgebraShape shape;
    std::size_t rank;
    std::optional<modframe::FrameSystem> system;  // empty family when absent

    const modframe::FrameSystem& require() const {
        if (!system) throw modframe::Error(modframe::ErrorCode::EmptySystem, "the family is empty");
        return *system;
    }
};

struct mf_operator {
    modframe::ModuleOperator op;
};

using namespace modframe;

namespace {

thread_local std::string g_error;
thread_local std::string g_kind;

struct ArgumentError {
    const char* what;
};

mf_status status_of(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return MF_ERR_PARSE;
        case ErrorCode::ShapeMismatch:
        case ErrorCode::DimensionError: return MF_ERR_SHAPE;
        default: return MF_ERR_PRECONDITION;
    }
}

template <class Fn>
mf_status guard(Fn&& fn) {
    g_error.clear();
    g_kind.clear();
    try {
        fn();
        return MF_OK;
    } catch (const ArgumentError& e) {
        g_error = e.what;
        g_kind = "Argument";
        return MF_ERR_ARGUMENT;
    } catch (const Error& e) {
        g_error = e.what();
        g_kind = std::string(to_string(e.code()));
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_error = e.what();
        g_kind = "Internal";
        return MF_ERR_INTERNAL;
    } catch (...) {
        g_error = "unknown failure";
        g_kind = "Internal";
        return MF_ERR_INTERNAL;
    }
}

template <class T>
T& need(T* p, const char* what) {
    if (p == nullptr) throw ArgumentError{what};
    return *p;
}

template <class T>
const T& need(const T* p, const char* what) {
    if (p == nullptr) throw ArgumentError{what};
    return *p;
}

const char* text_of(const char* json) {
    if (json == nullptr) throw ArgumentError{"json is null"};
    return json;
}

double tol_or(double tol, double fallback) { return tol > 0.0 ? tol : fallback; }

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

mf_frame* wrap(FrameSystem f) {
    auto* out = new mf_frame{f.shape(), f.rank(), std::nullopt};
    out->system.emplace(std::move(f));
    return out;
}

mf_report report_of(const FrameReport& r) {
    return mf_report{r.is_frame, r.is_parseval, r.is_tight, r.tight_constant.has_value(),
                     r.lower,    r.upper,       r.tight_constant.value_or(0.0)};
}

nlohmann::json verdict_json(const nonunital::OuterFrameVerdict& v) {
    return {{"kind", std::string(nonunital::to_string(v.kind))},
            {"A", v.lower},
            {"B", v.upper},
            {"strict_check", v.strict_check},
            {"is_parseval", v.is_parseval}};
}

}  // namespace

extern "C" {

const char* mf_version(void) { return "1.0.0"; }
const char* mf_last_error(void) { return g_error.c_str(); }
const char* mf_last_error_kind(void) { return g_kind.c_str(); }
void mf_string_free(char* s) { delete[] s; }

mf_status mf_frame_from_json(const char* json, mf_frame** out) {
    return guard([&] {
        need(out, "out is null");
        FrameDocument doc = parse_frame_document(text_of(json));
        auto* f = new mf_frame{doc.shape, doc.rank, std::nullopt};
        if (!doc.vectors.empty()) {
            try {
                f->system.emplace(std::move(doc.vectors));
            } catch (...) {
                delete f;
                throw;
            }
        }
        *out = f;
    });
}

mf_status mf_frame_to_json(const mf_frame* f, char** out) {
    return guard([&] {
        const mf_frame& fr = need(f, "frame is null");
        need(out, "out is null");
        const std::vector<ModuleVector> none;
        *out = dup_string(frame_document_json(fr.shape, fr.rank, fr.system ? fr.system->vectors() : none));
    });
}

size_t mf_frame_size(const mf_frame* f) { return f && f->system ? f->system->size() : 0; }
void mf_frame_free(mf_frame* f) { delete f; }

mf_status mf_operator_from_json(const char* json, mf_operator** out) {
    return guard([&] {
        need(out, "out is null");
        *out = new mf_operator{parse_operator_document(text_of(json))};
    });
}

void mf_operator_free(mf_operator* t) { delete t; }

mf_status mf_analyze(const mf_frame* f, double tol, mf_report* out) {
    return guard([&] { need(out, "out is null") = report_of(analyze(need(f, "frame is null").require(), tol_or(tol, kFrameTol))); });
}

mf_status mf_canonical_dual(const mf_frame* f, double tol, mf_frame** out) {
    return guard([&] {
        need(out, "out is null");
        *out = wrap(canonical_dual(need(f, "frame is null").require(), tol_or(tol, kFrameTol)));
    });
}

mf_status mf_dual_from_parameter(const mf_frame* f, const mf_operator* l, mf_frame** out) {
    return guard([&] {
        need(out, "out is null");
        *out = wrap(dual_from_parameter(need(f, "frame is null").require(), need(l, "parameter is null").op));
    });
}

mf_status mf_is_dual(const mf_frame* f, const mf_frame* g, int* ok, double* residual) {
    return guard([&] {
        const DualCheck c = is_dual(need(f, "frame is null").require(), need(g, "frame is null").require());
        need(ok, "ok is null") = c.ok;
        need(residual, "residual is null") = c.residual;
    });
}

mf_status mf_parseval_dual(const mf_frame* f, mf_frame** out) {
    return guard([&] {
        need(out, "out is null");
        *out = wrap(parseval_dual(need(f, "frame is null").require()));
    });
}

mf_status mf_unique_dual(const mf_frame* f, int* unique, int* has_residual, double* residual) {
    return guard([&] {
        const UniqueDualReport r = unique_dual_report(need(f, "frame is null").require());
        need(unique, "unique is null") = r.unique;
        need(has_residual, "has_residual is null") = r.orthogonality_residual.has_value();
        need(residual, "residual is null") = r.orthogonality_residual.value_or(0.0);
    });
}

static mf_status approximate(const mf_frame* f, double tol, mf_approximation* out, mf_frame** approx,
                             ApproximationResult (*fn)(const FrameSystem&, double)) {
    return guard([&] {
        need(out, "out is null");
        ApproximationResult r = fn(need(f, "frame is null").require(), tol_or(tol, kFrameTol));
        *out = mf_approximation{r.distance, r.closed_form, r.tight_constant};
        if (approx != nullptr) *approx = wrap(std::move(r.approx));
    });
}

mf_status mf_best_parseval(const mf_frame* f, double tol, mf_approximation* out, mf_frame** approx) {
    return approximate(f, tol, out, approx, best_parseval);
}

mf_status mf_best_tight(const mf_frame* f, double tol, mf_approximation* out, mf_frame** approx) {
    return approximate(f, tol, out, approx, best_tight);
}

mf_status mf_perturb_check(const mf_frame* f, const mf_frame* candidate, mf_perturbation* out) {
    return guard([&] {
        const PerturbationVerdict v =
            perturb_check(need(f, "frame is null").require(), need(candidate, "candidate is null").require());
        need(out, "out is null") = mf_perturbation{v.distance,          v.radius, v.within,
                                                   v.guaranteed_lower.has_value(), v.guaranteed_lower.value_or(0.0),
                                                   v.per_element_bound};
    });
}

mf_status mf_extend(const mf_frame* f, mf_target target, double tol, mf_extension* out, mf_frame** combined) {
    return guard([&] {
        const mf_frame& fr = need(f, "frame is null");
        need(out, "out is null");
        const std::vector<ModuleVector> none;
        const std::vector<ModuleVector>& vs = fr.system ? fr.system->vectors() : none;
        ExtensionResult r = [&] {
            switch (target) {
                case MF_TARGET_FRAME: return extend_to_frame(fr.shape, fr.rank, vs);
                case MF_TARGET_PARSEVAL: return extend_to_parseval(fr.shape, fr.rank, vs, tol_or(tol, kFrameTol));
            }
            throw ArgumentError{"unknown extension target"};
        }();
        *out = mf_extension{r.added.size(), r.certificate.input_upper_bound, r.certificate.residual,
                            report_of(r.certificate.combined)};
        if (combined != nullptr) *combined = wrap(std::move(r.combined));
    });
}

mf_status mf_nonunital(const char* json, mf_nonunital_action action, double tol, char** out_json) {
    return guard([&] {
        need(out_json, "out_json is null");
        const auto elements = parse_nonunital_document(text_of(json));
        const double t = tol_or(tol, 1e-12);
        nlohmann::json out;
        switch (action) {
            case MF_NONUNITAL_CLASSIFY:
                out = verdict_json(nonunital::classify_finite_system(elements, t));
                break;
            case MF_NONUNITAL_COMPLETE: {
                const auto done = nonunital::outer_parseval_complete(elements, t);
                out = nlohmann::json::parse(nonunital_document_json(done));
                out["added"] = done.size() - elements.size();
                out["verdict"] = verdict_json(nonunital::classify_finite_system(done, t));
                break;
            }
            default: throw ArgumentError{"unknown non-unital action"};
        }
        *out_json = dup_string(out.dump());
    });
}

mf_status mf_selftest(uint64_t seed, char** out_json, int* all_passed) {
    return guard([&] {
        need(out_json, "out_json is null");
        need(all_passed, "all_passed is null");
        nlohmann::json checks = nlohmann::json::array();
        bool ok = true;
        for (const auto& c : run_selftest(seed)) {
            checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
            ok = ok && c.passed;
        }
        *all_passed = ok;
        *out_json = dup_string(nlohmann::json{{"seed", seed}, {"checks", checks}, {"all_passed", ok}}.dump());
    });
}

}  // extern "C"
