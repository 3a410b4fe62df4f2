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

// Command-line front end over the C interface. Reports go to stdout as JSON,
// diagnostics to stderr. Exit codes: 0 success, 1 internal error or failed
// self-test, 2 parse/read error, 3 dimension mismatch, 4 unmet precondition,
// 5 usage error.

#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "modframe/modframe.h"

using nlohmann::json;

namespace {

struct FrameDeleter {
    void operator()(mf_frame* f) const { mf_frame_free(f); }
};
struct OperatorDeleter {
    void operator()(mf_operator* t) const { mf_operator_free(t); }
};
using FramePtr = std::unique_ptr<mf_frame, FrameDeleter>;
using OperatorPtr = std::unique_ptr<mf_operator, OperatorDeleter>;

// Carries an exit code up to main once the diagnostic has been printed.
struct Exit {
    int code;
};

[[noreturn]] void fail(int code, const std::string& message) {
    std::cerr << "modframe: " << message << "\n";
    throw Exit{code};
}

void check(mf_status s) {
    if (s != MF_OK) fail(static_cast<int>(s), mf_last_error());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(MF_ERR_PARSE, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string take(char* s) {
    std::string out(s);
    mf_string_free(s);
    return out;
}

FramePtr load_frame(const std::string& path) {
    mf_frame* f = nullptr;
    check(mf_frame_from_json(read_file(path).c_str(), &f));
    return FramePtr(f);
}

json frame_json(const mf_frame* f) {
    char* s = nullptr;
    check(mf_frame_to_json(f, &s));
    return json::parse(take(s));
}

json report_json(const mf_report& r) {
    return {{"A", r.lower},
            {"B", r.upper},
            {"is_frame", r.is_frame != 0},
            {"is_parseval", r.is_parseval != 0},
            {"is_tight", r.is_tight != 0},
            {"tight_constant", r.has_tight_constant ? json(r.tight_constant) : json(nullptr)}};
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

// --tol wins over MODFRAME_TOL; 0 selects the library default.
double resolve_tol(const std::optional<double>& flag) {
    if (flag) {
        if (!(*flag > 0.0)) fail(MF_ERR_ARGUMENT, "--tol must be positive");
        return *flag;
    }
    if (const char* env = std::getenv("MODFRAME_TOL"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        errno = 0;
        const double v = std::strtod(env, &end);
        if (errno != 0 || end == env || *end != '\0' || !(v > 0.0)) fail(MF_ERR_ARGUMENT, "invalid MODFRAME_TOL");
        return v;
    }
    return 0.0;
}

void cmd_analyze(const std::string& path, double tol) {
    const FramePtr f = load_frame(path);
    mf_report r{};
    check(mf_analyze(f.get(), tol, &r));
    emit(report_json(r));
}

void cmd_dual(const std::string& path, const std::string& param, double tol) {
    const FramePtr f = load_frame(path);
    mf_frame* out = nullptr;
    if (param.empty()) {
        check(mf_canonical_dual(f.get(), tol, &out));
    } else {
        mf_operator* l = nullptr;
        check(mf_operator_from_json(read_file(param).c_str(), &l));
        const OperatorPtr lp(l);
        check(mf_dual_from_parameter(f.get(), lp.get(), &out));
    }
    const FramePtr d(out);
    emit(frame_json(d.get()));
}

void cmd_parseval_dual(const std::string& path) {
    const FramePtr f = load_frame(path);
    mf_frame* out = nullptr;
    const mf_status s = mf_parseval_dual(f.get(), &out);
    if (s == MF_ERR_PRECONDITION) {
        const std::string kind = mf_last_error_kind();
        const char* reason = kind == "LowerBoundBelowOne"   ? "lower_bound"
                             : kind == "InsufficientCorank" ? "corank"
                                                            : "not_a_frame";
        emit({{"reason", reason}});
    }
    check(s);
    const FramePtr d(out);
    emit(frame_json(d.get()));
}

void cmd_unique_dual(const std::string& path) {
    const FramePtr f = load_frame(path);
    int unique = 0;
    int has_residual = 0;
    double residual = 0.0;
    check(mf_unique_dual(f.get(), &unique, &has_residual, &residual));
    json out{{"unique", unique != 0}};
    if (has_residual) out["orthogonality_residual"] = residual;
    emit(out);
}

void cmd_approx(const std::string& path, const std::string& mode, double tol) {
    const FramePtr f = load_frame(path);
    mf_approximation a{};
    mf_frame* out = nullptr;
    check(mode == "parseval" ? mf_best_parseval(f.get(), tol, &a, &out) : mf_best_tight(f.get(), tol, &a, &out));
    const FramePtr approx(out);
    emit({{"mode", mode},
          {"distance", a.distance},
          {"closed_form", a.closed_form},
          {"tight_constant", a.tight_constant},
          {"approx", frame_json(approx.get())}});
}

void cmd_perturb(const std::string& path_a, const std::string& path_b, double tol) {
    const FramePtr f = load_frame(path_a);
    const FramePtr g = load_frame(path_b);
    mf_perturbation p{};
    check(mf_perturb_check(f.get(), g.get(), &p));
    mf_report r{};
    check(mf_analyze(g.get(), tol, &r));
    emit({{"distance", p.distance},
          {"radius", p.radius},
          {"within", p.within != 0},
          {"guaranteed_lower", p.has_guaranteed_lower ? json(p.guaranteed_lower) : json(nullptr)},
          {"per_element_bound", p.per_element_bound},
          {"candidate", report_json(r)}});
}

void cmd_extend(const std::string& path, const std::string& target, double tol) {
    const FramePtr f = load_frame(path);
    mf_extension e{};
    mf_frame* out = nullptr;
    check(mf_extend(f.get(), target == "frame" ? MF_TARGET_FRAME : MF_TARGET_PARSEVAL, tol, &e, &out));
    const FramePtr combined(out);
    emit({{"target", target},
          {"added", e.added},
          {"input_upper_bound", e.input_upper_bound},
          {"residual", e.residual},
          {"report", report_json(e.combined)},
          {"combined", frame_json(combined.get())}});
}

void cmd_nonunital(const std::string& path, const std::string& action, double tol) {
    char* out = nullptr;
    const std::string text = read_file(path);
    check(mf_nonunital(text.c_str(), action == "classify" ? MF_NONUNITAL_CLASSIFY : MF_NONUNITAL_COMPLETE, tol, &out));
    std::cout << take(out) << "\n";
}

void cmd_selftest(std::uint64_t seed) {
    char* out = nullptr;
    int passed = 0;
    check(mf_selftest(seed, &out, &passed));
    std::cout << take(out) << "\n";
    if (!passed) fail(MF_ERR_INTERNAL, "self-test failed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frames in Hilbert C*-modules over finite-dimensional algebras"};
    app.require_subcommand(1);
    std::optional<double> tol_flag;
    app.add_option("--tol", tol_flag, "frame tolerance (overrides MODFRAME_TOL)");

    std::string path;
    std::string path_b;
    std::string param;
    std::string mode;
    std::string target;
    std::string action;
    std::uint64_t seed = 0;

    auto* analyze = app.add_subcommand("analyze", "optimal frame bounds and classification");
    analyze->add_option("frame", path, "frame document")->required();
    auto* dual = app.add_subcommand("dual", "canonical dual, or the dual for a parameter L");
    dual->add_option("frame", path, "frame document")->required();
    dual->add_option("--param", param, "operator document for L (N x m)");
    auto* pdual = app.add_subcommand("parseval-dual", "a Parseval frame dual to the input");
    pdual->add_option("frame", path, "frame document")->required();
    auto* udual = app.add_subcommand("unique-dual", "whether the canonical dual is the only dual");
    udual->add_option("frame", path, "frame document")->required();
    auto* approx = app.add_subcommand("approx", "closest Parseval or tight frame");
    approx->add_option("frame", path, "frame document")->required();
    approx->add_option("--mode", mode, "parseval or tight")->required()->check(CLI::IsMember({"parseval", "tight"}));
    auto* perturb = app.add_subcommand("perturb", "perturbation guarantee for a candidate frame");
    perturb->add_option("frame", path, "reference frame document")->required();
    perturb->add_option("candidate", path_b, "candidate frame document")->required();
    auto* extend = app.add_subcommand("extend", "finite extension to a frame or Parseval frame");
    extend->add_option("frame", path, "frame document")->required();
    extend->add_option("--target", target, "frame or parseval")->required()->check(CLI::IsMember({"frame", "parseval"}));
    auto* nonunital = app.add_subcommand("nonunital", "outer frames of eventually constant sequences");
    nonunital->add_option("document", path, "element document")->required();
    nonunital->add_option("--action", action, "classify or complete")
        ->required()
        ->check(CLI::IsMember({"classify", "complete"}));
    auto* selftest = app.add_subcommand("selftest", "seeded randomized self-test");
    selftest->add_option("--seed", seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : MF_ERR_ARGUMENT;
    }

    try {
        const double tol = resolve_tol(tol_flag);
        if (*analyze) cmd_analyze(path, tol);
        if (*dual) cmd_dual(path, param, tol);
        if (*pdual) cmd_parseval_dual(path);
        if (*udual) cmd_unique_dual(path);
        if (*approx) cmd_approx(path, mode, tol);
        if (*perturb) cmd_perturb(path, path_b, tol);
        if (*extend) cmd_extend(path, target, tol);
        if (*nonunital) cmd_nonunital(path, action, tol);
        if (*selftest) cmd_selftest(seed);
    } catch (const Exit& e) {
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "modframe: " << e.what() << "\n";
        return MF_ERR_INTERNAL;
    }
    return 0;
}
