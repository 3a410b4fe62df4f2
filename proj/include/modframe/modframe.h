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

#ifndef MODFRAME_H
#define MODFRAME_H

/* C interface to the modframe library. Objects are opaque handles released with
 * their _free function; strings returned through char** are released with
 * mf_string_free. On failure a call returns a nonzero mf_status and records a
 * message (mf_last_error) and an error name (mf_last_error_kind) for the
 * calling thread. A tolerance argument <= 0 selects the library default. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MF_API __declspec(dllexport)
#else
#define MF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mf_status {
    MF_OK = 0,
    MF_ERR_INTERNAL = 1,
    MF_ERR_PARSE = 2,
    MF_ERR_SHAPE = 3,        /* dimensions inconsistent */
    MF_ERR_PRECONDITION = 4, /* not a frame, no Parseval dual, bound above one, ... */
    MF_ERR_ARGUMENT = 5      /* null pointer or invalid enum value */
} mf_status;

typedef struct mf_frame mf_frame;       /* a finite family in A^m, possibly empty */
typedef struct mf_operator mf_operator; /* an N x m matrix over A */

MF_API const char* mf_version(void);
MF_API const char* mf_last_error(void);
MF_API const char* mf_last_error_kind(void);
MF_API void mf_string_free(char* s);

MF_API mf_status mf_frame_from_json(const char* json, mf_frame** out);
MF_API mf_status mf_frame_to_json(const mf_frame* f, char** out);
MF_API size_t mf_frame_size(const mf_frame* f);
MF_API void mf_frame_free(mf_frame* f);

MF_API mf_status mf_operator_from_json(const char* json, mf_operator** out);
MF_API void mf_operator_free(mf_operator* t);

typedef struct mf_report {
    int is_frame;
    int is_parseval;
    int is_tight;
    int has_tight_constant;
    double lower;
    double upper;
    double tight_constant;
} mf_report;

MF_API mf_status mf_analyze(const mf_frame* f, double tol, mf_report* out);

MF_API mf_status mf_canonical_dual(const mf_frame* f, double tol, mf_frame** out);
/* Dual with analysis operator U S^{-1} + (I - U S^{-1} U*) L. */
MF_API mf_status mf_dual_from_parameter(const mf_frame* f, const mf_operator* l, mf_frame** out);
MF_API mf_status mf_is_dual(const mf_frame* f, const mf_frame* g, int* ok, double* residual);
/* Fails with MF_ERR_PRECONDITION and kind LowerBoundBelowOne or InsufficientCorank. */
MF_API mf_status mf_parseval_dual(const mf_frame* f, mf_frame** out);
/* residual is the orthogonality defect of the canonical Parseval frame, set when unique. */
MF_API mf_status mf_unique_dual(const mf_frame* f, int* unique, int* has_residual, double* residual);

typedef struct mf_approximation {
    double distance;
    double closed_form;
    double tight_constant;
} mf_approximation;

MF_API mf_status mf_best_parseval(const mf_frame* f, double tol, mf_approximation* out, mf_frame** approx);
MF_API mf_status mf_best_tight(const mf_frame* f, double tol, mf_approximation* out, mf_frame** approx);

typedef struct mf_perturbation {
    double distance;
    double radius;
    int within;
    int has_guaranteed_lower;
    double guaranteed_lower;
    double per_element_bound;
} mf_perturbation;

MF_API mf_status mf_perturb_check(const mf_frame* f, const mf_frame* candidate, mf_perturbation* out);

typedef enum mf_target { MF_TARGET_FRAME = 0, MF_TARGET_PARSEVAL = 1 } mf_target;

typedef struct mf_extension {
    size_t added;
    double input_upper_bound;
    double residual;
    mf_report combined;
} mf_extension;

MF_API mf_status mf_extend(const mf_frame* f, mf_target target, double tol, mf_extension* out, mf_frame** combined);

typedef enum mf_nonunital_action { MF_NONUNITAL_CLASSIFY = 0, MF_NONUNITAL_COMPLETE = 1 } mf_nonunital_action;

/* Takes and returns JSON. classify yields {"kind","A","B","strict_check","is_parseval"};
 * complete yields the completed element document with its verdict. */
MF_API mf_status mf_nonunital(const char* json, mf_nonunital_action action, double tol, char** out_json);

/* Runs the seeded self-test; the report is JSON. */
MF_API mf_status mf_selftest(uint64_t seed, char** out_json, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* MODFRAME_H */
