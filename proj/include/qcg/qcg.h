/* SPDX-License-Identifier: Apache-2.0 */
/*
 * qcg: polars and quasi-convex hulls in T, Z(n), Z(3^M) and R.
 *
 * Every call returns a status and, on success, an opaque result holding a
 * JSON document (schema "qcgroups/1") and a boolean flag whose meaning is
 * listed per function. Results are released with qcg_result_free. On error
 * the message is available from qcg_last_error() on the calling thread.
 *
 * Lists are comma-separated: rationals as "p/q", integers in decimal.
 */
#ifndef QCG_QCG_H
#define QCG_QCG_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define QCG_API __declspec(dllexport)
#else
#define QCG_API __attribute__((visibility("default")))
#endif

typedef enum {
  QCG_OK = 0,
  QCG_ERR_PROPERTY_FAILED = 1, /* a checked property is false; the result is still set */
  QCG_ERR_INVALID_INPUT = 2,
  QCG_ERR_INTERNAL = 3,
  QCG_ERR_NULL = 4
} qcg_status;

typedef struct qcg_result qcg_result;

QCG_API const char* qcg_version(void);
QCG_API const char* qcg_last_error(void);

QCG_API const char* qcg_result_json(const qcg_result* r);
QCG_API int qcg_result_flag(const qcg_result* r);
QCG_API void qcg_result_free(qcg_result* r);

/* Largest grid or cyclic order accepted. Defaults: grids 2^20, cyclic 3^13;
 * a positive value overrides both, 0 restores the defaults. QCG_MAX_GRID in
 * the environment is read on first use. */
QCG_API void qcg_set_max_grid(long long n);

/* flag: number of polar residues > 0. grid = 0 picks the least common denominator. */
QCG_API qcg_status qcg_polar_grid(const char* points, long long grid, qcg_result** out);
/* flag: the set is quasi-convex. */
QCG_API qcg_status qcg_hull_grid(const char* points, long long grid, qcg_result** out);
/* flag: the set is quasi-convex. */
QCG_API qcg_status qcg_hull_cyclic(long long n, const char* residues, qcg_result** out);
/* L_{a,3} truncated to Z(3^level) when seq is given, else the integers in
 * `elements` reduced mod 3^level; level = 0 picks a_max + 2. flag: quasi-convex. */
QCG_API qcg_status qcg_hull_j3(const char* seq, const char* elements, int level, qcg_result** out);

/* flag: 1. */
QCG_API qcg_status qcg_polar_real(const char* points, qcg_result** out);
/* flag: the set is quasi-convex in R. */
QCG_API qcg_status qcg_hull_real(const char* points, qcg_result** out);
/* flag: target lies in the hull. */
QCG_API qcg_status qcg_member_real(const char* points, const char* target, qcg_result** out);

/* family: "T2", "R2", "T3", "J3", or "chain" (seq is then b_0,b_1,...).
 * flag: QuasiConvex, or for chains every necessary condition holds. */
QCG_API qcg_status qcg_family_verdict(const char* family, const char* seq, qcg_result** out);

/* side: "circle" or "padic". level = 0 picks a_max + 2; k_max < 0 picks level - 1.
 * flag: 1. */
QCG_API qcg_status qcg_compute_jm(const char* seq, int m, const char* side, int level, int k_max, qcg_result** out);
/* flag: the set equals the epsilon forms. */
QCG_API qcg_status qcg_q12(const char* seq, const char* side, int level, qcg_result** out);

/* family "T3" or "J3". Exactly one of target (a point of T, or an integer for
 * J3) and epsilon ("1,0,-1") is non-null. flag: the certificate verifies. */
QCG_API qcg_status qcg_certify(const char* family, const char* seq, const char* target, const char* epsilon,
                               qcg_result** out);
/* truncation = 0 uses the certificate's own. flag: valid; returns
 * QCG_ERR_PROPERTY_FAILED when not. */
QCG_API qcg_status qcg_verify_certificate(const char* certificate_json, long long truncation, qcg_result** out);

typedef void (*qcg_progress_fn)(int id, const char* name, int pass, double seconds, void* user);
/* criteria: comma-separated ids, or null for all. flag: all passed; returns
 * QCG_ERR_PROPERTY_FAILED when one did not. */
QCG_API qcg_status qcg_run_acceptance(int jobs, const char* criteria, qcg_progress_fn progress, void* user,
                                    qcg_result** out);

#ifdef __cplusplus
}
#endif

#endif /* QCG_QCG_H */
