/*
 * qhborel: regular exact Borel subalgebras of quasihereditary algebras.
 *
 * C interface to the engine. Objects are opaque and owned by the caller;
 * release them with the matching *_free function. Every entry point returns
 * a qhb_status; on failure qhb_last_error() describes the problem for the
 * calling thread until its next call into the library.
 *
 * Integer vectors cross the boundary as comma-separated decimal strings
 * ("1,2,3"), results as UTF-8 JSON documents of the form
 *   { "result": {...}, "violations": [...] }
 * where large integers (above 2^53-1) are decimal strings.
 */
#ifndef QHBOREL_QHBOREL_H
#define QHBOREL_QHBOREL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define QHB_API __declspec(dllexport)
#else
#  define QHB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qhb_status {
  QHB_OK = 0,
  QHB_ERR_SCHEMA = 1,            /* malformed input document or family request */
  QHB_ERR_VIOLATIONS = 2,        /* data fails validation */
  QHB_ERR_NOT_REALIZABLE = 3,    /* no quasihereditary algebra has this data */
  QHB_ERR_DIVISIBILITY = 4,      /* k does not divide a Hom dimension */
  QHB_ERR_NOT_A_TREE = 5,
  QHB_ERR_INVALID_ARGUMENT = 6,  /* null pointer or bad k */
  QHB_ERR_INTERNAL = 7
} qhb_status;

typedef struct qhb_data qhb_data;
typedef struct qhb_result qhb_result;

QHB_API const char* qhb_version(void);
QHB_API const char* qhb_last_error(void);
QHB_API const char* qhb_status_name(qhb_status status);

/* Input records. */
QHB_API qhb_status qhb_data_from_json(const char* text, size_t len, qhb_data** out);
QHB_API void qhb_data_free(qhb_data* data);
QHB_API size_t qhb_data_size(const qhb_data* data);
QHB_API const char* qhb_data_label(const qhb_data* data, size_t i);
/* Caller releases the returned string with qhb_string_free. */
QHB_API char* qhb_data_to_json(const qhb_data* data);
QHB_API void qhb_string_free(char* s);

/* Analyses. `k_csv` may be NULL for the all-ones vector. */
QHB_API qhb_status qhb_validate(const qhb_data* data, qhb_result** out);
QHB_API qhb_status qhb_v_matrix(const qhb_data* data, qhb_result** out);
QHB_API qhb_status qhb_l_sequence(const qhb_data* data, qhb_result** out);
QHB_API qhb_status qhb_borel(const qhb_data* data, qhb_result** out);
QHB_API qhb_status qhb_profile(const qhb_data* data, const char* k_csv, qhb_result** out);
QHB_API qhb_status qhb_representative(const qhb_data* data, const char* k_csv, qhb_result** out);
QHB_API qhb_status qhb_flags(const qhb_data* data, qhb_result** out);

/* Generators. `tree_json` is a {"labels": [...], "order": [[a,b],...]}
 * document or NULL; ringel_dual_tree without a tree draws a random tree of
 * n nodes from `seed`. `chain` selects the chain order for semisimple. */
QHB_API qhb_status qhb_catalog(const char* family, size_t n, const char* tree_json, int chain,
                               uint64_t seed, qhb_data** out);
QHB_API qhb_status qhb_morita_twist(const qhb_data* data, const char* k_csv, qhb_data** out);

QHB_API const char* qhb_result_json(const qhb_result* result);
QHB_API void qhb_result_free(qhb_result* result);

#ifdef __cplusplus
}
#endif

#endif /* QHBOREL_QHBOREL_H */
