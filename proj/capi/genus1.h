#ifndef GENUS1_C_API_H
#define GENUS1_C_API_H

/*
 * C interface to the genus-one sheaf calculator. All computation runs behind
 * this boundary; requests and responses are JSON strings.
 *
 * A request looks like
 *   {"op": "stable-seq", "args": {"r": 19, "d": 11, "field": "q"}}
 * and the response is either
 *   {"ok": true, "result": {...}}
 * or
 *   {"ok": false, "error": {"code": "...", "message": "...", "context": "..."}}.
 *
 * The returned handle owns the response string; free it with g1_result_free.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  G1_OK = 0,
  G1_ERR_INVALID = 1,      /* validation or argument errors */
  G1_ERR_INCONCLUSIVE = 2, /* randomized procedure exhausted its budget */
  G1_ERR_INTERNAL = 3,
  G1_ERR_NOMEM = 4
} g1_status;

typedef struct g1_result g1_result;

/* Evaluates one operation. Always produces a result handle unless memory is
 * exhausted; inspect the status for the outcome class. */
g1_status g1_eval(const char* request_json, g1_result** out);

/* Response JSON; owned by the handle, valid until g1_result_free. */
const char* g1_result_json(const g1_result* r);

void g1_result_free(g1_result* r);

const char* g1_version(void);

#ifdef __cplusplus
}
#endif

#endif
