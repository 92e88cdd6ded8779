/*
   Copyright 2026 The jackkernel authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#ifndef JACKKERNEL_H
#define JACKKERNEL_H

/*
 * C interface to the jackkernel exact-arithmetic library.
 *
 * All computations go through an opaque session handle, which owns the
 * memoized tables and the size guards.  Functions return a jk_status code;
 * on success *out receives a malloc'd JSON document (UTF-8, deterministic
 * byte-stable formatting) that the caller releases with jk_free.  On
 * failure the session stores a message retrievable via jk_last_error.
 */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define JK_API __declspec(dllexport)
#else
#define JK_API __attribute__((visibility("default")))
#endif

typedef struct jk_session jk_session;

typedef enum jk_status {
    JK_OK = 0,
    JK_E_PARSE = 1,    /* malformed partition / argument */
    JK_E_LIMIT = 2,    /* a size guard was exceeded */
    JK_E_RING = 3,     /* ring mismatch, pole, or inexact division */
    JK_E_VERIFY = 4,   /* a verification suite reported failures */
    JK_E_INTERNAL = 5, /* a structural invariant failed (library bug) */
    JK_E_USAGE = 6     /* null argument or unknown option value */
} jk_status;

/* Session lifetime.  jk_open reads JACKKERNEL_MAX_WEIGHT from the
 * environment to override the default weight guard (6). */
JK_API jk_session* jk_open(void);
JK_API void jk_close(jk_session* s);

JK_API const char* jk_version(void);
JK_API const char* jk_last_error(const jk_session* s);
JK_API void jk_free(char* buffer);

/* Adjusts the weight guard at runtime; returns JK_OK or JK_E_USAGE. */
JK_API int jk_set_max_weight(jk_session* s, int max_weight);

/* Partition strings: comma-separated positive integers, weakly decreasing;
 * the empty string is the empty partition. */

/* Jack vector in the power-sum basis.  ring is "alpha" (rational functions
 * in alpha), "sqrt" (alpha = s^2), or a rational literal such as "3" or
 * "5/2" for a numeric specialization. */
JK_API int jk_jack_json(jk_session* s, const char* lambda, const char* ring, char** out);

/* Jack character theta (in alpha) and the normalized character (in s). */
JK_API int jk_character_json(jk_session* s, const char* mu, const char* lambda, char** out);

/* Character in multirectangular coordinates over k rectangles; with_audit
 * adds the positivity/integrality report. */
JK_API int jk_stanley_json(jk_session* s, const char* mu, int rects, int with_audit, char** out);

/* Transition-measure data for a partition: kind is "moments", "boolean",
 * or "free"; entries are exact values in the sqrt ring. */
JK_API int jk_moments_json(jk_session* s, const char* lambda, int lmax, const char* kind, char** out);

/* Character expansion of a cumulant (or moment) product over sites with
 * the given comma-separated lengths. */
JK_API int jk_expand_json(jk_session* s, const char* lengths, int moment_mode, char** out);

/* Runs a named verification suite (max_size 0 = suite default).  Returns
 * JK_OK when every check passes, JK_E_VERIFY otherwise; *out carries the
 * full report either way. */
JK_API int jk_verify_json(jk_session* s, const char* suite, int max_size, char** out);

#ifdef __cplusplus
}
#endif

#endif /* JACKKERNEL_H */
