#ifndef FACTORLAB_H
#define FACTORLAB_H

/* C interface to the factorlab shared library.
 *
 * All structured values cross this boundary as JSON text in the library's
 * documented wire formats (see README.md): instances, keys, ciphertexts,
 * kex tokens, attack reports, trial summaries, and bare matrices
 * (row-major nested arrays of integers in [0, p)).
 *
 * Conventions:
 *   - Every operation takes an fl_session for error reporting; after a
 *     non-FL_OK return, fl_last_error() gives a human-readable message.
 *   - Output strings (char**) are heap-allocated; release them with
 *     fl_free(). Any char** may be NULL to discard that output.
 *   - Operations that draw randomness take an explicit 64-bit seed and are
 *     fully deterministic given it.
 *   - A session is not thread-safe; use one session per thread.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fl_status {
    FL_OK = 0,
    FL_ERR_INVALID_ARGUMENT = 1,  /* NULL required pointer */
    FL_ERR_NOT_PRIME = 2,
    FL_ERR_ZERO_INVERSE = 3,
    FL_ERR_DIMENSION_MISMATCH = 4,
    FL_ERR_MODULUS_MISMATCH = 5,
    FL_ERR_SINGULAR_MATRIX = 6,
    FL_ERR_NOT_IN_SPAN = 7,
    FL_ERR_EMPTY_SOLUTION_SPACE = 8,
    FL_ERR_NO_INVERTIBLE_COMBINATION = 9,
    FL_ERR_COMMUTING_GENERATORS = 10,
    FL_ERR_GENERATION_EXHAUSTED = 11,
    FL_ERR_PARSE = 12,
    FL_ERR_BAD_SPEC = 13,
    FL_ERR_INTERNAL = 14
} fl_status;

typedef struct fl_session fl_session;

const char* fl_version(void);
const char* fl_status_name(fl_status status);

fl_session* fl_session_new(void);
void fl_session_free(fl_session* session);

/* Message for the most recent failed call on this session ("" if none). The
 * pointer is owned by the session and valid until the next call on it. */
const char* fl_last_error(const fl_session* session);

/* Releases a string returned through any char** output. */
void fl_free(char* text);

/* Draws non-commuting invertible generators (g, h) for the given parameters.
 * family is "general-linear" or "unitriangular". */
fl_status fl_gen_instance(fl_session* session, uint32_t p, uint32_t n, const char* family,
                          int64_t exponent_bound, uint64_t seed, char** out_instance);

/* ElGamal-type key generation on a serialized instance. */
fl_status fl_keygen(fl_session* session, const char* instance_json, uint64_t seed,
                    char** out_public_key, char** out_private_key);

/* message_json is a bare matrix; its shape must match the key. */
fl_status fl_encrypt(fl_session* session, const char* public_key_json, const char* message_json,
                     uint64_t seed, char** out_ciphertext);

fl_status fl_decrypt(fl_session* session, const char* private_key_json,
                     const char* ciphertext_json, char** out_message);

/* Runs one honest key exchange over the instance: both parties' tokens and
 * shared keys. out_agree (if non-NULL) is 1 when the shared keys match. The
 * token outputs are in the kex-token wire format, suitable for
 * fl_attack_kex. */
fl_status fl_kex_simulate(fl_session* session, const char* instance_json, uint64_t seed,
                          char** out_transcript, char** out_token_a, char** out_token_b,
                          int* out_agree);

/* Attacks. expected_json (a bare matrix) is optional ground truth: when
 * non-NULL, the report's "success" field and *out_success are set by
 * comparing the recovery against it; when NULL, success is unknown and
 * *out_success is -1. Sampling failure in the span method reports
 * FL_ERR_NO_INVERTIBLE_COMBINATION. */
fl_status fl_attack_span(fl_session* session, const char* public_key_json,
                         const char* ciphertext_json, uint64_t seed, const char* expected_json,
                         char** out_report, int* out_success);

fl_status fl_attack_lindecomp(fl_session* session, const char* public_key_json,
                              const char* ciphertext_json, const char* expected_json,
                              char** out_report, int* out_success);

/* Eavesdropper's shared-key recovery from the two kex tokens; the instance
 * supplies the public generators. */
fl_status fl_attack_kex(fl_session* session, const char* instance_json,
                        const char* token_a_json, const char* token_b_json,
                        const char* expected_json, char** out_report, int* out_success);

/* Seeded batch: generates an instance per trial, runs the requested attacks
 * (methods is a comma-separated subset of "span,lindecomp,kex"), checks every
 * recovery against ground truth, and aggregates. *out_failures (if non-NULL)
 * is the total number of failed or errored attack runs. */
fl_status fl_run_trials(fl_session* session, uint32_t p, uint32_t n, const char* family,
                        int64_t exponent_bound, uint64_t seed, uint64_t count,
                        const char* methods, char** out_summary, uint64_t* out_failures);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FACTORLAB_H */
