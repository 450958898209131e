/* zethsim: desk-scale shielded payments over a simulated account ledger
 * Copyright 2026 The zethsim Authors.
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef ZETH_ZETH_H
#define ZETH_ZETH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ZETH_EXPORT __declspec(dllexport)
#else
#define ZETH_EXPORT __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/** Error codes. Stable; they match the library's internal error classes. */
enum zeth_status
{
    ZETH_OK = 0,
    ZETH_INVALID_ARGUMENT = 1,
    ZETH_DEPTH_OUT_OF_RANGE = 2,
    ZETH_TREE_FULL = 3,
    ZETH_ADDRESS_UNUSED = 4,
    ZETH_NOT_OWNER = 5,
    ZETH_MALFORMED_NOTE = 6,
    ZETH_SHAPE_MISMATCH = 7,
    ZETH_INVALID_WITNESS = 8,
    ZETH_FINGERPRINT_MISMATCH = 9,
    ZETH_AUTH_FAILURE = 10,
    ZETH_INVALID_KEY = 11,
    ZETH_INSUFFICIENT_FUNDS = 12,
    ZETH_INTRINSIC_GAS_TOO_LOW = 13,
    ZETH_OUT_OF_GAS = 14,
    ZETH_UNKNOWN_CONTRACT = 15,
    ZETH_UNKNOWN_ROOT = 16,
    ZETH_DOUBLE_SPEND = 17,
    ZETH_INVALID_PROOF = 18,
    ZETH_VALUE_MISMATCH = 19,
    ZETH_INSUFFICIENT_CONTRACT_BALANCE = 20,
    ZETH_MALFORMED_TRANSACTION = 21,
    ZETH_INSUFFICIENT_NOTES = 22,
    ZETH_TOO_MANY_RECIPIENTS = 23,
    ZETH_UNBALANCED_REQUEST = 24,
    ZETH_INCONSISTENT_PAIR = 25,
    ZETH_IO = 26,
    ZETH_PARSE = 27,
    ZETH_NOT_FOUND = 28,
    ZETH_ALREADY_EXISTS = 29,
    ZETH_INTERNAL = 99
};

/** Opaque handle bound to one state directory. */
typedef struct zeth_context zeth_context;

/** Library version string, e.g. "0.1.0". */
ZETH_EXPORT const char* zeth_version(void);

/** Symbolic name of a status code, e.g. "DoubleSpend". Never NULL. */
ZETH_EXPORT const char* zeth_status_name(int status);

/** Creates a context for `state_dir` (which need not exist yet). */
ZETH_EXPORT int zeth_open(const char* state_dir, zeth_context** out);

/** Releases a context. NULL is ignored. */
ZETH_EXPORT void zeth_close(zeth_context* ctx);

/**
 * Runs one command with a JSON object of arguments (NULL means "{}").
 * On return *result_json holds a heap string owned by the caller (free it
 * with zeth_string_free): the command's JSON result on success, or
 * {"error": name, "code": n, "message": text} on failure.
 */
ZETH_EXPORT int zeth_call(zeth_context* ctx, const char* command, const char* args_json, char** result_json);

/** Message of the last failure on this context; empty after a success. */
ZETH_EXPORT const char* zeth_last_error(const zeth_context* ctx);

/** Frees strings returned by this library. NULL is ignored. */
ZETH_EXPORT void zeth_string_free(char* s);

/** SHA-256 of `len` bytes into out[32]. */
ZETH_EXPORT int zeth_sha256(const uint8_t* data, size_t len, uint8_t out[32]);

/**
 * Verification gas for `instance_elements` public inputs under a named
 * schedule ("byzantium" or "istanbul").
 */
ZETH_EXPORT int zeth_verifier_gas(uint64_t instance_elements, const char* schedule, uint64_t* total);

#ifdef __cplusplus
}
#endif

#endif /* ZETH_ZETH_H */
