/* unionvals — egalitarian values for cooperative games with a priori unions.
 *
 * C interface of the shared library. Games are opaque handles created from
 * JSON documents (see README for the format). Every function that can fail
 * returns a uv_status; when an out_error parameter is present, a failed
 * call stores a malloc'd UTF-8 message there (free with uv_string_free).
 * All payoffs are exact rationals rendered as strings: "p", "-p" or "p/q"
 * in lowest terms. Structured results come back as JSON text.
 *
 * Value identifiers: "edu", "esd1u", "esd2u", "esd3u", "esd4u", "esd5u",
 * "owen", "banzhaf-owen", plus the single-game values "ed", "esd",
 * "shapley", "banzhaf" (which ignore the partition).
 * Axiom identifiers: "ced", "cesd", "qgp", "qsgp", "bcu", "eiu", "dmiviu",
 * "bcpa", "efficiency", "block-order-invariance".
 */

#ifndef UNIONVALS_H
#define UNIONVALS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct uv_game uv_game; /* a validated game plus its partition */

typedef enum uv_status {
    UV_OK = 0,
    UV_ERR_SYNTAX = 1,     /* document text is not well-formed */
    UV_ERR_VALIDATION = 2, /* well-formed but not a valid game/partition */
    UV_ERR_ARGUMENT = 3,   /* unknown identifier or out-of-range parameter */
    UV_ERR_INTERNAL = 4
} uv_status;

const char* uv_version(void);

/* Frees a string returned through any char** parameter. NULL is fine. */
void uv_string_free(char* text);

/* --- games --------------------------------------------------------------- */

/* Parses a game document. On success *out_game owns the game (free with
 * uv_game_free). text_len may be 0 for NUL-terminated text. */
uv_status uv_game_parse(const char* text, size_t text_len, uv_game** out_game,
                        char** out_error);

/* Canonical document text for the game: byte-deterministic, rationals in
 * lowest terms. Parsing the result reproduces the game exactly. */
uv_status uv_game_serialize(const uv_game* game, char** out_text);

void uv_game_free(uv_game* game);

int uv_game_player_count(const uv_game* game);
int uv_game_block_count(const uv_game* game);

/* --- computations ---------------------------------------------------------
 *
 * JSON shapes (all rationals as strings):
 *   allocation: {"value": ID, "players": [...], "payoffs": [...]}
 *   report:     {"value": ID, "axiom": ID, "verdict": "holds"|"violated",
 *                "vacuous": bool, "within_budget": bool, "trials": n,
 *                "note": "...", "witness": {"block": k, "players": [...],
 *                "lhs": "...", "rhs": "...", "detail": "...", "game": doc}}
 *               ("note"/"witness" present only when meaningful; "block" is
 *                1-based)
 *   table:      {"players": [...], "values": [IDs...],
 *                "payoffs": [[per value, per player]...]}
 *   matrix:     {"players": n, "trials": n, "seed": n, "axioms": [IDs...],
 *                "rows": [{"value": ID, "cells": [report-like cells with
 *                "claimed": bool]}]}
 */

/* Allocation of one value on the game (coalitional or single-game id). */
uv_status uv_compute(const uv_game* game, const char* value_id, char** out_json,
                     char** out_error);

/* Checks one axiom for one coalitional value on the game. *out_violated is
 * 1 when a witness was found, else 0. */
uv_status uv_check(const uv_game* game, const char* value_id, const char* axiom_id,
                   int* out_violated, char** out_json, char** out_error);

/* Seeded random counterexample search; deterministic for equal arguments.
 * *out_found is 1 when a witness was found within the budget, else 0. */
uv_status uv_search(const char* value_id, const char* axiom_id, int players, int blocks,
                    long trials, unsigned long long seed, long long worth_lo,
                    long long worth_hi, int* out_found, char** out_json, char** out_error);

/* Runs the whole property grid at one player count (needs players >= 3). */
uv_status uv_matrix(int players, long trials, unsigned long long seed, char** out_json,
                    char** out_error);

/* Canonical document text of the quotient game (star != 0: quotient* game). */
uv_status uv_quotient(const uv_game* game, int star, char** out_text, char** out_error);

/* All eight coalitional values on one game. */
uv_status uv_table(const uv_game* game, char** out_json, char** out_error);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* UNIONVALS_H */
