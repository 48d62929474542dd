#ifndef COXETERKIT_H
#define COXETERKIT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes.
 */
typedef enum CkStatus {
  CK_STATUS_OK = 0,
  CK_STATUS_NULL_POINTER = 1,
  CK_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed graph, type label or index.
   */
  CK_STATUS_INVALID_INPUT = 3,
  /**
   * The type is valid but not covered (e.g. exceptional character tables).
   */
  CK_STATUS_UNSUPPORTED = 4,
  /**
   * A size guard was hit.
   */
  CK_STATUS_TOO_LARGE = 5,
  CK_STATUS_INTERNAL = 6,
  CK_STATUS_PANIC = 7,
} CkStatus;

/**
 * An exact character table.
 */
typedef struct CkCharTable CkCharTable;

/**
 * The classification of a graph.
 */
typedef struct CkClassification CkClassification;

/**
 * A Coxeter graph.
 */
typedef struct CkGraph CkGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty if none.
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *ck_last_error(void);

/**
 * Static description of a status code.
 */
const char *ck_status_name(enum CkStatus status);

/**
 * # Safety
 * `s` must be null or a string returned by this library, freed once.
 */
void ck_string_free(char *s);

/**
 * A graph on `n` vertices with no edges (all labels 2).
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum CkStatus ck_graph_new(size_t n, struct CkGraph **out);

/**
 * Parses `{"n": .., "edges": [[i, j, m], ..]}` where `m = 0` means ∞.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum CkStatus ck_graph_from_json(const char *json, struct CkGraph **out);

/**
 * The graph of a finite type, e.g. `"E8"` or `"I2(7)"`.
 *
 * # Safety
 * `type_label` must be a NUL-terminated string and `out` a valid pointer.
 */
enum CkStatus ck_graph_from_type(const char *type_label, struct CkGraph **out);

/**
 * Sets the label of edge `{i, j}`; `m = 2` removes it, `m = 0` means ∞.
 *
 * # Safety
 * `graph` must be a live handle.
 */
enum CkStatus ck_graph_set_label(struct CkGraph *graph, size_t i, size_t j, uint32_t m);

/**
 * # Safety
 * `graph` must be a live handle.
 */
size_t ck_graph_rank(const struct CkGraph *graph);

/**
 * # Safety
 * `graph` must be a live handle or null.
 */
char *ck_graph_to_json(const struct CkGraph *graph);

/**
 * # Safety
 * `graph` must be null or a handle not yet freed.
 */
void ck_graph_free(struct CkGraph *graph);

/**
 * # Safety
 * `graph` must be a live handle and `out` a valid pointer.
 */
enum CkStatus ck_classify(const struct CkGraph *graph, struct CkClassification **out);

/**
 * # Safety
 * `c` must be a live handle.
 */
bool ck_classification_is_finite(const struct CkClassification *c);

/**
 * # Safety
 * `c` must be a live handle.
 */
size_t ck_classification_component_count(const struct CkClassification *c);

/**
 * Type label of component `k` (`"A4"`, …) or `NotFinite (<witness>)`.
 *
 * # Safety
 * `c` must be a live handle.
 */
char *ck_classification_component(const struct CkClassification *c, size_t k);

/**
 * Whole result, components joined by `" + "`.
 *
 * # Safety
 * `c` must be a live handle.
 */
char *ck_classification_to_string(const struct CkClassification *c);

/**
 * # Safety
 * `c` must be null or a handle not yet freed.
 */
void ck_classification_free(struct CkClassification *c);

/**
 * `|W|` for `A_n`, `B_n`, `D_n` and `I2(m)`.
 *
 * # Safety
 * `type_label` must be a NUL-terminated string and `out` a valid pointer.
 */
enum CkStatus ck_group_order(const char *type_label, uint64_t *out);

/**
 * Exact character table of `A_n`, `B_n`, `D_n` or `I2(m)` within the guards.
 *
 * # Safety
 * `type_label` must be a NUL-terminated string and `out` a valid pointer.
 */
enum CkStatus ck_chartable_new(const char *type_label, struct CkCharTable **out);

/**
 * Number of irreducible characters (= number of classes).
 *
 * # Safety
 * `t` must be a live handle.
 */
size_t ck_chartable_size(const struct CkCharTable *t);

/**
 * # Safety
 * `t` must be a live handle and `out` a valid pointer.
 */
enum CkStatus ck_chartable_class_size(const struct CkCharTable *t, size_t class_, size_t *out);

/**
 * # Safety
 * `t` must be a live handle.
 */
char *ck_chartable_label(const struct CkCharTable *t, size_t row);

/**
 * `χ_row(class)` as a complex double.
 *
 * # Safety
 * `t` must be a live handle; `re` and `im` valid pointers.
 */
enum CkStatus ck_chartable_value(const struct CkCharTable *t,
                                 size_t row,
                                 size_t class_,
                                 double *re,
                                 double *im);

/**
 * `χ_row(class)` in exact form, e.g. `"-1"` or `"z5^2+z5^3"`.
 *
 * # Safety
 * `t` must be a live handle.
 */
char *ck_chartable_value_exact(const struct CkCharTable *t, size_t row, size_t class_);

/**
 * The whole table as TSV (see the CLI `chartable` command).
 *
 * # Safety
 * `t` must be a live handle.
 */
char *ck_chartable_to_tsv(const struct CkCharTable *t, bool float_);

/**
 * # Safety
 * `t` must be null or a handle not yet freed.
 */
void ck_chartable_free(struct CkCharTable *t);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COXETERKIT_H */
