/* C interface to the leinster library.
 *
 * Every call that can fail returns a leinster_status; on failure the message
 * is available from leinster_last_error() on the same thread. Numbers cross
 * the boundary as decimal strings so arbitrary-precision values survive.
 * Strings handed out by the library are released with leinster_string_free.
 */
#ifndef LEINSTER_LEINSTER_H
#define LEINSTER_LEINSTER_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(LEINSTER_BUILDING)
#    define LEINSTER_API __declspec(dllexport)
#  else
#    define LEINSTER_API __declspec(dllimport)
#  endif
#else
#  define LEINSTER_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values match the CLI exit codes. */
typedef enum leinster_status {
  LEINSTER_OK = 0,
  LEINSTER_ERR_USAGE = 1,
  LEINSTER_ERR_DOMAIN = 2,
  LEINSTER_ERR_VERIFY = 3,
  LEINSTER_ERR_RESOURCE = 4,
  LEINSTER_ERR_INTERNAL = 5
} leinster_status;

enum {
  LEINSTER_NUMBER_PERFECT = 1u << 0,
  LEINSTER_NUMBER_ABUNDANT = 1u << 1,
  LEINSTER_NUMBER_DEFICIENT = 1u << 2,
  LEINSTER_NUMBER_ALMOST_PERFECT = 1u << 3,
  LEINSTER_NUMBER_QUASI_PERFECT = 1u << 4
};

typedef struct leinster_group leinster_group;
typedef struct leinster_record leinster_record;
typedef struct leinster_sweep_config leinster_sweep_config;
typedef struct leinster_sweep leinster_sweep;

LEINSTER_API const char* leinster_last_error(void);
LEINSTER_API void leinster_string_free(char* s);
/* Oracle order cap in effect (LEINSTER_ORDER_CAP or the default). */
LEINSTER_API size_t leinster_order_cap(void);

/* ---- number theory ---- */
LEINSTER_API leinster_status leinster_divisor_sum(const char* n, char** out);
LEINSTER_API leinster_status leinster_classify_number(const char* n, unsigned* flags);
LEINSTER_API leinster_status leinster_is_prime(const char* n, int* out);
LEINSTER_API leinster_status leinster_mult_order(const char* r, const char* m, char** out);

/* ---- oracle groups ---- */
LEINSTER_API leinster_status leinster_group_cyclic(size_t n, leinster_group** out);
LEINSTER_API leinster_status leinster_group_zm(const char* m, const char* n, const char* r, leinster_group** out);
/* Dih(A), A = C_f[0] x ... x C_f[count-1]; count may be 0. */
LEINSTER_API leinster_status leinster_group_dihedral(const size_t* factors, size_t count, leinster_group** out);
/* Dic(A) with x^2 = y, y an index into A (mixed radix, last factor fastest). */
LEINSTER_API leinster_status leinster_group_dicyclic(const size_t* factors, size_t count, size_t y,
                                                     leinster_group** out);
LEINSTER_API leinster_status leinster_group_affine(const char* p, leinster_group** out);
LEINSTER_API leinster_status leinster_group_direct_product(const leinster_group* g, const leinster_group* h,
                                                           leinster_group** out);
LEINSTER_API size_t leinster_group_order(const leinster_group* g);
LEINSTER_API leinster_status leinster_group_divisor_sum(const leinster_group* g, char** out);
LEINSTER_API leinster_status leinster_group_subgroup_counts(const leinster_group* g, size_t* subgroups,
                                                            size_t* normal);
LEINSTER_API leinster_status leinster_group_is_nilpotent(const leinster_group* g, int* out);
LEINSTER_API void leinster_group_free(leinster_group* g);

/* ---- classification records ---- */
/* family: cyclic | zm | affine | dihedral | gen-dihedral | dicyclic | pq */
LEINSTER_API leinster_status leinster_classify(const char* family, const char* const* params, size_t count,
                                               int verify, leinster_record** out);
/* One-line JSON object: family, params, order, D, class, notes. */
LEINSTER_API leinster_status leinster_record_json(const leinster_record* r, char** out);
LEINSTER_API const char* leinster_record_class(const leinster_record* r);
LEINSTER_API leinster_status leinster_record_order(const leinster_record* r, char** out);
LEINSTER_API leinster_status leinster_record_divisor_sum(const leinster_record* r, char** out);
LEINSTER_API size_t leinster_record_note_count(const leinster_record* r);
LEINSTER_API const char* leinster_record_note(const leinster_record* r, size_t i);
/* Aligned table for a single record, header included. */
LEINSTER_API leinster_status leinster_record_table(const leinster_record* r, char** out);
LEINSTER_API void leinster_record_free(leinster_record* r);

/* ---- sweeps ---- */
LEINSTER_API leinster_status leinster_sweep_config_new(const char* family, leinster_sweep_config** out);
/* lo or hi may be NULL to keep the family default. */
LEINSTER_API leinster_status leinster_sweep_config_set_bound(leinster_sweep_config* cfg, const char* name,
                                                             const char* lo, const char* hi);
LEINSTER_API leinster_status leinster_sweep_config_set_paper_mode(leinster_sweep_config* cfg, int on);
LEINSTER_API leinster_status leinster_sweep_config_add_class(leinster_sweep_config* cfg, const char* kind);
LEINSTER_API leinster_status leinster_sweep_config_set_dedupe(leinster_sweep_config* cfg, int on);
LEINSTER_API leinster_status leinster_sweep_config_set_include_edges(leinster_sweep_config* cfg, int on);
LEINSTER_API leinster_status leinster_sweep_config_set_workers(leinster_sweep_config* cfg, unsigned workers);
LEINSTER_API leinster_status leinster_sweep_config_set_cache(leinster_sweep_config* cfg, const char* path);
LEINSTER_API leinster_status leinster_sweep_config_set_budget(leinster_sweep_config* cfg, const char* budget);
LEINSTER_API void leinster_sweep_config_free(leinster_sweep_config* cfg);

LEINSTER_API leinster_status leinster_sweep_run(const leinster_sweep_config* cfg, leinster_sweep** out);
LEINSTER_API size_t leinster_sweep_size(const leinster_sweep* s);
/* Borrowed; valid until leinster_sweep_free. */
LEINSTER_API const leinster_record* leinster_sweep_record(const leinster_sweep* s, size_t i);
LEINSTER_API size_t leinster_sweep_warning_count(const leinster_sweep* s);
LEINSTER_API const char* leinster_sweep_warning(const leinster_sweep* s, size_t i);
LEINSTER_API leinster_status leinster_sweep_table(const leinster_sweep* s, char** out);
LEINSTER_API void leinster_sweep_free(leinster_sweep* s);

/* ---- reports ---- */
/* indices may be NULL; otherwise up to capacity solution indices are written. */
LEINSTER_API leinster_status leinster_perfect_plus_one(unsigned count, char** report, unsigned* indices,
                                                       size_t capacity, size_t* n_indices);
/* Returns LEINSTER_ERR_VERIFY (with the report still filled in) if any invariant fails. */
LEINSTER_API leinster_status leinster_verify(size_t max_order, char** report);

#ifdef __cplusplus
}
#endif

#endif /* LEINSTER_LEINSTER_H */
