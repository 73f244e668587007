#ifndef SYMPLECTICA_H
#define SYMPLECTICA_H

/* C interface to the symplectica library.
 *
 * Objects are opaque handles created and destroyed by the library. Every
 * fallible call returns a sym_status; on failure sym_last_error() describes
 * the problem (per thread, valid until the next call on that thread).
 * Strings returned through char** are owned by the caller and released with
 * sym_string_free.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SYMPLECTICA_BUILDING_LIBRARY)
#    define SYM_API __declspec(dllexport)
#  else
#    define SYM_API __declspec(dllimport)
#  endif
#else
#  define SYM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sym_status {
    SYM_OK = 0,
    SYM_E_INVALID_ARGUMENT = 1,
    SYM_E_DOMAIN = 2,
    SYM_E_VALIDATION = 3,
    SYM_E_PRECONDITION = 4,
    SYM_E_SIZE_BOUND = 5,
    SYM_E_AMBIGUOUS = 6,
    SYM_E_INTERNAL = 7,
    SYM_E_NULL = 8
} sym_status;

typedef enum sym_kind { SYM_COLLINEAR = 0, SYM_LOWER = 1, SYM_UPPER = 2 } sym_kind;
typedef enum sym_format { SYM_JSON = 0, SYM_DOT = 1, SYM_CSV = 2 } sym_format;

typedef struct sym_space sym_space;
typedef struct sym_graph sym_graph;

typedef struct sym_suite_spec {
    char suite;          /* 'A'..'H' */
    unsigned p;
    size_t m;
    size_t k;            /* 0: every level the suite applies to */
    int sampled;         /* 0 exhaustive, 1 sampled */
    uint64_t seed;
    size_t samples;
} sym_suite_spec;

SYM_API const char* sym_last_error(void);
SYM_API const char* sym_status_name(sym_status s);
SYM_API void sym_string_free(char* s);

/* Worker threads for graph construction; 0 restores the default
 * (SYMPLECTICA_THREADS, else the hardware concurrency). Results never depend
 * on this value. */
SYM_API void sym_set_threads(size_t n);

/* Symplectic space of dimension 2m over GF(p), standard gram matrix. */
SYM_API sym_status sym_space_create(unsigned p, size_t m, sym_space** out);
SYM_API void sym_space_destroy(sym_space* s);
SYM_API sym_status sym_space_dim(const sym_space* s, size_t* n);
/* Per-level counts of subspaces by type, as JSON. */
SYM_API sym_status sym_space_census(const sym_space* s, char** json);
/* Number of regular-or-tangential k-subspaces. */
SYM_API sym_status sym_level_size(const sym_space* s, size_t k, size_t* out);
/* Points and lines of the space of pencils at level k. */
SYM_API sym_status sym_grassmann_export(const sym_space* s, size_t k, sym_format f, char** out);

SYM_API sym_status sym_graph_create(const sym_space* s, size_t k, sym_kind kind, sym_graph** out);
SYM_API void sym_graph_destroy(sym_graph* g);
SYM_API sym_status sym_graph_vertex_count(const sym_graph* g, size_t* out);
SYM_API sym_status sym_graph_edge_count(const sym_graph* g, size_t* out);
SYM_API sym_status sym_graph_has_edge(const sym_graph* g, size_t i, size_t j, int* out);
SYM_API sym_status sym_graph_equal(const sym_graph* a, const sym_graph* b, int* out);
SYM_API sym_status sym_graph_components(const sym_graph* g, size_t* out);
SYM_API sym_status sym_graph_clique_count(const sym_graph* g, size_t* out);
SYM_API sym_status sym_graph_export(const sym_graph* g, sym_format f, char** out);
/* Order of the automorphism group as a decimal string. */
SYM_API sym_status sym_graph_automorphism_count(const sym_graph* g, char** decimal);

/* Rebuilds the projective space and its polarity from the collinearity graph
 * of level k alone. *match is 1 when the result equals the original. */
SYM_API sym_status sym_reconstruct(const sym_space* s, size_t k, char** json, int* match);

/* Runs one suite and writes its JSON report. *pass mirrors the report. */
SYM_API sym_status sym_verify(const sym_suite_spec* spec, char** json, int* pass);
/* Re-evaluates one failure record (JSON) on the instance (p, m). */
SYM_API sym_status sym_replay(unsigned p, size_t m, const char* failure_json, int* holds);
/* Negates the named check in later runs; NULL or "" disables. */
SYM_API sym_status sym_set_fault_injection(const char* check);

#ifdef __cplusplus
}
#endif

#endif
