/*
 * C interface to the Reeder puzzle engine.
 *
 * Objects are opaque handles released with their *_free function. Every
 * fallible call returns a reeder_status; on failure reeder_last_error()
 * describes the problem (thread-local, valid until the next call on the same
 * thread). Strings returned through `char**` are heap-allocated and must be
 * released with reeder_string_free().
 *
 * Labelings cross the interface as bitstrings of '0'/'1' written in the
 * diagram's display order: standard Dynkin numbering for named families,
 * vertex 0 first for DSL diagrams. Vertex arguments are positions in that string.
 */
#ifndef REEDER_REEDER_H
#define REEDER_REEDER_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(REEDER_BUILDING_LIBRARY)
#    define REEDER_API __declspec(dllexport)
#  else
#    define REEDER_API __declspec(dllimport)
#  endif
#else
#  define REEDER_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum reeder_status {
  REEDER_OK = 0,
  REEDER_ERR_PARSE = 2,    /* malformed DSL, family string or labeling */
  REEDER_ERR_MISMATCH = 3, /* reserved for callers comparing results */
  REEDER_ERR_RESOURCE = 4, /* state space above the enumeration cap */
  REEDER_ERR_INVALID = 5,  /* bad argument, index or precondition */
  REEDER_ERR_INTERNAL = 6
} reeder_status;

typedef enum reeder_format {
  REEDER_FORMAT_JSON = 0,
  REEDER_FORMAT_CSV = 1,
  REEDER_FORMAT_TEXT = 2
} reeder_format;

typedef struct reeder_diagram reeder_diagram;
typedef struct reeder_partition reeder_partition;

REEDER_API const char* reeder_last_error(void);
REEDER_API void reeder_string_free(char* s);
REEDER_API int reeder_default_max_free(void);

/* ---- diagrams ---------------------------------------------------------- */

/* Named family such as "A:5", "affD:7", "flower:4" or "Abox:6:ends=2". */
REEDER_API reeder_status reeder_diagram_from_family(const char* spec, reeder_diagram** out);
REEDER_API reeder_status reeder_diagram_from_dsl(const char* text, reeder_diagram** out);
REEDER_API reeder_status reeder_diagram_load(const char* path, reeder_diagram** out);
/* Loads `spec_or_path` as a DSL file when such a file exists, otherwise
 * parses it as a family string. */
REEDER_API reeder_status reeder_diagram_open(const char* spec_or_path, reeder_diagram** out);
REEDER_API void reeder_diagram_free(reeder_diagram* d);

REEDER_API int reeder_diagram_vertex_count(const reeder_diagram* d);
REEDER_API int reeder_diagram_free_count(const reeder_diagram* d);
/* Owned by the diagram. */
REEDER_API const char* reeder_diagram_name(const reeder_diagram* d);
REEDER_API int reeder_diagram_is_family(const reeder_diagram* d);
REEDER_API reeder_status reeder_diagram_to_dsl(const reeder_diagram* d, char** out);

/* *has_formula is 0 for families without a closed form and for DSL
 * diagrams; *count is then left at 0. */
REEDER_API reeder_status reeder_diagram_closed_form(const reeder_diagram* d, uint64_t* count, int* has_formula);

REEDER_API reeder_status reeder_apply_move(const reeder_diagram* d, const char* labeling, int vertex, char** out);
REEDER_API reeder_status reeder_count_components(const reeder_diagram* d, const char* labeling, int* out);
REEDER_API reeder_status reeder_is_fixed(const reeder_diagram* d, const char* labeling, int* out);

/* ---- partitions -------------------------------------------------------- */

/* max_free <= 0 selects the default cap. */
REEDER_API reeder_status reeder_partition_enumerate(const reeder_diagram* d, int max_free, reeder_partition** out);
REEDER_API void reeder_partition_free(reeder_partition* p);

REEDER_API int reeder_partition_class_count(const reeder_partition* p);
REEDER_API reeder_status reeder_partition_class_of(const reeder_partition* p, const char* labeling, int* out);
REEDER_API reeder_status reeder_partition_min_rep(const reeder_partition* p, int cls, char** out);
REEDER_API reeder_status reeder_partition_class_size(const reeder_partition* p, int cls, uint64_t* out);
REEDER_API reeder_status reeder_partition_export(const reeder_partition* p, reeder_format format, int include_members,
                                                 char** out);

/* Canonical representatives of a family diagram checked against the
 * partition. *available is 0 when the family has no list; *all_ok is 1 when
 * the list is complete, pairwise inequivalent and weight-minimal. */
REEDER_API reeder_status reeder_check_representatives(const reeder_diagram* d, const reeder_partition* p,
                                                      reeder_format format, char** report, int* available,
                                                      int* all_ok);

/* ---- verification ------------------------------------------------------ */

REEDER_API reeder_status reeder_verify(const reeder_diagram* d, int max_free, reeder_format format, char** report,
                                       int* passed);

/* JSON report {reeder_classes, sigma_orbits, det_A, applicable,
 * bijection_verified, pairing}. Requires an unpinned simply-laced diagram. */
REEDER_API reeder_status reeder_duality(const reeder_diagram* d, int max_free, char** json, int* applicable,
                                        int* verified);

#ifdef __cplusplus
}
#endif

#endif /* REEDER_REEDER_H */
