/* C interface to the amalgam library.
 *
 * Every function returns an amg_status; on anything but AMG_OK the message
 * is available from amg_last_error() on the calling thread until the next
 * call. Handles are opaque and owned by the caller; free them with the
 * matching *_free function (NULL is accepted). Strings returned from a
 * handle stay valid until that handle is freed.
 */
#ifndef AMALGAM_H
#define AMALGAM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define AMG_API __declspec(dllexport)
#else
#define AMG_API __attribute__((visibility("default")))
#endif

typedef enum amg_status {
  AMG_OK = 0,
  AMG_FAIL = 1,      /* a checked property does not hold */
  AMG_EINPUT = 2,    /* malformed input, unmet hypotheses or a size cap */
  AMG_EINTERNAL = 3  /* unexpected failure inside the library */
} amg_status;

typedef struct amg_options amg_options;
typedef struct amg_report amg_report;
typedef struct amg_presentation amg_presentation;
typedef struct amg_rep amg_rep;
typedef struct amg_poset amg_poset;
typedef struct amg_local_system amg_local_system;

AMG_API const char* amg_version(void);
AMG_API const char* amg_last_error(void);

/* Commands: "amalgam coherent-dim", "reps hom", "topo svk", "suite", ... */
AMG_API size_t amg_command_count(void);
AMG_API const char* amg_command_name(size_t index);

AMG_API amg_status amg_options_new(amg_options** out);
/* Sets or replaces a key ("field", "preset", "degree", "seed", ...). */
AMG_API amg_status amg_options_set(amg_options* options, const char* key, const char* value);
AMG_API void amg_options_free(amg_options* options);

/* Runs a command. On AMG_OK or AMG_FAIL *out holds the report; AMG_FAIL
 * means the report verdict is fail. options may be NULL. */
AMG_API amg_status amg_run(const char* command, const amg_options* options, amg_report** out);
AMG_API int amg_report_passed(const amg_report* report);
AMG_API const char* amg_report_text(const amg_report* report);
AMG_API const char* amg_report_json(const amg_report* report);
AMG_API void amg_report_free(amg_report* report);

/* Presentations H -> G1, H -> G2: a preset name or a JSON file. */
AMG_API amg_status amg_presentation_open(const char* reference, amg_presentation** out);
AMG_API void amg_presentation_free(amg_presentation* p);
/* Dimension of the truncated coherent elements; field is "q", "p" or "p^m". */
AMG_API amg_status amg_coherent_dimension(const amg_presentation* p, int degree, const char* field, size_t* out);

/* Representations of an amalgam. */
AMG_API amg_status amg_rep_va(const char* a, const char* field, amg_rep** out);
/* Glues representation files of G1 and G2; gluing may be NULL (identity). */
AMG_API amg_status amg_rep_glue(const amg_presentation* p, const char* rep1, const char* rep2, const char* gluing,
                                amg_rep** out);
AMG_API amg_status amg_rep_dimension(const amg_rep* rep, size_t* out);
AMG_API amg_status amg_hom_dimension(const amg_rep* left, const amg_rep* right, size_t* out);
AMG_API void amg_rep_free(amg_rep* rep);

/* Finite spaces: "pseudo-circle", "hexagon", "wedge", "cone" or a file. */
AMG_API amg_status amg_poset_open(const char* reference, amg_poset** out);
AMG_API amg_status amg_poset_size(const amg_poset* p, size_t* out);
/* Number of generators of the edge-path presentation at point 0. */
AMG_API amg_status amg_pi1_generators(const amg_poset* p, size_t* out);
AMG_API void amg_poset_free(amg_poset* p);

AMG_API amg_status amg_local_system_open(const char* path, amg_local_system** out);
/* Rank-1 system with the given loop scalars, one per generator. */
AMG_API amg_status amg_local_system_from_loops(const amg_poset* p, const char* field, const char* const* loops,
                                               size_t count, amg_local_system** out);
AMG_API amg_status amg_local_system_rank(const amg_local_system* l, size_t* out);
/* Entry of loop matrix k at point 0 in short form ("3", "-1/2", "1+2t"). */
AMG_API amg_status amg_monodromy_entry(const amg_local_system* l, size_t loop, size_t row, size_t col,
                                       const char** out);
AMG_API amg_status amg_local_hom_dimension(const amg_local_system* left, const amg_local_system* right,
                                           size_t* out);
AMG_API void amg_local_system_free(amg_local_system* l);

#ifdef __cplusplus
}
#endif

#endif /* AMALGAM_H */
