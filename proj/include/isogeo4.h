/* isogeo4 C API.
 *
 * Constructs parametric hypersurface families in R^4 that share a prescribed
 * arc-length curve as an isogeodesic (a geodesic that is also a parameter
 * curve), verifies the defining conditions numerically, and exports 3-space
 * projections as meshes and tables.
 *
 * Conventions:
 *  - Every fallible call returns an ig4_status; IG4_OK is 0.
 *  - On failure, ig4_last_error() returns a thread-local message describing
 *    the most recent error on the calling thread.
 *  - Objects are opaque handles created by ig4_* constructors and released
 *    by the matching ig4_*_free function. Handles are immutable except for
 *    ig4_family_set_anchor and safe to read from multiple threads.
 *  - Strings returned through char** out-parameters are heap copies owned by
 *    the caller; release them with ig4_string_free.
 */

#ifndef ISOGEO4_H
#define ISOGEO4_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(IG4_BUILD)
#define IG4_API __declspec(dllexport)
#else
#define IG4_API __declspec(dllimport)
#endif
#else
#define IG4_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ig4_status {
  IG4_OK = 0,
  IG4_ERR_INVALID_ARG = 1, /* bad handle, name, flag or parameter value */
  IG4_ERR_SYNTAX = 2,      /* expression text failed to parse */
  IG4_ERR_SCHEMA = 3,      /* scene document violates the schema */
  IG4_ERR_DOMAIN = 4,      /* evaluation outside a mathematical domain */
  IG4_ERR_DEGENERATE = 5,  /* Frenet frame or tangent space undefined */
  IG4_ERR_IO = 6,          /* file could not be read or written */
  IG4_ERR_INTERNAL = 7
} ig4_status;

IG4_API const char* ig4_status_name(ig4_status status);

/* Thread-local message for the most recent failure on this thread; empty
 * string if none. Valid until the next failing call on the same thread. */
IG4_API const char* ig4_last_error(void);

IG4_API const char* ig4_version(void);

IG4_API void ig4_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Families                                                             */

typedef struct ig4_family ig4_family;

/* Built-in example families: "example1", "example2", "example3". */
IG4_API size_t ig4_builtin_count(void);
IG4_API const char* ig4_builtin_name(size_t index);
IG4_API const char* ig4_builtin_description(size_t index);

IG4_API ig4_status ig4_family_builtin(const char* name, ig4_family** out);
IG4_API ig4_status ig4_family_builtin_with_anchor(const char* name, double t0, double q0,
                                                  ig4_family** out);

/* Scene documents; the TOML schema is described in docs/scene_format.md. */
IG4_API ig4_status ig4_family_from_scene_file(const char* path, ig4_family** out);
IG4_API ig4_status ig4_family_from_scene_text(const char* text, ig4_family** out);

IG4_API void ig4_family_free(ig4_family* family);

/* Moves the anchor. Built-in families re-derive their marching-scale
 * functions from the new anchor; scene families keep their expressions and
 * only move the evaluation point. */
IG4_API ig4_status ig4_family_set_anchor(ig4_family* family, double t0, double q0);

IG4_API double ig4_family_t0(const ig4_family* family);
IG4_API double ig4_family_q0(const ig4_family* family);
IG4_API void ig4_family_s_range(const ig4_family* family, double* s_min, double* s_max);

/* Scene-provided defaults (0 when the scene did not specify them). */
IG4_API void ig4_family_grid(const ig4_family* family, int* n_s, int* n_t, int* n_q);
IG4_API int ig4_family_fixed(const ig4_family* family, char* param, double* value);
IG4_API char ig4_family_drop_axis(const ig4_family* family);
IG4_API const char* ig4_family_output_obj(const ig4_family* family);
IG4_API const char* ig4_family_output_csv(const ig4_family* family);
IG4_API const char* ig4_family_output_report(const ig4_family* family);

/* ------------------------------------------------------------------ */
/* Tables (CSV-shaped numeric results)                                  */

typedef struct ig4_table ig4_table;

IG4_API size_t ig4_table_rows(const ig4_table* table);
IG4_API size_t ig4_table_cols(const ig4_table* table);
IG4_API const char* ig4_table_column_name(const ig4_table* table, size_t col);
IG4_API double ig4_table_cell(const ig4_table* table, size_t row, size_t col);
IG4_API ig4_status ig4_table_write_csv(const ig4_table* table, const char* path);
IG4_API ig4_status ig4_table_csv_string(const ig4_table* table, char** out);
IG4_API void ig4_table_free(ig4_table* table);

/* ------------------------------------------------------------------ */
/* Frenet apparatus                                                     */

/* One row per sample: s, T, N, B1, B2, k1, k2, k3, k2_degenerate,
 * degenerate. Rows where the frame is undefined carry NaN and a set
 * 'degenerate' flag; their count lands in *degenerate_rows. */
IG4_API ig4_status ig4_frenet_table(const ig4_family* family, int n_samples, ig4_table** out,
                                    int* degenerate_rows);
IG4_API ig4_status ig4_frenet_table_at(const ig4_family* family, const double* s_values,
                                       size_t count, ig4_table** out, int* degenerate_rows);

/* ------------------------------------------------------------------ */
/* Validation                                                           */

typedef struct ig4_thresholds {
  double max_isoparam;        /* ||P(s,t0,q0) - r(s)|| */
  double max_collinearity;    /* 1 - |cos(angle(normal, N))| */
  double max_tangential_accel;
  double eps_zero;            /* |phi3|, |phi4| */
  double eps_nonzero;         /* min |phi2| before magnitude scaling */
  double gram_rel_floor;      /* singular tangent-space detection */
} ig4_thresholds;

IG4_API void ig4_thresholds_init(ig4_thresholds* thresholds);

typedef struct ig4_report ig4_report;

/* thresholds may be NULL for defaults. */
IG4_API ig4_status ig4_validate(const ig4_family* family, int n_samples,
                                const ig4_thresholds* thresholds, ig4_report** out);
IG4_API int ig4_report_pass(const ig4_report* report);
IG4_API const char* ig4_report_summary(const ig4_report* report);
IG4_API ig4_status ig4_report_table(const ig4_report* report, ig4_table** out);
IG4_API void ig4_report_free(ig4_report* report);

/* One validation per (t0, q0) pair, t0 varying slowest; *failures counts the
 * failing anchors. */
IG4_API ig4_status ig4_sweep_anchors(const ig4_family* family, const double* t0_values,
                                     size_t t0_count, const double* q0_values, size_t q0_count,
                                     int n_samples, const ig4_thresholds* thresholds,
                                     ig4_table** out, int* failures);

/* ------------------------------------------------------------------ */
/* Meshes                                                               */

typedef struct ig4_mesh ig4_mesh;

/* Freezes fixed_param ('s', 't' or 'q') at fixed_value, samples the two free
 * parameters on an n_s x n_t x n_q grid (only the two relevant counts are
 * used), projects along drop_axis ('x'|'y'|'z'|'w'), and triangulates. */
IG4_API ig4_status ig4_surface_mesh(const ig4_family* family, char fixed_param,
                                    double fixed_value, char drop_axis, int n_s, int n_t,
                                    int n_q, ig4_mesh** out);

IG4_API size_t ig4_mesh_vertex_count(const ig4_mesh* mesh);
IG4_API size_t ig4_mesh_triangle_count(const ig4_mesh* mesh);
IG4_API size_t ig4_mesh_polyline_length(const ig4_mesh* mesh);
IG4_API ig4_status ig4_mesh_vertex(const ig4_mesh* mesh, size_t index, double* x, double* y,
                                   double* z);
IG4_API ig4_status ig4_mesh_triangle(const ig4_mesh* mesh, size_t index, int* a, int* b, int* c);
IG4_API ig4_status ig4_mesh_write_obj(const ig4_mesh* mesh, const char* path);
IG4_API ig4_status ig4_mesh_obj_string(const ig4_mesh* mesh, char** out);
IG4_API void ig4_mesh_free(ig4_mesh* mesh);

/* Full 3-parameter point cloud: columns s, t, q, px, py, pz; s outermost,
 * q innermost. */
IG4_API ig4_status ig4_volume_table(const ig4_family* family, char drop_axis, int n_s, int n_t,
                                    int n_q, ig4_table** out);

#ifdef __cplusplus
}
#endif

#endif /* ISOGEO4_H */
