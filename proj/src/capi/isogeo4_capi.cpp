#include "isogeo4.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <span>
#include <string>

#include "core/builtins.hpp"
#include "core/obj_io.hpp"
#include "core/report_tables.hpp"
#include "core/scene.hpp"

using namespace isogeo4;

// Opaque handle bodies. A family remembers where it came from so anchor
// moves can re-derive builtin expressions.
struct ig4_family {
  Scene scene;
  std::string builtin;  // empty for scene-loaded families
};

struct ig4_table {
  Table table;
  std::string csv_cache;
};

struct ig4_report {
  ValidationReport report;
  std::string summary_cache;
};

struct ig4_mesh {
  SurfaceMesh mesh;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

ig4_status classify(std::exception_ptr ep) {
  try {
    std::rethrow_exception(ep);
  } catch (const UnknownIdentifier& e) {
    set_error(e.what());
    return IG4_ERR_SYNTAX;
  } catch (const SyntaxError& e) {
    set_error(e.what());
    return IG4_ERR_SYNTAX;
  } catch (const SchemaError& e) {
    set_error(e.what());
    return IG4_ERR_SCHEMA;
  } catch (const DomainError& e) {
    set_error(e.what());
    return IG4_ERR_DOMAIN;
  } catch (const DegenerateFrame& e) {
    set_error(e.what());
    return IG4_ERR_DEGENERATE;
  } catch (const WrongVariant& e) {
    set_error(e.what());
    return IG4_ERR_INVALID_ARG;
  } catch (const InvalidArgument& e) {
    set_error(e.what());
    return IG4_ERR_INVALID_ARG;
  } catch (const IoError& e) {
    set_error(e.what());
    return IG4_ERR_IO;
  } catch (const std::exception& e) {
    set_error(e.what());
    return IG4_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return IG4_ERR_INTERNAL;
  }
}

template <class Fn>
ig4_status guarded(Fn&& fn) {
  try {
    fn();
    return IG4_OK;
  } catch (...) {
    return classify(std::current_exception());
  }
}

ig4_status require(bool ok, const char* message) {
  if (ok) return IG4_OK;
  set_error(message);
  return IG4_ERR_INVALID_ARG;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Scene scene_around(HypersurfaceFamily family) {
  return Scene{std::move(family), SceneGrid{}, Axis::W, "", "", ""};
}

Thresholds to_core(const ig4_thresholds* t) {
  if (!t) return Thresholds{};
  Thresholds out;
  out.max_isoparam = t->max_isoparam;
  out.max_collinearity = t->max_collinearity;
  out.max_tangential_accel = t->max_tangential_accel;
  out.eps_zero = t->eps_zero;
  out.eps_nonzero = t->eps_nonzero;
  out.gram_rel_floor = t->gram_rel_floor;
  return out;
}

}  // namespace

extern "C" {

const char* ig4_status_name(ig4_status status) {
  switch (status) {
    case IG4_OK: return "ok";
    case IG4_ERR_INVALID_ARG: return "invalid_argument";
    case IG4_ERR_SYNTAX: return "syntax_error";
    case IG4_ERR_SCHEMA: return "schema_error";
    case IG4_ERR_DOMAIN: return "domain_error";
    case IG4_ERR_DEGENERATE: return "degenerate";
    case IG4_ERR_IO: return "io_error";
    default: return "internal_error";
  }
}

const char* ig4_last_error(void) { return g_last_error.c_str(); }

const char* ig4_version(void) { return "1.0.0"; }

void ig4_string_free(char* s) { std::free(s); }

/* ------------------------------------------------------------------ */

size_t ig4_builtin_count(void) { return builtin_list().size(); }

const char* ig4_builtin_name(size_t index) {
  const auto& list = builtin_list();
  return index < list.size() ? list[index].name.c_str() : nullptr;
}

const char* ig4_builtin_description(size_t index) {
  const auto& list = builtin_list();
  return index < list.size() ? list[index].description.c_str() : nullptr;
}

ig4_status ig4_family_builtin(const char* name, ig4_family** out) {
  if (auto st = require(name && out, "ig4_family_builtin: null argument")) return st;
  return guarded([&] { *out = new ig4_family{scene_around(make_builtin(name)), name}; });
}

ig4_status ig4_family_builtin_with_anchor(const char* name, double t0, double q0,
                                          ig4_family** out) {
  if (auto st = require(name && out, "ig4_family_builtin_with_anchor: null argument")) return st;
  return guarded([&] { *out = new ig4_family{scene_around(make_builtin(name, t0, q0)), name}; });
}

ig4_status ig4_family_from_scene_file(const char* path, ig4_family** out) {
  if (auto st = require(path && out, "ig4_family_from_scene_file: null argument")) return st;
  return guarded([&] { *out = new ig4_family{load_scene_file(path), ""}; });
}

ig4_status ig4_family_from_scene_text(const char* text, ig4_family** out) {
  if (auto st = require(text && out, "ig4_family_from_scene_text: null argument")) return st;
  return guarded([&] { *out = new ig4_family{load_scene(text), ""}; });
}

void ig4_family_free(ig4_family* family) { delete family; }

ig4_status ig4_family_set_anchor(ig4_family* family, double t0, double q0) {
  if (auto st = require(family != nullptr, "ig4_family_set_anchor: null family")) return st;
  return guarded([&] {
    if (!family->builtin.empty()) {
      family->scene.family = make_builtin(family->builtin, t0, q0);
    } else {
      family->scene.family = scene_template(family->scene).make(t0, q0);
    }
  });
}

double ig4_family_t0(const ig4_family* family) {
  return family ? family->scene.family.params().t0 : 0.0;
}

double ig4_family_q0(const ig4_family* family) {
  return family ? family->scene.family.params().q0 : 0.0;
}

void ig4_family_s_range(const ig4_family* family, double* s_min, double* s_max) {
  if (!family) return;
  if (s_min) *s_min = family->scene.family.curve().s_min();
  if (s_max) *s_max = family->scene.family.curve().s_max();
}

void ig4_family_grid(const ig4_family* family, int* n_s, int* n_t, int* n_q) {
  if (!family) return;
  if (n_s) *n_s = family->scene.grid.n_s.value_or(0);
  if (n_t) *n_t = family->scene.grid.n_t.value_or(0);
  if (n_q) *n_q = family->scene.grid.n_q.value_or(0);
}

int ig4_family_fixed(const ig4_family* family, char* param, double* value) {
  if (!family || !family->scene.grid.fixed) return 0;
  if (param) *param = family->scene.grid.fixed->first;
  if (value) *value = family->scene.grid.fixed->second;
  return 1;
}

char ig4_family_drop_axis(const ig4_family* family) {
  return family ? axis_to_char(family->scene.drop) : 'w';
}

const char* ig4_family_output_obj(const ig4_family* family) {
  return family ? family->scene.out_obj.c_str() : "";
}

const char* ig4_family_output_csv(const ig4_family* family) {
  return family ? family->scene.out_csv.c_str() : "";
}

const char* ig4_family_output_report(const ig4_family* family) {
  return family ? family->scene.out_report.c_str() : "";
}

/* ------------------------------------------------------------------ */

size_t ig4_table_rows(const ig4_table* table) { return table ? table->table.rows.size() : 0; }

size_t ig4_table_cols(const ig4_table* table) { return table ? table->table.columns.size() : 0; }

const char* ig4_table_column_name(const ig4_table* table, size_t col) {
  if (!table || col >= table->table.columns.size()) return nullptr;
  return table->table.columns[col].c_str();
}

double ig4_table_cell(const ig4_table* table, size_t row, size_t col) {
  if (!table || row >= table->table.rows.size() || col >= table->table.rows[row].size())
    return 0.0;
  return table->table.rows[row][col];
}

ig4_status ig4_table_write_csv(const ig4_table* table, const char* path) {
  if (auto st = require(table && path, "ig4_table_write_csv: null argument")) return st;
  return guarded([&] { write_csv_file(table->table, path); });
}

ig4_status ig4_table_csv_string(const ig4_table* table, char** out) {
  if (auto st = require(table && out, "ig4_table_csv_string: null argument")) return st;
  return guarded([&] {
    *out = dup_string(to_csv(table->table));
    if (!*out) throw Error("out of memory");
  });
}

void ig4_table_free(ig4_table* table) { delete table; }

/* ------------------------------------------------------------------ */

ig4_status ig4_frenet_table(const ig4_family* family, int n_samples, ig4_table** out,
                            int* degenerate_rows) {
  if (auto st = require(family && out, "ig4_frenet_table: null argument")) return st;
  return guarded([&] {
    const Curve4& curve = family->scene.family.curve();
    const auto samples = uniform_samples(curve.s_min(), curve.s_max(), n_samples);
    Table table = frenet_table(curve, samples, degenerate_rows);
    *out = new ig4_table{std::move(table), {}};
  });
}

ig4_status ig4_frenet_table_at(const ig4_family* family, const double* s_values, size_t count,
                               ig4_table** out, int* degenerate_rows) {
  if (auto st = require(family && out && (s_values || count == 0),
                        "ig4_frenet_table_at: null argument"))
    return st;
  return guarded([&] {
    Table table =
        frenet_table(family->scene.family.curve(), std::span(s_values, count), degenerate_rows);
    *out = new ig4_table{std::move(table), {}};
  });
}

/* ------------------------------------------------------------------ */

void ig4_thresholds_init(ig4_thresholds* thresholds) {
  if (!thresholds) return;
  const Thresholds d;
  thresholds->max_isoparam = d.max_isoparam;
  thresholds->max_collinearity = d.max_collinearity;
  thresholds->max_tangential_accel = d.max_tangential_accel;
  thresholds->eps_zero = d.eps_zero;
  thresholds->eps_nonzero = d.eps_nonzero;
  thresholds->gram_rel_floor = d.gram_rel_floor;
}

ig4_status ig4_validate(const ig4_family* family, int n_samples,
                        const ig4_thresholds* thresholds, ig4_report** out) {
  if (auto st = require(family && out, "ig4_validate: null argument")) return st;
  return guarded([&] {
    ValidationReport report = validate(family->scene.family, n_samples, to_core(thresholds));
    std::string summary = report.summary();
    *out = new ig4_report{std::move(report), std::move(summary)};
  });
}

int ig4_report_pass(const ig4_report* report) {
  return report && report->report.passed ? 1 : 0;
}

const char* ig4_report_summary(const ig4_report* report) {
  return report ? report->summary_cache.c_str() : "";
}

ig4_status ig4_report_table(const ig4_report* report, ig4_table** out) {
  if (auto st = require(report && out, "ig4_report_table: null argument")) return st;
  return guarded([&] {
    Table table = validation_table(report->report);
    *out = new ig4_table{std::move(table), {}};
  });
}

void ig4_report_free(ig4_report* report) { delete report; }

ig4_status ig4_sweep_anchors(const ig4_family* family, const double* t0_values, size_t t0_count,
                             const double* q0_values, size_t q0_count, int n_samples,
                             const ig4_thresholds* thresholds, ig4_table** out, int* failures) {
  if (auto st = require(family && out && (t0_values || t0_count == 0) &&
                            (q0_values || q0_count == 0),
                        "ig4_sweep_anchors: null argument"))
    return st;
  return guarded([&] {
    const FamilyTemplate tmpl = family->builtin.empty() ? scene_template(family->scene)
                                                        : builtin_template(family->builtin);
    const auto rows = sweep_anchor(tmpl, std::span(t0_values, t0_count),
                                   std::span(q0_values, q0_count), n_samples,
                                   to_core(thresholds));
    int failed = 0;
    for (const SweepRow& row : rows)
      if (!row.report.passed) ++failed;
    if (failures) *failures = failed;
    Table table = sweep_table(rows);
    *out = new ig4_table{std::move(table), {}};
  });
}

/* ------------------------------------------------------------------ */

ig4_status ig4_surface_mesh(const ig4_family* family, char fixed_param, double fixed_value,
                            char drop_axis, int n_s, int n_t, int n_q, ig4_mesh** out) {
  if (auto st = require(family && out, "ig4_surface_mesh: null argument")) return st;
  return guarded([&] {
    GridSpec grid;
    grid.n_s = n_s;
    grid.n_t = n_t;
    grid.n_q = n_q;
    grid.fixed = std::make_pair(fixed_param, fixed_value);
    SurfaceMesh mesh = slice_to_mesh(family->scene.family, grid, axis_from_char(drop_axis));
    *out = new ig4_mesh{std::move(mesh)};
  });
}

size_t ig4_mesh_vertex_count(const ig4_mesh* mesh) {
  return mesh ? mesh->mesh.vertices.size() : 0;
}

size_t ig4_mesh_triangle_count(const ig4_mesh* mesh) {
  return mesh ? mesh->mesh.triangles.size() : 0;
}

size_t ig4_mesh_polyline_length(const ig4_mesh* mesh) {
  return mesh ? mesh->mesh.marked_polyline.size() : 0;
}

ig4_status ig4_mesh_vertex(const ig4_mesh* mesh, size_t index, double* x, double* y, double* z) {
  if (auto st = require(mesh && index < mesh->mesh.vertices.size(),
                        "ig4_mesh_vertex: index out of range"))
    return st;
  const Vec3& v = mesh->mesh.vertices[index];
  if (x) *x = v.x;
  if (y) *y = v.y;
  if (z) *z = v.z;
  return IG4_OK;
}

ig4_status ig4_mesh_triangle(const ig4_mesh* mesh, size_t index, int* a, int* b, int* c) {
  if (auto st = require(mesh && index < mesh->mesh.triangles.size(),
                        "ig4_mesh_triangle: index out of range"))
    return st;
  const auto& tri = mesh->mesh.triangles[index];
  if (a) *a = tri[0];
  if (b) *b = tri[1];
  if (c) *c = tri[2];
  return IG4_OK;
}

ig4_status ig4_mesh_write_obj(const ig4_mesh* mesh, const char* path) {
  if (auto st = require(mesh && path, "ig4_mesh_write_obj: null argument")) return st;
  return guarded([&] { write_obj_file(mesh->mesh, path); });
}

ig4_status ig4_mesh_obj_string(const ig4_mesh* mesh, char** out) {
  if (auto st = require(mesh && out, "ig4_mesh_obj_string: null argument")) return st;
  return guarded([&] {
    *out = dup_string(to_obj(mesh->mesh));
    if (!*out) throw Error("out of memory");
  });
}

void ig4_mesh_free(ig4_mesh* mesh) { delete mesh; }

ig4_status ig4_volume_table(const ig4_family* family, char drop_axis, int n_s, int n_t, int n_q,
                            ig4_table** out) {
  if (auto st = require(family && out, "ig4_volume_table: null argument")) return st;
  return guarded([&] {
    GridSpec grid;
    grid.n_s = n_s;
    grid.n_t = n_t;
    grid.n_q = n_q;
    const auto rows = sample_volume(family->scene.family, grid, axis_from_char(drop_axis));
    Table table = volume_table(rows);
    *out = new ig4_table{std::move(table), {}};
  });
}

}  // extern "C"
