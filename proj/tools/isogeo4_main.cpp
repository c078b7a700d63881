// Command-line front end. Talks to the library exclusively through the
// public C API in isogeo4.h.
//
// Exit codes: 0 success, 1 validation failed, 2 usage or schema error,
// 3 numeric degeneracy.

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isogeo4.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

int exit_code_for(ig4_status status) {
  switch (status) {
    case IG4_OK: return kExitOk;
    case IG4_ERR_DEGENERATE: return kExitDegenerate;
    default: return kExitUsage;
  }
}

int report_error(const char* what, ig4_status status) {
  std::fprintf(stderr, "isogeo4: %s: %s (%s)\n", what, ig4_last_error(),
               ig4_status_name(status));
  return exit_code_for(status);
}

struct FamilyHandle {
  ig4_family* ptr = nullptr;
  ~FamilyHandle() { ig4_family_free(ptr); }
};

struct TableHandle {
  ig4_table* ptr = nullptr;
  ~TableHandle() { ig4_table_free(ptr); }
};

struct MeshHandle {
  ig4_mesh* ptr = nullptr;
  ~MeshHandle() { ig4_mesh_free(ptr); }
};

struct ReportHandle {
  ig4_report* ptr = nullptr;
  ~ReportHandle() { ig4_report_free(ptr); }
};

// Options shared by every subcommand that takes a family.
struct SourceOptions {
  std::string scene_path;
  std::string builtin;
  double t0 = 0, q0 = 0;
  bool has_t0 = false, has_q0 = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("scene", scene_path, "scene file (TOML, see docs/scene_format.md)");
    cmd->add_option("--builtin", builtin, "one of the built-in examples (see 'examples')");
    cmd->add_option("--t0", t0, "override the anchor t0")->each([this](const std::string&) {
      has_t0 = true;
    });
    cmd->add_option("--q0", q0, "override the anchor q0")->each([this](const std::string&) {
      has_q0 = true;
    });
  }

  // Returns 0 and fills handle, or an exit code.
  int open(FamilyHandle& handle) const {
    if (scene_path.empty() == builtin.empty()) {
      std::fprintf(stderr, "isogeo4: give exactly one of a scene file or --builtin NAME\n");
      return kExitUsage;
    }
    ig4_status st;
    if (!builtin.empty())
      st = ig4_family_builtin(builtin.c_str(), &handle.ptr);
    else
      st = ig4_family_from_scene_file(scene_path.c_str(), &handle.ptr);
    if (st != IG4_OK) return report_error("loading family", st);

    if (has_t0 || has_q0) {
      const double new_t0 = has_t0 ? t0 : ig4_family_t0(handle.ptr);
      const double new_q0 = has_q0 ? q0 : ig4_family_q0(handle.ptr);
      st = ig4_family_set_anchor(handle.ptr, new_t0, new_q0);
      if (st != IG4_OK) return report_error("setting anchor", st);
    }
    return 0;
  }
};

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    out.push_back(std::stod(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

int write_or_print_table(ig4_table* table, const std::string& out_path, const char* what) {
  if (out_path.empty()) {
    char* csv = nullptr;
    const ig4_status st = ig4_table_csv_string(table, &csv);
    if (st != IG4_OK) return report_error("formatting CSV", st);
    std::fputs(csv, stdout);
    ig4_string_free(csv);
    return 0;
  }
  const ig4_status st = ig4_table_write_csv(table, out_path.c_str());
  if (st != IG4_OK) return report_error("writing CSV", st);
  std::printf("wrote %s: %zu %s rows\n", out_path.c_str(), ig4_table_rows(table), what);
  return 0;
}

// ------------------------------------------------------------------
// frenet: frame vectors and curvatures along the curve.

struct FrenetArgs {
  SourceOptions source;
  int samples = 257;
  std::string at_list;
  std::string out_path;
};

int run_frenet(const FrenetArgs& args) {
  FamilyHandle family;
  if (int rc = args.source.open(family)) return rc;

  TableHandle table;
  int degenerate = 0;
  ig4_status st;
  if (!args.at_list.empty()) {
    std::vector<double> s_values;
    try {
      s_values = parse_list(args.at_list);
    } catch (const std::exception&) {
      std::fprintf(stderr, "isogeo4: --at expects a comma-separated list of numbers\n");
      return kExitUsage;
    }
    st = ig4_frenet_table_at(family.ptr, s_values.data(), s_values.size(), &table.ptr,
                             &degenerate);
  } else {
    st = ig4_frenet_table(family.ptr, args.samples, &table.ptr, &degenerate);
  }
  if (st != IG4_OK) return report_error("computing frames", st);

  if (int rc = write_or_print_table(table.ptr, args.out_path, "frame")) return rc;
  const std::size_t rows = ig4_table_rows(table.ptr);
  if (degenerate > 0)
    std::fprintf(stderr, "isogeo4: %d of %zu samples degenerate (k1 = 0: frame undefined)\n",
                 degenerate, rows);
  if (rows > 0 && static_cast<std::size_t>(degenerate) == rows) return kExitDegenerate;
  return 0;
}

// ------------------------------------------------------------------
// validate: isogeodesic verification and optional anchor sweeps.

struct ValidateArgs {
  SourceOptions source;
  int samples = 257;
  ig4_thresholds thresholds{};
  std::string report_path;
  std::string sweep_t0, sweep_q0;
};

int run_validate(const ValidateArgs& args) {
  FamilyHandle family;
  if (int rc = args.source.open(family)) return rc;

  if (!args.sweep_t0.empty() || !args.sweep_q0.empty()) {
    std::vector<double> t0s, q0s;
    try {
      t0s = args.sweep_t0.empty() ? std::vector<double>{ig4_family_t0(family.ptr)}
                                  : parse_list(args.sweep_t0);
      q0s = args.sweep_q0.empty() ? std::vector<double>{ig4_family_q0(family.ptr)}
                                  : parse_list(args.sweep_q0);
    } catch (const std::exception&) {
      std::fprintf(stderr, "isogeo4: sweep lists must be comma-separated numbers\n");
      return kExitUsage;
    }
    TableHandle table;
    int failures = 0;
    const ig4_status st =
        ig4_sweep_anchors(family.ptr, t0s.data(), t0s.size(), q0s.data(), q0s.size(),
                          args.samples, &args.thresholds, &table.ptr, &failures);
    if (st != IG4_OK) return report_error("anchor sweep", st);
    if (!args.report_path.empty()) {
      if (int rc = write_or_print_table(table.ptr, args.report_path, "sweep")) return rc;
    }
    const std::size_t total = ig4_table_rows(table.ptr);
    std::printf("%s sweep: %zu of %zu anchors pass\n", failures == 0 ? "PASS" : "FAIL",
                total - static_cast<std::size_t>(failures), total);
    return failures == 0 ? kExitOk : kExitValidationFail;
  }

  ReportHandle report;
  const ig4_status st = ig4_validate(family.ptr, args.samples, &args.thresholds, &report.ptr);
  if (st != IG4_OK) return report_error("validation", st);

  std::string report_path = args.report_path;
  if (report_path.empty()) report_path = ig4_family_output_report(family.ptr);
  if (!report_path.empty()) {
    TableHandle table;
    const ig4_status tst = ig4_report_table(report.ptr, &table.ptr);
    if (tst != IG4_OK) return report_error("report table", tst);
    const ig4_status wst = ig4_table_write_csv(table.ptr, report_path.c_str());
    if (wst != IG4_OK) return report_error("writing report", wst);
  }
  std::printf("%s\n", ig4_report_summary(report.ptr));
  return ig4_report_pass(report.ptr) ? kExitOk : kExitValidationFail;
}

// ------------------------------------------------------------------
// surface: mesh one slice and write an OBJ.

struct SurfaceArgs {
  SourceOptions source;
  std::string fix_spec;  // "q=0.125"
  std::string drop_spec;
  std::string out_path;
  int n_s = 0, n_t = 0, n_q = 0;
};

int run_surface(const SurfaceArgs& args) {
  FamilyHandle family;
  if (int rc = args.source.open(family)) return rc;

  char fix_param = 0;
  double fix_value = 0;
  if (!args.fix_spec.empty()) {
    const std::size_t eq = args.fix_spec.find('=');
    if (args.fix_spec.size() < 3 || eq != 1 ||
        (args.fix_spec[0] != 's' && args.fix_spec[0] != 't' && args.fix_spec[0] != 'q')) {
      std::fprintf(stderr, "isogeo4: --fix expects s=VALUE, t=VALUE or q=VALUE\n");
      return kExitUsage;
    }
    fix_param = args.fix_spec[0];
    try {
      fix_value = std::stod(args.fix_spec.substr(2));
    } catch (const std::exception&) {
      std::fprintf(stderr, "isogeo4: --fix expects a numeric value\n");
      return kExitUsage;
    }
  } else if (!ig4_family_fixed(family.ptr, &fix_param, &fix_value)) {
    std::fprintf(stderr,
                 "isogeo4: no fixed parameter; give --fix or a [grid] fix in the scene\n");
    return kExitUsage;
  }

  char drop = ig4_family_drop_axis(family.ptr);
  if (!args.drop_spec.empty()) {
    if (args.drop_spec.size() != 1 ||
        std::string("xyzw").find(args.drop_spec[0]) == std::string::npos) {
      std::fprintf(stderr, "isogeo4: --drop expects one of x, y, z, w\n");
      return kExitUsage;
    }
    drop = args.drop_spec[0];
  }

  int n_s = 0, n_t = 0, n_q = 0;
  ig4_family_grid(family.ptr, &n_s, &n_t, &n_q);
  if (args.n_s > 0) n_s = args.n_s;
  if (args.n_t > 0) n_t = args.n_t;
  if (args.n_q > 0) n_q = args.n_q;
  if (n_s <= 0) n_s = 65;  // slice defaults: 65 x 17
  if (n_t <= 0) n_t = 17;
  if (n_q <= 0) n_q = 17;

  MeshHandle mesh;
  const ig4_status st =
      ig4_surface_mesh(family.ptr, fix_param, fix_value, drop, n_s, n_t, n_q, &mesh.ptr);
  if (st != IG4_OK) return report_error("meshing", st);

  std::string out_path = args.out_path;
  if (out_path.empty()) out_path = ig4_family_output_obj(family.ptr);
  if (out_path.empty()) out_path = "surface.obj";
  const ig4_status wst = ig4_mesh_write_obj(mesh.ptr, out_path.c_str());
  if (wst != IG4_OK) return report_error("writing OBJ", wst);

  std::printf("wrote %s: %zu vertices, %zu triangles, polyline %zu (fix %c=%.17g, drop %c)\n",
              out_path.c_str(), ig4_mesh_vertex_count(mesh.ptr),
              ig4_mesh_triangle_count(mesh.ptr), ig4_mesh_polyline_length(mesh.ptr), fix_param,
              fix_value, drop);
  return 0;
}

// ------------------------------------------------------------------
// volume: project the full 3-parameter block to a CSV point cloud.

struct VolumeArgs {
  SourceOptions source;
  std::string drop_spec;
  std::string out_path;
  int n_s = 0, n_t = 0, n_q = 0;
};

int run_volume(const VolumeArgs& args) {
  FamilyHandle family;
  if (int rc = args.source.open(family)) return rc;

  char drop = ig4_family_drop_axis(family.ptr);
  if (!args.drop_spec.empty()) {
    if (args.drop_spec.size() != 1 ||
        std::string("xyzw").find(args.drop_spec[0]) == std::string::npos) {
      std::fprintf(stderr, "isogeo4: --drop expects one of x, y, z, w\n");
      return kExitUsage;
    }
    drop = args.drop_spec[0];
  }

  int n_s = 0, n_t = 0, n_q = 0;
  ig4_family_grid(family.ptr, &n_s, &n_t, &n_q);
  if (args.n_s > 0) n_s = args.n_s;
  if (args.n_t > 0) n_t = args.n_t;
  if (args.n_q > 0) n_q = args.n_q;
  if (n_s <= 0) n_s = 33;  // volume defaults: 33 x 9 x 9
  if (n_t <= 0) n_t = 9;
  if (n_q <= 0) n_q = 9;

  TableHandle table;
  const ig4_status st = ig4_volume_table(family.ptr, drop, n_s, n_t, n_q, &table.ptr);
  if (st != IG4_OK) return report_error("sampling volume", st);

  std::string out_path = args.out_path;
  if (out_path.empty()) out_path = ig4_family_output_csv(family.ptr);
  if (out_path.empty()) out_path = "volume.csv";
  const ig4_status wst = ig4_table_write_csv(table.ptr, out_path.c_str());
  if (wst != IG4_OK) return report_error("writing CSV", wst);
  std::printf("wrote %s: %zu rows (drop %c)\n", out_path.c_str(), ig4_table_rows(table.ptr),
              drop);
  return 0;
}

int run_examples() {
  for (std::size_t i = 0; i < ig4_builtin_count(); ++i)
    std::printf("%-10s %s\n", ig4_builtin_name(i), ig4_builtin_description(i));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isogeo4: hypersurface families in R^4 sharing a prescribed isogeodesic curve"};
  app.require_subcommand(1);
  app.set_version_flag("--version", []() { return std::string(ig4_version()); });

  FrenetArgs frenet_args;
  CLI::App* frenet = app.add_subcommand(
      "frenet", "sample the Frenet frame and curvatures along the curve (CSV)");
  frenet_args.source.attach(frenet);
  frenet->add_option("--samples", frenet_args.samples, "uniform sample count")
      ->default_val(257)
      ->check(CLI::Range(2, 10000000));
  frenet->add_option("--at", frenet_args.at_list, "explicit comma-separated s values");
  frenet->add_option("--out", frenet_args.out_path, "CSV path (stdout when omitted)");

  ValidateArgs validate_args;
  ig4_thresholds_init(&validate_args.thresholds);
  CLI::App* validate = app.add_subcommand(
      "validate", "check that the curve is an isogeodesic of the family (exit 0/1)");
  validate_args.source.attach(validate);
  validate->add_option("--samples", validate_args.samples, "uniform sample count")
      ->default_val(257)
      ->check(CLI::Range(2, 10000000));
  validate->add_option("--eps-zero", validate_args.thresholds.eps_zero,
                       "tolerance for quantities that must vanish");
  validate->add_option("--eps-nonzero", validate_args.thresholds.eps_nonzero,
                       "scaled lower bound for |phi2|");
  validate->add_option("--max-isoparam", validate_args.thresholds.max_isoparam,
                       "max anchor residual ||P - r||");
  validate->add_option("--max-collinearity", validate_args.thresholds.max_collinearity,
                       "max collinearity defect of the normal");
  validate->add_option("--max-accel", validate_args.thresholds.max_tangential_accel,
                       "max tangential acceleration norm");
  validate->add_option("--report", validate_args.report_path, "write the per-sample CSV here");
  validate->add_option("--sweep-t0", validate_args.sweep_t0,
                       "comma-separated t0 anchors to sweep");
  validate->add_option("--sweep-q0", validate_args.sweep_q0,
                       "comma-separated q0 anchors to sweep");

  SurfaceArgs surface_args;
  CLI::App* surface = app.add_subcommand(
      "surface", "mesh one parameter slice and write a Wavefront OBJ with the marked curve");
  surface_args.source.attach(surface);
  surface->add_option("--fix", surface_args.fix_spec, "freeze one parameter, e.g. q=0.125");
  surface->add_option("--drop", surface_args.drop_spec, "coordinate to delete (x|y|z|w)");
  surface->add_option("--ns", surface_args.n_s, "s samples (default 65)");
  surface->add_option("--nt", surface_args.n_t, "t samples (default 17)");
  surface->add_option("--nq", surface_args.n_q, "q samples (default 17)");
  surface->add_option("--out", surface_args.out_path, "OBJ path (default surface.obj)");

  VolumeArgs volume_args;
  CLI::App* volume = app.add_subcommand(
      "volume", "sample the projected 3-parameter volume to a CSV point cloud");
  volume_args.source.attach(volume);
  volume->add_option("--drop", volume_args.drop_spec, "coordinate to delete (x|y|z|w)");
  volume->add_option("--ns", volume_args.n_s, "s samples (default 33)");
  volume->add_option("--nt", volume_args.n_t, "t samples (default 9)");
  volume->add_option("--nq", volume_args.n_q, "q samples (default 9)");
  volume->add_option("--out", volume_args.out_path, "CSV path (default volume.csv)");

  CLI::App* examples = app.add_subcommand("examples", "list the built-in example families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (frenet->parsed()) return run_frenet(frenet_args);
  if (validate->parsed()) return run_validate(validate_args);
  if (surface->parsed()) return run_surface(surface_args);
  if (volume->parsed()) return run_volume(volume_args);
  if (examples->parsed()) return run_examples();
  return kExitUsage;
}
