#pragma once
// Scene files: a TOML subset describing the curve, the marching-scale
// functions, the anchor, and optional grid / projection / output settings.
// The full schema with annotated examples lives in docs/scene_format.md.

#include <optional>
#include <string>

#include "core/projection.hpp"
#include "core/validator.hpp"

namespace isogeo4 {

struct SceneGrid {
  std::optional<int> n_s, n_t, n_q;
  std::optional<std::pair<char, double>> fixed;
};

struct Scene {
  HypersurfaceFamily family;
  SceneGrid grid;
  Axis drop = Axis::W;
  std::string out_obj, out_csv, out_report;
};

// Parses and validates a scene document. Throws SchemaError listing every
// violation with its key path; expression errors are attached to the key
// that holds the expression.
Scene load_scene(std::string_view text);

Scene load_scene_file(const std::string& path);  // adds IoError for file problems

// Anchor-moving template: rebuilds the family with the same expressions and
// domains but a different (t0, q0).
FamilyTemplate scene_template(const Scene& scene);

}  // namespace isogeo4
