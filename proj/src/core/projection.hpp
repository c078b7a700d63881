#pragma once
// Parallel projection of family members into 3-space by deleting one
// coordinate, plus grid meshing of parameter slices and volume sampling.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "core/family.hpp"

namespace isogeo4 {

struct Vec3 {
  double x = 0, y = 0, z = 0;
};

enum class Axis { X, Y, Z, W };

Axis axis_from_char(char c);  // throws InvalidArgument
char axis_to_char(Axis a);

// Removes the named coordinate, preserving the order of the other three.
Vec3 project_drop_axis(const Vec4& p, Axis axis);

struct GridSpec {
  int n_s = 65, n_t = 17, n_q = 17;
  // ('s'|'t'|'q', value): freeze one parameter for slicing.
  std::optional<std::pair<char, double>> fixed;
};

struct SurfaceMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<std::int32_t, 3>> triangles;
  // Vertex indices tracing the projected curve through the anchor of the
  // free parameter; empty for s-fixed slices.
  std::vector<std::int32_t> marked_polyline;
};

// Evaluates the family on the 2D grid left by the fixed parameter, projects
// every vertex, and splits each quad along the (i,j)->(i+1,j+1) diagonal.
// Throws DomainError if the fixed value is outside its declared range.
SurfaceMesh slice_to_mesh(const HypersurfaceFamily& family, const GridSpec& grid, Axis drop);

struct VolumeRow {
  double s = 0, t = 0, q = 0;
  Vec3 p;
};

// Full 3-parameter sampling, row-major with s outermost and q innermost.
std::vector<VolumeRow> sample_volume(const HypersurfaceFamily& family, const GridSpec& grid,
                                     Axis drop);

}  // namespace isogeo4
