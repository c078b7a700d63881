#pragma once
// Wavefront OBJ output: 'v' lines in vertex order, 1-based 'f' triangles,
// and the marked curve as an 'l' polyline element. 9 significant digits,
// '\n' endings, byte-identical output for identical input.

#include <iosfwd>
#include <string>

#include "core/projection.hpp"

namespace isogeo4 {

void write_obj(const SurfaceMesh& mesh, std::ostream& out);
std::string to_obj(const SurfaceMesh& mesh);
void write_obj_file(const SurfaceMesh& mesh, const std::string& path);  // throws IoError

}  // namespace isogeo4
