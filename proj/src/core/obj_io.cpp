#include "core/obj_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace isogeo4 {

void write_obj(const SurfaceMesh& mesh, std::ostream& out) {
  out << "# isogeo4 surface mesh\n";
  char buf[128];
  for (const Vec3& v : mesh.vertices) {
    std::snprintf(buf, sizeof(buf), "v %.9g %.9g %.9g\n", v.x, v.y, v.z);
    out << buf;
  }
  const auto n = static_cast<std::int32_t>(mesh.vertices.size());
  for (const auto& tri : mesh.triangles) {
    for (std::int32_t idx : tri)
      if (idx < 0 || idx >= n) throw InvalidArgument("write_obj: triangle index out of range");
    std::snprintf(buf, sizeof(buf), "f %d %d %d\n", tri[0] + 1, tri[1] + 1, tri[2] + 1);
    out << buf;
  }
  if (mesh.marked_polyline.size() >= 2) {
    out << 'l';
    for (std::int32_t idx : mesh.marked_polyline) {
      if (idx < 0 || idx >= n) throw InvalidArgument("write_obj: polyline index out of range");
      out << ' ' << (idx + 1);
    }
    out << '\n';
  }
  if (!out) throw IoError("write_obj: stream write failed");
}

std::string to_obj(const SurfaceMesh& mesh) {
  std::ostringstream oss;
  write_obj(mesh, oss);
  return oss.str();
}

void write_obj_file(const SurfaceMesh& mesh, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_obj(mesh, out);
  out.close();
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace isogeo4
