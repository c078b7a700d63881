#include "core/projection.hpp"

#include <cmath>
#include <string>

#include "core/parallel.hpp"

namespace isogeo4 {

Axis axis_from_char(char c) {
  switch (c) {
    case 'x': return Axis::X;
    case 'y': return Axis::Y;
    case 'z': return Axis::Z;
    case 'w': return Axis::W;
    default: throw InvalidArgument(std::string("unknown projection axis '") + c + "'");
  }
}

char axis_to_char(Axis a) {
  switch (a) {
    case Axis::X: return 'x';
    case Axis::Y: return 'y';
    case Axis::Z: return 'z';
    default: return 'w';
  }
}

Vec3 project_drop_axis(const Vec4& p, Axis axis) {
  switch (axis) {
    case Axis::X: return {p.y, p.z, p.w};
    case Axis::Y: return {p.x, p.z, p.w};
    case Axis::Z: return {p.x, p.y, p.w};
    default: return {p.x, p.y, p.z};
  }
}

namespace {

struct SliceLayout {
  char fixed_param = 0;
  double fixed_value = 0;
  // Row parameter varies slowest; for t/q-fixed slices rows run over s.
  std::vector<double> row_values, col_values;
  bool rows_are_s = false;
  double col_anchor = 0;  // anchor of the free column parameter
};

SliceLayout make_layout(const HypersurfaceFamily& family, const GridSpec& grid) {
  if (!grid.fixed) throw DomainError("slice_to_mesh requires one fixed parameter");
  const char fp = grid.fixed->first;
  const double fv = grid.fixed->second;
  const Curve4& curve = family.curve();
  const FamilyParams& params = family.params();

  SliceLayout lay;
  lay.fixed_param = fp;
  lay.fixed_value = fv;
  switch (fp) {
    case 't':
      if (fv < params.t_min || fv > params.t_max)
        throw DomainError("fixed t value outside the declared t range");
      lay.rows_are_s = true;
      lay.row_values = uniform_samples(curve.s_min(), curve.s_max(), grid.n_s);
      lay.col_values = uniform_samples(params.q_min, params.q_max, grid.n_q);
      lay.col_anchor = params.q0;
      break;
    case 'q':
      if (fv < params.q_min || fv > params.q_max)
        throw DomainError("fixed q value outside the declared q range");
      lay.rows_are_s = true;
      lay.row_values = uniform_samples(curve.s_min(), curve.s_max(), grid.n_s);
      lay.col_values = uniform_samples(params.t_min, params.t_max, grid.n_t);
      lay.col_anchor = params.t0;
      break;
    case 's':
      if (fv < curve.s_min() || fv > curve.s_max())
        throw DomainError("fixed s value outside the curve domain");
      lay.rows_are_s = false;
      lay.row_values = uniform_samples(params.t_min, params.t_max, grid.n_t);
      lay.col_values = uniform_samples(params.q_min, params.q_max, grid.n_q);
      break;
    default:
      throw InvalidArgument(std::string("unknown fixed parameter '") + fp + "'");
  }
  return lay;
}

Vec4 eval_slice_point(const HypersurfaceFamily& family, const SliceLayout& lay, double row,
                      double col) {
  switch (lay.fixed_param) {
    case 't': return family.eval_point(row, lay.fixed_value, col);
    case 'q': return family.eval_point(row, col, lay.fixed_value);
    default: return family.eval_point(lay.fixed_value, row, col);
  }
}

}  // namespace

SurfaceMesh slice_to_mesh(const HypersurfaceFamily& family, const GridSpec& grid, Axis drop) {
  const SliceLayout lay = make_layout(family, grid);
  const std::size_t rows = lay.row_values.size();
  const std::size_t cols = lay.col_values.size();

  SurfaceMesh mesh;
  mesh.vertices.resize(rows * cols);
  parallel_for(rows, [&](std::size_t i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const Vec4 p = eval_slice_point(family, lay, lay.row_values[i], lay.col_values[j]);
      mesh.vertices[i * cols + j] = project_drop_axis(p, drop);
    }
  });

  mesh.triangles.reserve(2 * (rows - 1) * (cols - 1));
  for (std::size_t i = 0; i + 1 < rows; ++i) {
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      const auto v00 = static_cast<std::int32_t>(i * cols + j);
      const auto v01 = static_cast<std::int32_t>(i * cols + j + 1);
      const auto v10 = static_cast<std::int32_t>((i + 1) * cols + j);
      const auto v11 = static_cast<std::int32_t>((i + 1) * cols + j + 1);
      mesh.triangles.push_back({v00, v10, v11});
      mesh.triangles.push_back({v00, v11, v01});
    }
  }

  if (lay.rows_are_s) {
    // Trace the free parameter's anchor line. Reuse grid vertices when the
    // anchor lies on a grid column; otherwise append dedicated vertices.
    std::ptrdiff_t anchor_col = -1;
    for (std::size_t j = 0; j < cols; ++j) {
      if (std::abs(lay.col_values[j] - lay.col_anchor) <=
          1e-12 * std::max(1.0, std::abs(lay.col_anchor))) {
        anchor_col = static_cast<std::ptrdiff_t>(j);
        break;
      }
    }
    mesh.marked_polyline.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) {
      if (anchor_col >= 0) {
        mesh.marked_polyline.push_back(
            static_cast<std::int32_t>(i * cols + static_cast<std::size_t>(anchor_col)));
      } else {
        const Vec4 p = eval_slice_point(family, lay, lay.row_values[i], lay.col_anchor);
        mesh.vertices.push_back(project_drop_axis(p, drop));
        mesh.marked_polyline.push_back(static_cast<std::int32_t>(mesh.vertices.size() - 1));
      }
    }
  }
  return mesh;
}

std::vector<VolumeRow> sample_volume(const HypersurfaceFamily& family, const GridSpec& grid,
                                     Axis drop) {
  if (grid.fixed) throw InvalidArgument("sample_volume takes no fixed parameter");
  const Curve4& curve = family.curve();
  const FamilyParams& params = family.params();
  const std::vector<double> ss = uniform_samples(curve.s_min(), curve.s_max(), grid.n_s);
  const std::vector<double> ts = uniform_samples(params.t_min, params.t_max, grid.n_t);
  const std::vector<double> qs = uniform_samples(params.q_min, params.q_max, grid.n_q);

  std::vector<VolumeRow> out(ss.size() * ts.size() * qs.size());
  parallel_for(ss.size(), [&](std::size_t i) {
    std::size_t k = i * ts.size() * qs.size();
    for (double t : ts) {
      for (double q : qs) {
        VolumeRow row;
        row.s = ss[i];
        row.t = t;
        row.q = q;
        row.p = project_drop_axis(family.eval_point(ss[i], t, q), drop);
        out[k++] = row;
      }
    }
  });
  return out;
}

}  // namespace isogeo4
