#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "core/builtins.hpp"
#include "core/projection.hpp"
#include "support/closed_forms.hpp"

using namespace isogeo4;
using namespace isogeo4::testing;

namespace {

double diff3(const Vec3& a, const Vec3d& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

}  // namespace

TEST_CASE("dropping an axis keeps the other coordinates in order") {
  const Vec4 p{1, 2, 3, 4};
  const Vec3 no_w = project_drop_axis(p, Axis::W);
  CHECK(no_w.x == 1.0);
  CHECK(no_w.y == 2.0);
  CHECK(no_w.z == 3.0);
  const Vec3 no_z = project_drop_axis(p, Axis::Z);
  CHECK(no_z.x == 1.0);
  CHECK(no_z.y == 2.0);
  CHECK(no_z.z == 4.0);
  const Vec3 no_x = project_drop_axis(p, Axis::X);
  CHECK(no_x.x == 2.0);
  CHECK(no_x.y == 3.0);
  CHECK(no_x.z == 4.0);
  CHECK_THROWS_AS(axis_from_char('k'), InvalidArgument);
}

TEST_CASE("projection is linear") {
  const Vec4 a{0.25, -1, 3, 2}, b{5, 2, -0.5, 1};
  for (Axis axis : {Axis::X, Axis::Y, Axis::Z, Axis::W}) {
    const Vec3 lhs = project_drop_axis(a + b, axis);
    const Vec3 pa = project_drop_axis(a, axis);
    const Vec3 pb = project_drop_axis(b, axis);
    CHECK(lhs.x == pa.x + pb.x);
    CHECK(lhs.y == pa.y + pb.y);
    CHECK(lhs.z == pa.z + pb.z);
  }
}

TEST_CASE("example1 slice: counts and vertex values") {
  const HypersurfaceFamily f = make_builtin("example1");
  GridSpec grid;
  grid.n_s = 65;
  grid.n_t = 17;
  grid.fixed = std::make_pair('q', 0.125);
  const SurfaceMesh mesh = slice_to_mesh(f, grid, Axis::W);

  CHECK(mesh.vertices.size() == 65u * 17u);  // t0 = 1/2 lies on the grid
  CHECK(mesh.triangles.size() == 2u * 64u * 16u);
  CHECK(mesh.marked_polyline.size() == 65u);

  const auto ss = uniform_samples(0, f.curve().s_max(), 65);
  const auto ts = uniform_samples(0, 1, 17);
  double worst = 0;
  for (std::size_t i = 0; i < ss.size(); ++i)
    for (std::size_t j = 0; j < ts.size(); ++j)
      worst = std::max(worst, diff3(mesh.vertices[i * 17 + j], ex1_slice(ss[i], ts[j])));
  CHECK(worst <= 1e-12);
}

TEST_CASE("example2 slice matches its closed form") {
  const HypersurfaceFamily f = make_builtin("example2");
  GridSpec grid;
  grid.n_s = 65;
  grid.n_t = 17;
  grid.fixed = std::make_pair('q', 0.002);
  const SurfaceMesh mesh = slice_to_mesh(f, grid, Axis::W);
  const auto ss = uniform_samples(0, f.curve().s_max(), 65);
  const auto ts = uniform_samples(0, 1, 17);
  double worst = 0;
  for (std::size_t i = 0; i < ss.size(); ++i)
    for (std::size_t j = 0; j < ts.size(); ++j)
      worst = std::max(worst, diff3(mesh.vertices[i * 17 + j], ex2_slice(ss[i], ts[j])));
  CHECK(worst <= 1e-12);
}

TEST_CASE("example3 z-projection is independent of the fixed t") {
  const HypersurfaceFamily f = make_builtin("example3");
  GridSpec grid;
  grid.n_s = 33;
  grid.n_q = 9;
  grid.fixed = std::make_pair('t', 1.0);
  const SurfaceMesh at_t1 = slice_to_mesh(f, grid, Axis::Z);
  grid.fixed = std::make_pair('t', 0.25);
  const SurfaceMesh at_t025 = slice_to_mesh(f, grid, Axis::Z);
  REQUIRE(at_t1.vertices.size() == at_t025.vertices.size());
  for (std::size_t i = 0; i < at_t1.vertices.size(); ++i) {
    CHECK(at_t1.vertices[i].x == at_t025.vertices[i].x);
    CHECK(at_t1.vertices[i].y == at_t025.vertices[i].y);
    CHECK(at_t1.vertices[i].z == at_t025.vertices[i].z);
  }

  const auto ss = uniform_samples(f.curve().s_min(), f.curve().s_max(), 33);
  const auto qs = uniform_samples(0, 1, 9);
  double worst = 0;
  for (std::size_t i = 0; i < ss.size(); ++i)
    for (std::size_t j = 0; j < qs.size(); ++j)
      worst = std::max(worst, diff3(at_t1.vertices[i * 9 + j], ex3_slice(ss[i], qs[j])));
  CHECK(worst <= 1e-12);
}

TEST_CASE("triangulation is watertight over the grid interior") {
  const HypersurfaceFamily f = make_builtin("example1");
  GridSpec grid;
  grid.n_s = 9;
  grid.n_t = 7;
  grid.fixed = std::make_pair('q', 0.0);
  const SurfaceMesh mesh = slice_to_mesh(f, grid, Axis::W);

  std::map<std::pair<std::int32_t, std::int32_t>, int> edge_count;
  for (const auto& tri : mesh.triangles) {
    for (int e = 0; e < 3; ++e) {
      std::int32_t a = tri[static_cast<std::size_t>(e)];
      std::int32_t b = tri[static_cast<std::size_t>((e + 1) % 3)];
      if (a > b) std::swap(a, b);
      ++edge_count[{a, b}];
      CHECK(a != b);  // no degenerate triangles
    }
  }
  // Boundary edges appear once, interior edges exactly twice.
  for (const auto& [edge, count] : edge_count) CHECK((count == 1 || count == 2));
  int interior = 0;
  for (const auto& [edge, count] : edge_count)
    if (count == 2) ++interior;
  // Diagonals (R-1)(C-1) plus inner horizontal (R-2)(C-1) and inner
  // vertical (R-1)(C-2) grid edges, for R = 9 rows and C = 7 columns.
  const int expected_interior = 8 * 6 + 7 * 6 + 8 * 5;
  CHECK(interior == expected_interior);
}

TEST_CASE("the marked polyline lies on the mesh through the anchor slice") {
  const HypersurfaceFamily f = make_builtin("example1");
  GridSpec grid;
  grid.n_s = 33;
  grid.n_t = 17;
  grid.fixed = std::make_pair('q', 0.0);  // q0 = 0: slice passes through the anchor
  const SurfaceMesh mesh = slice_to_mesh(f, grid, Axis::W);
  REQUIRE(mesh.marked_polyline.size() == 33u);
  const auto ss = uniform_samples(0, f.curve().s_max(), 33);
  for (std::size_t i = 0; i < ss.size(); ++i) {
    const Vec3 v = mesh.vertices[static_cast<std::size_t>(mesh.marked_polyline[i])];
    const Vec4 r = f.curve().position(ss[i]);
    const Vec3 pr = project_drop_axis(r, Axis::W);
    CHECK(std::abs(v.x - pr.x) <= 1e-12);
    CHECK(std::abs(v.y - pr.y) <= 1e-12);
    CHECK(std::abs(v.z - pr.z) <= 1e-12);
    // On-grid anchor: the polyline reuses grid vertices.
    CHECK(mesh.marked_polyline[i] < static_cast<std::int32_t>(33 * 17));
  }
}

TEST_CASE("off-grid anchors get dedicated polyline vertices") {
  const HypersurfaceFamily f = make_builtin("example1", 0.3, 0.0);  // 0.3 not on a 17-grid
  GridSpec grid;
  grid.n_s = 9;
  grid.n_t = 17;
  grid.fixed = std::make_pair('q', 0.0);
  const SurfaceMesh mesh = slice_to_mesh(f, grid, Axis::W);
  CHECK(mesh.vertices.size() == 9u * 17u + 9u);
  CHECK(mesh.marked_polyline.size() == 9u);
  for (std::int32_t idx : mesh.marked_polyline)
    CHECK(idx >= static_cast<std::int32_t>(9 * 17));
}

TEST_CASE("s-fixed slices mesh the (t,q) sheet without a polyline") {
  const HypersurfaceFamily f = make_builtin("example1");
  GridSpec grid;
  grid.n_t = 5;
  grid.n_q = 7;
  grid.fixed = std::make_pair('s', 1.0);
  const SurfaceMesh mesh = slice_to_mesh(f, grid, Axis::W);
  CHECK(mesh.vertices.size() == 5u * 7u);
  CHECK(mesh.marked_polyline.empty());
}

TEST_CASE("slice errors") {
  const HypersurfaceFamily f = make_builtin("example1");
  GridSpec no_fix;
  CHECK_THROWS_AS(slice_to_mesh(f, no_fix, Axis::W), DomainError);
  GridSpec bad_value;
  bad_value.fixed = std::make_pair('q', 2.0);
  CHECK_THROWS_AS(slice_to_mesh(f, bad_value, Axis::W), DomainError);
  GridSpec tiny;
  tiny.n_s = 1;
  tiny.fixed = std::make_pair('q', 0.0);
  CHECK_THROWS_AS(slice_to_mesh(f, tiny, Axis::W), InvalidArgument);
}

TEST_CASE("volume sampling: ordering, anchor rows, slice consistency") {
  const HypersurfaceFamily f = make_builtin("example1");
  GridSpec grid;
  grid.n_s = 3;
  grid.n_t = 3;
  grid.n_q = 3;
  const auto rows = sample_volume(f, grid, Axis::W);
  CHECK(rows.size() == 27u);
  // Row-major: s outermost, q innermost.
  CHECK(rows[0].s == rows[8].s);
  CHECK(rows[0].q != rows[1].q);
  CHECK(rows[9].s > rows[8].s);

  GridSpec anchor_grid;
  anchor_grid.n_s = 9;
  anchor_grid.n_t = 9;  // t0 = 1/2 on-grid
  anchor_grid.n_q = 9;  // q0 = 0 on-grid
  const auto vol = sample_volume(f, anchor_grid, Axis::W);
  const auto ss = uniform_samples(0, f.curve().s_max(), 9);
  for (std::size_t i = 0; i < 9; ++i) {
    const VolumeRow& row = vol[i * 81 + 4 * 9 + 0];  // t index 4 = 0.5, q index 0 = 0
    CHECK(row.t == 0.5);
    CHECK(row.q == 0.0);
    const Vec3 pr = project_drop_axis(f.curve().position(ss[i]), Axis::W);
    CHECK(std::abs(row.p.x - pr.x) <= 1e-12);
    CHECK(std::abs(row.p.y - pr.y) <= 1e-12);
    CHECK(std::abs(row.p.z - pr.z) <= 1e-12);
  }

  // The q = 1/8 plane of a 9-point q grid matches the q = 1/8 slice mesh.
  GridSpec slice_grid;
  slice_grid.n_s = 9;
  slice_grid.n_t = 9;
  slice_grid.fixed = std::make_pair('q', 0.125);
  const SurfaceMesh mesh = slice_to_mesh(f, slice_grid, Axis::W);
  for (std::size_t i = 0; i < 9; ++i) {
    for (std::size_t j = 0; j < 9; ++j) {
      const VolumeRow& row = vol[i * 81 + j * 9 + 1];  // q index 1 = 1/8
      const Vec3& v = mesh.vertices[i * 9 + j];
      CHECK(row.p.x == v.x);
      CHECK(row.p.y == v.y);
      CHECK(row.p.z == v.z);
    }
  }

  GridSpec with_fix = grid;
  with_fix.fixed = std::make_pair('q', 0.0);
  CHECK_THROWS_AS(sample_volume(f, with_fix, Axis::W), InvalidArgument);
}
