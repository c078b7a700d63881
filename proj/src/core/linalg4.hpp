#pragma once
// 4D vector algebra: inner product, the ternary vector product defined by the
// formal determinant with basis row e1..e4, and orthonormal-frame checks.

#include <cmath>

#include "core/errors.hpp"

namespace isogeo4 {

struct Vec4 {
  double x = 0, y = 0, z = 0, w = 0;

  friend constexpr Vec4 operator+(const Vec4& a, const Vec4& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z, a.w + b.w};
  }
  friend constexpr Vec4 operator-(const Vec4& a, const Vec4& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z, a.w - b.w};
  }
  friend constexpr Vec4 operator*(double c, const Vec4& a) {
    return {c * a.x, c * a.y, c * a.z, c * a.w};
  }
  friend constexpr Vec4 operator*(const Vec4& a, double c) { return c * a; }
  friend constexpr Vec4 operator/(const Vec4& a, double c) {
    return {a.x / c, a.y / c, a.z / c, a.w / c};
  }
  constexpr Vec4 operator-() const { return {-x, -y, -z, -w}; }
};

constexpr double dot(const Vec4& a, const Vec4& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z + a.w * b.w;
}

inline double norm(const Vec4& a) { return std::sqrt(dot(a, a)); }

inline Vec4 normalized(const Vec4& a) {
  const double n = norm(a);
  if (n == 0.0) throw DomainError("cannot normalize a zero vector");
  return a / n;
}

// Ordered orthonormal frame: tangent, principal normal, first and second
// binormal.
struct Frame4 {
  Vec4 t, n, b1, b2;
};

// u (x) v (x) w: expansion of the formal 4x4 determinant along the basis row.
// Orthogonal to each argument, trilinear, and exactly antisymmetric (same
// floating-point products, signs flipped) under swapping u and v.
Vec4 triple_product(const Vec4& u, const Vec4& v, const Vec4& w);

// ||u(x)v(x)w||^2 - det Gram(u,v,w); identically zero in exact arithmetic.
double gram_norm_identity_check(const Vec4& u, const Vec4& v, const Vec4& w);

// Largest of the ten self/pairwise inner-product residuals of the frame.
double frame_residual(const Frame4& f);

// True iff every residual is within tol. tol must be positive.
bool is_orthonormal_frame(const Frame4& f, double tol = 1e-10);

}  // namespace isogeo4
