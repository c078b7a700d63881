#pragma once

#include <cmath>

#include <doctest.h>

#include "core/linalg4.hpp"

namespace isogeo4::testing {

inline void check_close(double a, double b, double tol) {
  CHECK(std::abs(a - b) <= tol);
}

inline void check_vec4_close(const Vec4& a, const Vec4& b, double tol) {
  check_close(a.x, b.x, tol);
  check_close(a.y, b.y, tol);
  check_close(a.z, b.z, tol);
  check_close(a.w, b.w, tol);
}

inline double max_abs_diff(const Vec4& a, const Vec4& b) {
  const Vec4 d = a - b;
  return std::max(std::max(std::abs(d.x), std::abs(d.y)),
                  std::max(std::abs(d.z), std::abs(d.w)));
}

}  // namespace isogeo4::testing
