#include "core/linalg4.hpp"

#include <algorithm>

namespace isogeo4 {

Vec4 triple_product(const Vec4& u, const Vec4& v, const Vec4& w) {
  // 2x2 minors of the (u,v) rows. Each output cofactor is a combination of
  // these, so negating u<->v flips every intermediate exactly.
  const double d12 = u.x * v.y - u.y * v.x;
  const double d13 = u.x * v.z - u.z * v.x;
  const double d14 = u.x * v.w - u.w * v.x;
  const double d23 = u.y * v.z - u.z * v.y;
  const double d24 = u.y * v.w - u.w * v.y;
  const double d34 = u.z * v.w - u.w * v.z;

  const double m1 = w.y * d34 - w.z * d24 + w.w * d23;  // columns 2,3,4
  const double m2 = w.x * d34 - w.z * d14 + w.w * d13;  // columns 1,3,4
  const double m3 = w.x * d24 - w.y * d14 + w.w * d12;  // columns 1,2,4
  const double m4 = w.x * d23 - w.y * d13 + w.z * d12;  // columns 1,2,3

  return {m1, -m2, m3, -m4};
}

double gram_norm_identity_check(const Vec4& u, const Vec4& v, const Vec4& w) {
  const Vec4 p = triple_product(u, v, w);

  const double guu = dot(u, u), guv = dot(u, v), guw = dot(u, w);
  const double gvv = dot(v, v), gvw = dot(v, w);
  const double gww = dot(w, w);
  const double det_gram = guu * (gvv * gww - gvw * gvw) -
                          guv * (guv * gww - gvw * guw) +
                          guw * (guv * gvw - gvv * guw);

  return dot(p, p) - det_gram;
}

double frame_residual(const Frame4& f) {
  const Vec4 v[4] = {f.t, f.n, f.b1, f.b2};
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      const double target = (i == j) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(dot(v[i], v[j]) - target));
    }
  }
  return worst;
}

bool is_orthonormal_frame(const Frame4& f, double tol) {
  if (!(tol > 0)) throw InvalidArgument("is_orthonormal_frame: tol must be positive");
  return frame_residual(f) <= tol;
}

}  // namespace isogeo4
