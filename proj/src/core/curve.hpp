#pragma once
// Arc-length curves in R^4 and their Frenet apparatus: the frame {T, N, B1,
// B2} and the curvatures k1, k2, k3 obtained from the first four derivatives.

#include <array>

#include "core/expr.hpp"
#include "core/linalg4.hpp"

namespace isogeo4 {

struct CurveJets {
  Vec4 r, d1, d2, d3, d4;
};

struct FrenetApparatus {
  double s = 0;
  Frame4 frame;
  double k1 = 0, k2 = 0, k3 = 0;
  // Set when |k2| is below the torsion threshold; k3 is then reported as 0
  // because the quotient in its definition is no longer meaningful.
  bool k2_degenerate = false;
};

class Curve4 {
 public:
  // Components are expressions in s only; requires s_min < s_max.
  Curve4(std::array<Expr, 4> components, double s_min, double s_max);

  Vec4 position(double s) const;

  // r and its first four s-derivatives, assembled component-wise from jets.
  CurveJets derivatives(double s) const;

  // Frame and curvatures at s. T = r', k1 = ||r''||, N = r''/k1,
  // B2 = (r' x r'' x r''') normalized, B1 = B2 x T x N,
  // k2 = (B1 . r''')/k1, k3 = (B2 . r'''')/(k1 k2).
  // Throws DegenerateFrame when k1 or the triple product vanish.
  FrenetApparatus frenet(double s, double eps_k = 1e-12) const;

  // Max deviation of ||r'(s)|| from 1 over uniform samples.
  double check_arclength(int n_samples) const;

  double s_min() const { return s_min_; }
  double s_max() const { return s_max_; }
  const Expr& component(int i) const { return components_[static_cast<std::size_t>(i)]; }

 private:
  std::array<Expr, 4> components_;
  double s_min_, s_max_;
};

// n uniform samples of [a, b] including both endpoints; n >= 2.
std::vector<double> uniform_samples(double a, double b, int n);

}  // namespace isogeo4
