#include "core/curve.hpp"

#include <algorithm>
#include <cmath>

namespace isogeo4 {

namespace {
constexpr double kTorsionEps = 1e-10;
}

Curve4::Curve4(std::array<Expr, 4> components, double s_min, double s_max)
    : components_(std::move(components)), s_min_(s_min), s_max_(s_max) {
  if (!(s_min < s_max)) throw InvalidArgument("curve domain requires s_min < s_max");
  for (const Expr& c : components_) {
    if (c.uses(Var::T) || c.uses(Var::Q))
      throw InvalidArgument("curve components may reference only s");
  }
}

Vec4 Curve4::position(double s) const {
  return {components_[0].eval(s, 0, 0), components_[1].eval(s, 0, 0),
          components_[2].eval(s, 0, 0), components_[3].eval(s, 0, 0)};
}

CurveJets Curve4::derivatives(double s) const {
  Jet4 j[4];
  for (int i = 0; i < 4; ++i) j[i] = components_[static_cast<std::size_t>(i)].eval_jet_s(s, 0, 0);
  CurveJets out;
  out.r = {j[0].v, j[1].v, j[2].v, j[3].v};
  out.d1 = {j[0].d1, j[1].d1, j[2].d1, j[3].d1};
  out.d2 = {j[0].d2, j[1].d2, j[2].d2, j[3].d2};
  out.d3 = {j[0].d3, j[1].d3, j[2].d3, j[3].d3};
  out.d4 = {j[0].d4, j[1].d4, j[2].d4, j[3].d4};
  return out;
}

FrenetApparatus Curve4::frenet(double s, double eps_k) const {
  const CurveJets d = derivatives(s);

  const double k1 = norm(d.d2);
  if (k1 <= eps_k)
    throw DegenerateFrame("k1 = 0: frame undefined at s = " + std::to_string(s));

  const Vec4 tp = triple_product(d.d1, d.d2, d.d3);
  const double tp_norm = norm(tp);
  if (tp_norm <= eps_k * norm(d.d1) * norm(d.d2) * norm(d.d3))
    throw DegenerateFrame("r', r'', r''' linearly dependent: B2 undefined at s = " +
                          std::to_string(s));

  FrenetApparatus fa;
  fa.s = s;
  fa.k1 = k1;
  // Renormalize every frame vector to absorb rounding.
  fa.frame.t = normalized(d.d1);
  fa.frame.n = d.d2 / k1;
  fa.frame.n = normalized(fa.frame.n);
  fa.frame.b2 = tp / tp_norm;
  fa.frame.b2 = normalized(fa.frame.b2);
  fa.frame.b1 = normalized(triple_product(fa.frame.b2, fa.frame.t, fa.frame.n));

  fa.k2 = dot(fa.frame.b1, d.d3) / k1;
  if (std::abs(fa.k2) <= kTorsionEps) {
    fa.k2_degenerate = true;
    fa.k3 = 0.0;
  } else {
    fa.k3 = dot(fa.frame.b2, d.d4) / (k1 * fa.k2);
  }
  return fa;
}

double Curve4::check_arclength(int n_samples) const {
  if (n_samples < 2) throw InvalidArgument("check_arclength: n_samples >= 2 required");
  double worst = 0.0;
  for (double s : uniform_samples(s_min_, s_max_, n_samples)) {
    const CurveJets d = derivatives(s);
    worst = std::max(worst, std::abs(norm(d.d1) - 1.0));
  }
  return worst;
}

std::vector<double> uniform_samples(double a, double b, int n) {
  if (n < 2) throw InvalidArgument("uniform_samples: n >= 2 required");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] =
        (i == n - 1) ? b : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  return out;
}

}  // namespace isogeo4
