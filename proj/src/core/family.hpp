#pragma once
// Hypersurface families P(s,t,q) = r(s) + u T + v N + w B1 + x B2 built on a
// curve's Frenet frame, together with the isoparametric / isogeodesic
// condition checkers for the general form and the three structured types of
// marching-scale functions.

#include <array>
#include <string>
#include <vector>

#include "core/curve.hpp"

namespace isogeo4 {

enum class MarchingType { General, TypeI, TypeII, TypeIII };

const char* marching_type_name(MarchingType t);

// The four coefficient functions u, v, w, x. The typed variants factor each
// coefficient into an s-side and a cross-parameter side:
//   type I   u = l(s)   U(t,q)     type II  u = l(s,t) U(q)
//   type III u = l(s,q) U(t)
struct MarchingScale {
  MarchingType type = MarchingType::General;
  std::array<Expr, 4> direct;        // u, v, w, x (general only)
  std::array<Expr, 4> s_factor;      // l, m, n, p
  std::array<Expr, 4> cross_factor;  // U, V, W, X

  static MarchingScale make_general(std::array<Expr, 4> uvwx);
  static MarchingScale make_type1(std::array<Expr, 4> lmnp, std::array<Expr, 4> uvwx);
  static MarchingScale make_type2(std::array<Expr, 4> lmnp, std::array<Expr, 4> uvwx);
  static MarchingScale make_type3(std::array<Expr, 4> lmnp, std::array<Expr, 4> uvwx);

  double value(int i, double s, double t, double q) const;
  Grad3 grad(int i, double s, double t, double q) const;
};

struct FamilyParams {
  double t0 = 0, q0 = 0;
  double t_min = 0, t_max = 1;
  double q_min = 0, q_max = 1;
};

// Surviving cofactors of the hypersurface normal along the curve, where the
// s-partials of all four coefficients vanish and P_s = T. The normal there
// decomposes as -phi2 N + phi3 B1 - phi4 B2.
struct PhiTriple {
  double phi2 = 0, phi3 = 0, phi4 = 0;
};

struct FamilyPartials {
  Vec4 ps, pt, pq;
};

struct ConditionReport {
  bool passed = false;
  std::vector<std::string> reasons;
  int n_samples = 0;
  double max_isoparam = 0;
  std::array<double, 4> max_component{};  // |u|,|v|,|w|,|x| at the anchor
  double min_abs_phi2 = 0, max_abs_phi3 = 0, max_abs_phi4 = 0;
  double eps_zero = 0, eps_nonzero = 0;  // effective thresholds applied
  std::vector<double> sample_s;
  std::vector<PhiTriple> sample_phi;
};

class HypersurfaceFamily {
 public:
  HypersurfaceFamily(Curve4 curve, MarchingScale marching, FamilyParams params);

  Vec4 eval_point(double s, double t, double q) const;

  // P_s via the Frenet expansion, P_t and P_q as frame-component gradients.
  FamilyPartials partials(double s, double t, double q) const;

  // Triple product of the partials; the zero vector marks a singular
  // parametrization point.
  Vec4 normal(double s, double t, double q) const;

  PhiTriple phi_on_curve(double s) const;

  // Max over uniform s-samples of ||P(s,t0,q0) - r(s)||; per-coefficient
  // maxima at the anchor are reported through the optional out argument.
  double check_isoparametric(int n_samples, std::array<double, 4>* per_component = nullptr) const;

  // Full isogeodesic condition: isoparametric residual and |phi3|, |phi4|
  // within eps_zero, |phi2| bounded below by eps_nonzero scaled with the
  // magnitude of the anchor partials.
  ConditionReport check_isogeodesic(int n_samples = 257, double eps_zero = 1e-9,
                                    double eps_nonzero = 1e-7) const;

  // Structured checker for typed marching scales; falls back to
  // check_isogeodesic for the general form.
  ConditionReport check_type_conditions(int n_samples = 257, double eps_zero = 1e-9,
                                        double eps_nonzero = 1e-7) const;

  const Curve4& curve() const { return curve_; }
  const MarchingScale& marching() const { return marching_; }
  const FamilyParams& params() const { return params_; }

 private:
  Curve4 curve_;
  MarchingScale marching_;
  FamilyParams params_;
};

// Necessary-and-sufficient conditions per marching-scale type, evaluated
// structurally on the factors. Throws WrongVariant for the general form.
ConditionReport check_type_conditions(const MarchingScale& m, const FamilyParams& p,
                                      double s_min, double s_max, int n_samples = 257,
                                      double eps_zero = 1e-9, double eps_nonzero = 1e-7);

}  // namespace isogeo4
