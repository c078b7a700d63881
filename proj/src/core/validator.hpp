#pragma once
// Geometry-level verification that the curve is a geodesic of a family
// member. Works from triple products and tangent-space projections, not from
// the phi cofactor algebra, so it cross-checks the condition checkers.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "core/family.hpp"

namespace isogeo4 {

struct Thresholds {
  double max_isoparam = 1e-9;
  double max_collinearity = 1e-9;      // 1 - |cos(angle(normal, N))|
  double max_tangential_accel = 1e-9;  // ||projection of r'' onto span{P_s,P_t,P_q}||
  double eps_zero = 1e-9;              // |phi3|, |phi4|
  double eps_nonzero = 1e-7;           // min |phi2|, scaled by partial magnitude
  double gram_rel_floor = 1e-14;       // singular tangent space detection
};

struct ValidationReport {
  bool passed = false;
  std::vector<std::string> reasons;
  int n_samples = 0;
  double max_isoparam_residual = 0;
  double max_collinearity_defect = 0;
  double max_tangential_accel = 0;
  double min_abs_phi2 = 0, max_abs_phi3 = 0, max_abs_phi4 = 0;
  int singular_samples = 0;

  struct Row {
    double s = 0;
    double isoparam = 0, defect = 0, accel = 0;
    double phi2 = 0, phi3 = 0, phi4 = 0;
    bool singular = false;
  };
  std::vector<Row> rows;

  // Single-line pass/fail summary for CI logs.
  std::string summary() const;
};

// Samples the curve uniformly and measures every statistic independently of
// check_isogeodesic. Throws DegenerateFrame if the curve frame is undefined;
// rank-deficient tangent spaces are recorded per sample, not thrown.
ValidationReport validate(const HypersurfaceFamily& family, int n_samples = 257,
                          const Thresholds& thresholds = {});

// A family constructor parameterized by the anchor, used for anchor sweeps.
struct FamilyTemplate {
  std::function<HypersurfaceFamily(double t0, double q0)> make;
};

struct SweepRow {
  double t0 = 0, q0 = 0;
  ValidationReport report;
};

// One validation per (t0, q0) pair, t0 varying slowest.
std::vector<SweepRow> sweep_anchor(const FamilyTemplate& family_template,
                                   std::span<const double> t0_values,
                                   std::span<const double> q0_values, int n_samples = 257,
                                   const Thresholds& thresholds = {});

}  // namespace isogeo4
