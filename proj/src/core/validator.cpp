#include "core/validator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "core/parallel.hpp"

namespace isogeo4 {

namespace {

// Modified Gram-Schmidt with one reorthogonalization pass. Returns the
// orthonormal basis of span{a,b,c}; the caller guarantees full rank via the
// Gram determinant test.
std::array<Vec4, 3> orthonormal_basis(const Vec4& a, const Vec4& b, const Vec4& c) {
  std::array<Vec4, 3> raw = {a, b, c};
  std::array<Vec4, 3> basis{};
  for (int i = 0; i < 3; ++i) {
    Vec4 v = raw[static_cast<std::size_t>(i)];
    for (int pass = 0; pass < 2; ++pass)
      for (int j = 0; j < i; ++j)
        v = v - dot(v, basis[static_cast<std::size_t>(j)]) * basis[static_cast<std::size_t>(j)];
    basis[static_cast<std::size_t>(i)] = normalized(v);
  }
  return basis;
}

void add_reason(std::vector<std::string>& reasons, const char* code) {
  if (std::find(reasons.begin(), reasons.end(), code) == reasons.end())
    reasons.emplace_back(code);
}

}  // namespace

std::string ValidationReport::summary() const {
  std::string reason_list;
  for (const std::string& r : reasons) {
    reason_list += reason_list.empty() ? "" : ",";
    reason_list += r;
  }
  char buf[320];
  std::snprintf(buf, sizeof(buf),
                "%s n=%d isoparam=%.3g defect=%.3g accel=%.3g min|phi2|=%.3g "
                "max|phi3|=%.3g max|phi4|=%.3g singular=%d%s%s",
                passed ? "PASS" : "FAIL", n_samples, max_isoparam_residual,
                max_collinearity_defect, max_tangential_accel, min_abs_phi2, max_abs_phi3,
                max_abs_phi4, singular_samples, reason_list.empty() ? "" : " reasons=",
                reason_list.c_str());
  return buf;
}

ValidationReport validate(const HypersurfaceFamily& family, int n_samples,
                          const Thresholds& thresholds) {
  if (n_samples < 2) throw InvalidArgument("validate: n_samples >= 2 required");

  const Curve4& curve = family.curve();
  const FamilyParams& params = family.params();
  const std::vector<double> samples = uniform_samples(curve.s_min(), curve.s_max(), n_samples);

  ValidationReport rep;
  rep.n_samples = n_samples;
  rep.rows.resize(samples.size());
  std::vector<double> row_scale(samples.size(), 0.0);

  parallel_for(samples.size(), [&](std::size_t i) {
    const double s = samples[i];
    ValidationReport::Row row;
    row.s = s;

    const Vec4 p = family.eval_point(s, params.t0, params.q0);
    row.isoparam = norm(p - curve.position(s));

    const PhiTriple phi = family.phi_on_curve(s);
    row.phi2 = phi.phi2;
    row.phi3 = phi.phi3;
    row.phi4 = phi.phi4;

    const FamilyPartials d = family.partials(s, params.t0, params.q0);
    const FrenetApparatus fa = curve.frenet(s);
    for (double c : {dot(d.pt, fa.frame.n), dot(d.pq, fa.frame.n), dot(d.pt, fa.frame.b1),
                     dot(d.pq, fa.frame.b1), dot(d.pt, fa.frame.b2), dot(d.pq, fa.frame.b2)})
      row_scale[i] = std::max(row_scale[i], std::abs(c));

    const Vec4 nhat = triple_product(d.ps, d.pt, d.pq);
    // Gram identity: ||nhat||^2 equals the Gram determinant of the partials.
    const double gram_det = dot(nhat, nhat);
    const double gram_scale = dot(d.ps, d.ps) * dot(d.pt, d.pt) * dot(d.pq, d.pq);
    if (gram_det <= thresholds.gram_rel_floor * gram_scale || gram_scale == 0.0) {
      row.singular = true;
      rep.rows[i] = row;
      return;
    }

    const CurveJets jets = curve.derivatives(s);
    const Vec4 unit_normal_of_curve = jets.d2 / norm(jets.d2);  // N = r''/k1
    row.defect = 1.0 - std::abs(dot(nhat, unit_normal_of_curve)) / norm(nhat);

    const auto basis = orthonormal_basis(d.ps, d.pt, d.pq);
    Vec4 tangential{};
    for (const Vec4& e : basis) tangential = tangential + dot(jets.d2, e) * e;
    row.accel = norm(tangential);

    rep.rows[i] = row;
  });

  double min_phi2 = std::numeric_limits<double>::infinity();
  double partial_scale = 0;
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const auto& row = rep.rows[i];
    rep.max_isoparam_residual = std::max(rep.max_isoparam_residual, row.isoparam);
    min_phi2 = std::min(min_phi2, std::abs(row.phi2));
    rep.max_abs_phi3 = std::max(rep.max_abs_phi3, std::abs(row.phi3));
    rep.max_abs_phi4 = std::max(rep.max_abs_phi4, std::abs(row.phi4));
    partial_scale = std::max(partial_scale, row_scale[i]);
    if (row.singular) {
      ++rep.singular_samples;
    } else {
      rep.max_collinearity_defect = std::max(rep.max_collinearity_defect, row.defect);
      rep.max_tangential_accel = std::max(rep.max_tangential_accel, row.accel);
    }
  }
  rep.min_abs_phi2 = min_phi2;

  if (rep.max_isoparam_residual > thresholds.max_isoparam) add_reason(rep.reasons, "isoparam");
  if (rep.singular_samples > 0) add_reason(rep.reasons, "singular_tangent_space");
  if (rep.max_collinearity_defect > thresholds.max_collinearity)
    add_reason(rep.reasons, "collinearity");
  if (rep.max_tangential_accel > thresholds.max_tangential_accel)
    add_reason(rep.reasons, "tangential_accel");
  if (rep.max_abs_phi3 > thresholds.eps_zero) add_reason(rep.reasons, "phi3_nonzero");
  if (rep.max_abs_phi4 > thresholds.eps_zero) add_reason(rep.reasons, "phi4_nonzero");
  if (rep.min_abs_phi2 < thresholds.eps_nonzero * (1 + partial_scale * partial_scale))
    add_reason(rep.reasons, "phi2_zero");

  rep.passed = rep.reasons.empty();
  return rep;
}

std::vector<SweepRow> sweep_anchor(const FamilyTemplate& family_template,
                                   std::span<const double> t0_values,
                                   std::span<const double> q0_values, int n_samples,
                                   const Thresholds& thresholds) {
  std::vector<SweepRow> out;
  out.reserve(t0_values.size() * q0_values.size());
  for (double t0 : t0_values) {
    for (double q0 : q0_values) {
      SweepRow row;
      row.t0 = t0;
      row.q0 = q0;
      row.report = validate(family_template.make(t0, q0), n_samples, thresholds);
      out.push_back(std::move(row));
    }
  }
  return out;
}

}  // namespace isogeo4
