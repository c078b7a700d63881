#include "core/report_tables.hpp"

#include <limits>

namespace isogeo4 {

namespace {
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
}

Table frenet_table(const Curve4& curve, std::span<const double> s_values, int* degenerate_rows) {
  Table t;
  t.columns = {"s",    "T1", "T2", "T3", "T4", "N1", "N2", "N3", "N4",
               "B1_1", "B1_2", "B1_3", "B1_4", "B2_1", "B2_2", "B2_3", "B2_4",
               "k1",   "k2", "k3", "k2_degenerate", "degenerate"};
  int degenerate = 0;
  for (double s : s_values) {
    std::vector<double> row;
    row.reserve(t.columns.size());
    row.push_back(s);
    try {
      const FrenetApparatus fa = curve.frenet(s);
      for (const Vec4& v : {fa.frame.t, fa.frame.n, fa.frame.b1, fa.frame.b2}) {
        row.push_back(v.x);
        row.push_back(v.y);
        row.push_back(v.z);
        row.push_back(v.w);
      }
      row.push_back(fa.k1);
      row.push_back(fa.k2);
      row.push_back(fa.k3);
      row.push_back(fa.k2_degenerate ? 1.0 : 0.0);
      row.push_back(0.0);
    } catch (const DegenerateFrame&) {
      ++degenerate;
      while (row.size() + 1 < t.columns.size()) row.push_back(kNan);
      row.push_back(1.0);
    }
    t.rows.push_back(std::move(row));
  }
  if (degenerate_rows) *degenerate_rows = degenerate;
  return t;
}

Table validation_table(const ValidationReport& report) {
  Table t;
  t.columns = {"i",    "s",    "isoparam_residual", "collinearity_defect", "tangential_accel",
               "phi2", "phi3", "phi4",              "singular"};
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& r = report.rows[i];
    t.rows.push_back({static_cast<double>(i), r.s, r.isoparam,
                      r.singular ? kNan : r.defect, r.singular ? kNan : r.accel, r.phi2, r.phi3,
                      r.phi4, r.singular ? 1.0 : 0.0});
  }
  t.rows.push_back({-1.0, kNan, report.max_isoparam_residual, report.max_collinearity_defect,
                    report.max_tangential_accel, report.min_abs_phi2, report.max_abs_phi3,
                    report.max_abs_phi4, static_cast<double>(report.singular_samples)});
  return t;
}

Table volume_table(std::span<const VolumeRow> rows) {
  Table t;
  t.columns = {"s", "t", "q", "px", "py", "pz"};
  for (const VolumeRow& r : rows) t.rows.push_back({r.s, r.t, r.q, r.p.x, r.p.y, r.p.z});
  return t;
}

Table sweep_table(std::span<const SweepRow> rows) {
  Table t;
  t.columns = {"t0",          "q0",        "pass",      "max_isoparam", "max_defect",
               "max_accel",   "min_phi2",  "max_phi3",  "max_phi4",     "singular_samples"};
  for (const SweepRow& r : rows) {
    t.rows.push_back({r.t0, r.q0, r.report.passed ? 1.0 : 0.0, r.report.max_isoparam_residual,
                      r.report.max_collinearity_defect, r.report.max_tangential_accel,
                      r.report.min_abs_phi2, r.report.max_abs_phi3, r.report.max_abs_phi4,
                      static_cast<double>(r.report.singular_samples)});
  }
  return t;
}

}  // namespace isogeo4
