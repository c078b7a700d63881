#include "core/family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace isogeo4 {

namespace {

const char* kSFactorNames[4] = {"l", "m", "n", "p"};
const char* kCrossNames[4] = {"U", "V", "W", "X"};

void require_vars(const Expr& e, VarSet allowed, const char* what) {
  static constexpr Var all[] = {Var::S, Var::T, Var::Q};
  static constexpr const char* names[] = {"s", "t", "q"};
  for (int i = 0; i < 3; ++i) {
    if (!allowed.contains(all[i]) && e.uses(all[i]))
      throw InvalidArgument(std::string(what) + " may not reference variable '" + names[i] + "'");
  }
}

// The six anchor partials of (v, w, x) in t and q, plus the coefficient
// values at the anchor, computed from the typed factors directly.
struct TypedPartials {
  double vt = 0, vq = 0, wt = 0, wq = 0, xt = 0, xq = 0;
  std::array<double, 4> coef{};
};

TypedPartials typed_anchor_partials(const MarchingScale& m, const FamilyParams& p, double s) {
  TypedPartials out;
  std::array<Grad3, 4> sf, cf;
  for (int i = 0; i < 4; ++i) {
    sf[static_cast<std::size_t>(i)] = m.s_factor[static_cast<std::size_t>(i)].eval_grad3(s, p.t0, p.q0);
    cf[static_cast<std::size_t>(i)] = m.cross_factor[static_cast<std::size_t>(i)].eval_grad3(s, p.t0, p.q0);
  }
  for (int i = 0; i < 4; ++i)
    out.coef[static_cast<std::size_t>(i)] =
        sf[static_cast<std::size_t>(i)].v * cf[static_cast<std::size_t>(i)].v;
  auto part = [&](int i, bool in_t) {
    const Grad3& a = sf[static_cast<std::size_t>(i)];
    const Grad3& b = cf[static_cast<std::size_t>(i)];
    return in_t ? a.dt * b.v + a.v * b.dt : a.dq * b.v + a.v * b.dq;
  };
  out.vt = part(1, true);
  out.vq = part(1, false);
  out.wt = part(2, true);
  out.wq = part(2, false);
  out.xt = part(3, true);
  out.xq = part(3, false);
  return out;
}

}  // namespace

const char* marching_type_name(MarchingType t) {
  switch (t) {
    case MarchingType::General: return "general";
    case MarchingType::TypeI: return "I";
    case MarchingType::TypeII: return "II";
    default: return "III";
  }
}

MarchingScale MarchingScale::make_general(std::array<Expr, 4> uvwx) {
  MarchingScale m;
  m.type = MarchingType::General;
  m.direct = std::move(uvwx);
  return m;
}

MarchingScale MarchingScale::make_type1(std::array<Expr, 4> lmnp, std::array<Expr, 4> uvwx) {
  MarchingScale m;
  m.type = MarchingType::TypeI;
  for (int i = 0; i < 4; ++i) {
    require_vars(lmnp[static_cast<std::size_t>(i)], vars::only_s, kSFactorNames[i]);
    require_vars(uvwx[static_cast<std::size_t>(i)], vars::tq, kCrossNames[i]);
  }
  m.s_factor = std::move(lmnp);
  m.cross_factor = std::move(uvwx);
  return m;
}

MarchingScale MarchingScale::make_type2(std::array<Expr, 4> lmnp, std::array<Expr, 4> uvwx) {
  MarchingScale m;
  m.type = MarchingType::TypeII;
  for (int i = 0; i < 4; ++i) {
    require_vars(lmnp[static_cast<std::size_t>(i)], vars::st, kSFactorNames[i]);
    require_vars(uvwx[static_cast<std::size_t>(i)], vars::only_q, kCrossNames[i]);
  }
  m.s_factor = std::move(lmnp);
  m.cross_factor = std::move(uvwx);
  return m;
}

MarchingScale MarchingScale::make_type3(std::array<Expr, 4> lmnp, std::array<Expr, 4> uvwx) {
  MarchingScale m;
  m.type = MarchingType::TypeIII;
  for (int i = 0; i < 4; ++i) {
    require_vars(lmnp[static_cast<std::size_t>(i)], vars::sq, kSFactorNames[i]);
    require_vars(uvwx[static_cast<std::size_t>(i)], vars::only_t, kCrossNames[i]);
  }
  m.s_factor = std::move(lmnp);
  m.cross_factor = std::move(uvwx);
  return m;
}

double MarchingScale::value(int i, double s, double t, double q) const {
  const auto idx = static_cast<std::size_t>(i);
  if (type == MarchingType::General) return direct[idx].eval(s, t, q);
  return s_factor[idx].eval(s, t, q) * cross_factor[idx].eval(s, t, q);
}

Grad3 MarchingScale::grad(int i, double s, double t, double q) const {
  const auto idx = static_cast<std::size_t>(i);
  if (type == MarchingType::General) return direct[idx].eval_grad3(s, t, q);
  const Grad3 a = s_factor[idx].eval_grad3(s, t, q);
  const Grad3 b = cross_factor[idx].eval_grad3(s, t, q);
  return {a.v * b.v, a.ds * b.v + a.v * b.ds, a.dt * b.v + a.v * b.dt, a.dq * b.v + a.v * b.dq};
}

HypersurfaceFamily::HypersurfaceFamily(Curve4 curve, MarchingScale marching, FamilyParams params)
    : curve_(std::move(curve)), marching_(std::move(marching)), params_(params) {
  if (!(params_.t_min < params_.t_max) || !(params_.q_min < params_.q_max))
    throw InvalidArgument("family parameter domains must be non-empty intervals");
  if (params_.t0 < params_.t_min || params_.t0 > params_.t_max)
    throw InvalidArgument("anchor t0 outside the t domain");
  if (params_.q0 < params_.q_min || params_.q0 > params_.q_max)
    throw InvalidArgument("anchor q0 outside the q domain");
}

Vec4 HypersurfaceFamily::eval_point(double s, double t, double q) const {
  const FrenetApparatus fa = curve_.frenet(s);
  const double u = marching_.value(0, s, t, q);
  const double v = marching_.value(1, s, t, q);
  const double w = marching_.value(2, s, t, q);
  const double x = marching_.value(3, s, t, q);
  return curve_.position(s) + u * fa.frame.t + v * fa.frame.n + w * fa.frame.b1 +
         x * fa.frame.b2;
}

FamilyPartials HypersurfaceFamily::partials(double s, double t, double q) const {
  const FrenetApparatus fa = curve_.frenet(s);
  const Grad3 u = marching_.grad(0, s, t, q);
  const Grad3 v = marching_.grad(1, s, t, q);
  const Grad3 w = marching_.grad(2, s, t, q);
  const Grad3 x = marching_.grad(3, s, t, q);

  const Frame4& f = fa.frame;
  FamilyPartials out;
  out.ps = (1 + u.ds - v.v * fa.k1) * f.t + (u.v * fa.k1 + v.ds - w.v * fa.k2) * f.n +
           (v.v * fa.k2 + w.ds - x.v * fa.k3) * f.b1 + (w.v * fa.k3 + x.ds) * f.b2;
  out.pt = u.dt * f.t + v.dt * f.n + w.dt * f.b1 + x.dt * f.b2;
  out.pq = u.dq * f.t + v.dq * f.n + w.dq * f.b1 + x.dq * f.b2;
  return out;
}

Vec4 HypersurfaceFamily::normal(double s, double t, double q) const {
  const FamilyPartials d = partials(s, t, q);
  return triple_product(d.ps, d.pt, d.pq);
}

PhiTriple HypersurfaceFamily::phi_on_curve(double s) const {
  const Grad3 v = marching_.grad(1, s, params_.t0, params_.q0);
  const Grad3 w = marching_.grad(2, s, params_.t0, params_.q0);
  const Grad3 x = marching_.grad(3, s, params_.t0, params_.q0);
  return {w.dt * x.dq - w.dq * x.dt, v.dt * x.dq - v.dq * x.dt, v.dt * w.dq - v.dq * w.dt};
}

double HypersurfaceFamily::check_isoparametric(int n_samples,
                                               std::array<double, 4>* per_component) const {
  if (n_samples < 2) throw InvalidArgument("check_isoparametric: n_samples >= 2 required");
  double residual = 0;
  std::array<double, 4> per{};
  for (double s : uniform_samples(curve_.s_min(), curve_.s_max(), n_samples)) {
    const Vec4 p = eval_point(s, params_.t0, params_.q0);
    residual = std::max(residual, norm(p - curve_.position(s)));
    for (int i = 0; i < 4; ++i)
      per[static_cast<std::size_t>(i)] =
          std::max(per[static_cast<std::size_t>(i)],
                   std::abs(marching_.value(i, s, params_.t0, params_.q0)));
  }
  if (per_component) *per_component = per;
  return residual;
}

ConditionReport HypersurfaceFamily::check_isogeodesic(int n_samples, double eps_zero,
                                                      double eps_nonzero) const {
  if (n_samples < 2) throw InvalidArgument("check_isogeodesic: n_samples >= 2 required");
  if (!(eps_zero > 0) || !(eps_nonzero > 0))
    throw InvalidArgument("check_isogeodesic: tolerances must be positive");

  ConditionReport rep;
  rep.n_samples = n_samples;
  rep.eps_zero = eps_zero;

  double min_phi2 = std::numeric_limits<double>::infinity();
  double max_phi3 = 0, max_phi4 = 0, scale = 0;
  for (double s : uniform_samples(curve_.s_min(), curve_.s_max(), n_samples)) {
    const Vec4 p = eval_point(s, params_.t0, params_.q0);
    rep.max_isoparam = std::max(rep.max_isoparam, norm(p - curve_.position(s)));
    for (int i = 0; i < 4; ++i)
      rep.max_component[static_cast<std::size_t>(i)] =
          std::max(rep.max_component[static_cast<std::size_t>(i)],
                   std::abs(marching_.value(i, s, params_.t0, params_.q0)));

    const Grad3 v = marching_.grad(1, s, params_.t0, params_.q0);
    const Grad3 w = marching_.grad(2, s, params_.t0, params_.q0);
    const Grad3 x = marching_.grad(3, s, params_.t0, params_.q0);
    for (double d : {v.dt, v.dq, w.dt, w.dq, x.dt, x.dq}) scale = std::max(scale, std::abs(d));

    const PhiTriple phi{w.dt * x.dq - w.dq * x.dt, v.dt * x.dq - v.dq * x.dt,
                        v.dt * w.dq - v.dq * w.dt};
    rep.sample_s.push_back(s);
    rep.sample_phi.push_back(phi);
    min_phi2 = std::min(min_phi2, std::abs(phi.phi2));
    max_phi3 = std::max(max_phi3, std::abs(phi.phi3));
    max_phi4 = std::max(max_phi4, std::abs(phi.phi4));
  }
  rep.min_abs_phi2 = min_phi2;
  rep.max_abs_phi3 = max_phi3;
  rep.max_abs_phi4 = max_phi4;
  rep.eps_nonzero = eps_nonzero * (1 + scale * scale);

  if (rep.max_isoparam > eps_zero) rep.reasons.push_back("isoparam");
  if (max_phi3 > eps_zero) rep.reasons.push_back("phi3_nonzero");
  if (max_phi4 > eps_zero) rep.reasons.push_back("phi4_nonzero");
  if (min_phi2 < rep.eps_nonzero) rep.reasons.push_back("phi2_zero");
  rep.passed = rep.reasons.empty();
  return rep;
}

ConditionReport HypersurfaceFamily::check_type_conditions(int n_samples, double eps_zero,
                                                          double eps_nonzero) const {
  if (marching_.type == MarchingType::General)
    return check_isogeodesic(n_samples, eps_zero, eps_nonzero);
  return isogeo4::check_type_conditions(marching_, params_, curve_.s_min(), curve_.s_max(),
                                        n_samples, eps_zero, eps_nonzero);
}

ConditionReport check_type_conditions(const MarchingScale& m, const FamilyParams& p,
                                      double s_min, double s_max, int n_samples,
                                      double eps_zero, double eps_nonzero) {
  if (m.type == MarchingType::General)
    throw WrongVariant("check_type_conditions: marching scale is the general form");
  if (n_samples < 2) throw InvalidArgument("check_type_conditions: n_samples >= 2 required");

  ConditionReport rep;
  rep.n_samples = n_samples;
  rep.eps_zero = eps_zero;
  auto fail = [&rep](std::string code) {
    if (std::find(rep.reasons.begin(), rep.reasons.end(), code) == rep.reasons.end())
      rep.reasons.push_back(std::move(code));
  };

  // Stats shared by all three variants, from the factorized anchor partials.
  const std::vector<double> samples = uniform_samples(s_min, s_max, n_samples);
  double min_phi2 = std::numeric_limits<double>::infinity();
  double max_phi3 = 0, max_phi4 = 0, scale = 0;
  std::vector<TypedPartials> per_sample;
  per_sample.reserve(samples.size());
  for (double s : samples) {
    const TypedPartials tp = typed_anchor_partials(m, p, s);
    per_sample.push_back(tp);
    for (double d : {tp.vt, tp.vq, tp.wt, tp.wq, tp.xt, tp.xq})
      scale = std::max(scale, std::abs(d));
    const PhiTriple phi{tp.wt * tp.xq - tp.wq * tp.xt, tp.vt * tp.xq - tp.vq * tp.xt,
                        tp.vt * tp.wq - tp.vq * tp.wt};
    rep.sample_s.push_back(s);
    rep.sample_phi.push_back(phi);
    min_phi2 = std::min(min_phi2, std::abs(phi.phi2));
    max_phi3 = std::max(max_phi3, std::abs(phi.phi3));
    max_phi4 = std::max(max_phi4, std::abs(phi.phi4));
    double coef_norm = 0;
    for (int i = 0; i < 4; ++i) {
      const double c = std::abs(tp.coef[static_cast<std::size_t>(i)]);
      rep.max_component[static_cast<std::size_t>(i)] =
          std::max(rep.max_component[static_cast<std::size_t>(i)], c);
      coef_norm += c * c;
    }
    rep.max_isoparam = std::max(rep.max_isoparam, std::sqrt(coef_norm));
  }
  rep.min_abs_phi2 = min_phi2;
  rep.max_abs_phi3 = max_phi3;
  rep.max_abs_phi4 = max_phi4;
  rep.eps_nonzero = eps_nonzero * (1 + scale * scale);

  if (m.type == MarchingType::TypeI) {
    std::array<Grad3, 4> cg;
    for (int i = 0; i < 4; ++i)
      cg[static_cast<std::size_t>(i)] =
          m.cross_factor[static_cast<std::size_t>(i)].eval_grad3(0, p.t0, p.q0);
    for (int i = 0; i < 4; ++i)
      if (std::abs(cg[static_cast<std::size_t>(i)].v) > eps_zero)
        fail(std::string("anchor_value:") + kCrossNames[i]);
    if (std::abs(cg[1].dt) > eps_zero || std::abs(cg[1].dq) > eps_zero) fail("v_partial");
    // l, m, n, p must not vanish anywhere on the s range.
    for (int i = 0; i < 4; ++i) {
      double lo = std::numeric_limits<double>::infinity(), hi = 0;
      for (double s : samples) {
        const double a = std::abs(m.s_factor[static_cast<std::size_t>(i)].eval(s, p.t0, p.q0));
        lo = std::min(lo, a);
        hi = std::max(hi, a);
      }
      if (lo < eps_nonzero * (1 + hi)) fail(std::string("factor_vanishes:") + kSFactorNames[i]);
    }
    const double cross_scale =
        std::max({std::abs(cg[2].dt), std::abs(cg[2].dq), std::abs(cg[3].dt), std::abs(cg[3].dq)});
    const double bracket = cg[2].dt * cg[3].dq - cg[2].dq * cg[3].dt;
    if (std::abs(bracket) < eps_nonzero * (1 + cross_scale * cross_scale)) fail("phi2_zero");
  } else {
    // Types II and III mirror each other with the roles of t and q swapped.
    const bool type2 = m.type == MarchingType::TypeII;
    const double anchor = type2 ? p.q0 : p.t0;
    auto cross_val_deriv = [&](int i) {
      const Grad3 g = m.cross_factor[static_cast<std::size_t>(i)].eval_grad3(0, anchor, anchor);
      return std::pair<double, double>(g.v, type2 ? g.dq : g.dt);
    };
    // U and V must vanish to first order at the anchor before the main
    // condition applies.
    bool preamble_ok = true;
    for (int i = 0; i < 2; ++i) {
      const auto [val, der] = cross_val_deriv(i);
      if (std::abs(val) > eps_zero || std::abs(der) > eps_zero) {
        fail(std::string("preamble:") + kCrossNames[i]);
        preamble_ok = false;
      }
    }
    if (preamble_ok) {
      // First line of the condition: n(s,.)W(.) and p(s,.)X(.) vanish along
      // the whole s range; coef[2] and coef[3] are exactly those products.
      for (const TypedPartials& tp : per_sample) {
        if (std::abs(tp.coef[2]) > eps_zero) fail("w_anchor_nonzero");
        if (std::abs(tp.coef[3]) > eps_zero) fail("x_anchor_nonzero");
      }
      // Second line: the nonvanishing bracket equals phi2 in factored form.
      if (min_phi2 < rep.eps_nonzero) fail("phi2_zero");
    }
  }

  rep.passed = rep.reasons.empty();
  return rep;
}

}  // namespace isogeo4
