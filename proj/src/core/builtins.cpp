#include "core/builtins.hpp"

#include <charconv>

namespace isogeo4 {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kPi = 3.14159265358979323846;

std::string num(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::array<Expr, 4> parse_all(const std::array<std::string, 4>& texts, VarSet allowed) {
  return {Expr::parse(texts[0], allowed), Expr::parse(texts[1], allowed),
          Expr::parse(texts[2], allowed), Expr::parse(texts[3], allowed)};
}

// Helix-like curve (cos s / 2, sin s / 2, s/2, sqrt(2) s / 2) carrying a
// type I scale: u = (t-t0)(q-q0), v = 0, w = t-t0, x = q-q0.
HypersurfaceFamily make_example1(double t0, double q0) {
  Curve4 curve(parse_all({"0.5*cos(s)", "0.5*sin(s)", "0.5*s", "(sqrt(2)/2)*s"}, vars::only_s),
               0.0, kTwoPi);
  MarchingScale scale = MarchingScale::make_type1(
      parse_all({"1", "1", "1", "1"}, vars::only_s),
      parse_all({"(t - " + num(t0) + ")*(q - " + num(q0) + ")", "0", "t - " + num(t0),
                 "q - " + num(q0)},
                vars::tq));
  FamilyParams params;
  params.t0 = t0;
  params.q0 = q0;
  return HypersurfaceFamily(std::move(curve), std::move(scale), params);
}

// Curve (sin s / 2, cos s / 2, 0, sqrt(3) s / 2) with a type II scale:
// w = (s+t+1)(q-q0), x = (s+1)(t-t0).
HypersurfaceFamily make_example2(double t0, double q0) {
  Curve4 curve(parse_all({"0.5*sin(s)", "0.5*cos(s)", "0", "(sqrt(3)/2)*s"}, vars::only_s), 0.0,
               kTwoPi);
  MarchingScale scale = MarchingScale::make_type2(
      parse_all({"1", "1", "s + t + 1", "(s + 1)*(t - " + num(t0) + ")"}, vars::st),
      parse_all({"0", "0", "q - " + num(q0), "1"}, vars::only_q));
  FamilyParams params;
  params.t0 = t0;
  params.q0 = q0;
  return HypersurfaceFamily(std::move(curve), std::move(scale), params);
}

// Same curve on s in [pi, 3pi] with a type III scale:
// w = sin(s(q-q0)), x = s q^2 (t-t0). Requires q0 != 0 to pass.
HypersurfaceFamily make_example3(double t0, double q0) {
  Curve4 curve(parse_all({"0.5*sin(s)", "0.5*cos(s)", "0", "(sqrt(3)/2)*s"}, vars::only_s), kPi,
               3 * kPi);
  MarchingScale scale = MarchingScale::make_type3(
      parse_all({"1", "1", "sin(s*(q - " + num(q0) + "))", "s*q^2"}, vars::sq),
      parse_all({"0", "0", "1", "t - " + num(t0)}, vars::only_t));
  FamilyParams params;
  params.t0 = t0;
  params.q0 = q0;
  return HypersurfaceFamily(std::move(curve), std::move(scale), params);
}

}  // namespace

const std::vector<BuiltinInfo>& builtin_list() {
  static const std::vector<BuiltinInfo> list = {
      {"example1", "type I family on a helix-like curve in R4 (anchor t0=1/2, q0=0)", 0.5, 0.0},
      {"example2", "type II family, curve with a linear fourth coordinate (anchor t0=1/2, q0=0)",
       0.5, 0.0},
      {"example3", "type III family on s in [pi, 3pi]; passes only for q0 != 0 (anchor t0=1, q0=1)",
       1.0, 1.0},
  };
  return list;
}

bool is_builtin(const std::string& name) {
  for (const BuiltinInfo& b : builtin_list())
    if (b.name == name) return true;
  return false;
}

HypersurfaceFamily make_builtin(const std::string& name, double t0, double q0) {
  if (name == "example1") return make_example1(t0, q0);
  if (name == "example2") return make_example2(t0, q0);
  if (name == "example3") return make_example3(t0, q0);
  throw InvalidArgument("unknown builtin '" + name + "' (see the 'examples' command)");
}

HypersurfaceFamily make_builtin(const std::string& name) {
  for (const BuiltinInfo& b : builtin_list())
    if (b.name == name) return make_builtin(name, b.default_t0, b.default_q0);
  throw InvalidArgument("unknown builtin '" + name + "' (see the 'examples' command)");
}

FamilyTemplate builtin_template(const std::string& name) {
  if (!is_builtin(name))
    throw InvalidArgument("unknown builtin '" + name + "' (see the 'examples' command)");
  return FamilyTemplate{
      [name](double t0, double q0) { return make_builtin(name, t0, q0); }};
}

}  // namespace isogeo4
