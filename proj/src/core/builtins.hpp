#pragma once
// Built-in families addressable by name. Each constructor re-derives the
// marching-scale expressions from the requested anchor, so the anchor can be
// swept without editing any expression text.

#include <string>
#include <vector>

#include "core/validator.hpp"

namespace isogeo4 {

struct BuiltinInfo {
  std::string name;
  std::string description;
  double default_t0 = 0, default_q0 = 0;
};

const std::vector<BuiltinInfo>& builtin_list();

bool is_builtin(const std::string& name);

// Family with its default anchor. Throws InvalidArgument for unknown names.
HypersurfaceFamily make_builtin(const std::string& name);
HypersurfaceFamily make_builtin(const std::string& name, double t0, double q0);

FamilyTemplate builtin_template(const std::string& name);

}  // namespace isogeo4
