#include "core/scene.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace isogeo4 {

namespace {

// ---------------------------------------------------------------------------
// Minimal TOML reader: [tables], key = value with strings, numbers and
// arrays of numbers, '#' comments. Enough for the documented scene schema.

struct TomlValue {
  enum class Kind { Number, String, Array } kind = Kind::Number;
  double number = 0;
  std::string string;
  std::vector<double> array;
  int line = 0;
};

using TomlTable = std::map<std::string, TomlValue>;
using TomlDoc = std::map<std::string, TomlTable>;

[[noreturn]] void toml_fail(int line, const std::string& detail) {
  throw SchemaError("line " + std::to_string(line), detail);
}

std::string_view trim(std::string_view sv) {
  while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
  while (!sv.empty() && (sv.back() == ' ' || sv.back() == '\t' || sv.back() == '\r'))
    sv.remove_suffix(1);
  return sv;
}

// Strips a trailing comment, honoring '#' inside quoted strings.
std::string_view strip_comment(std::string_view line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (c == '"' && (i == 0 || line[i - 1] != '\\')) in_string = !in_string;
    if (c == '#' && !in_string) return line.substr(0, i);
  }
  return line;
}

bool parse_number(std::string_view text, double* out) {
  text = trim(text);
  if (text.empty()) return false;
  std::string buf(text);
  const char* begin = buf.c_str();
  const char* end = begin + buf.size();
  if (*begin == '+') ++begin;
  double v = 0;
  const auto res = std::from_chars(begin, end, v);
  if (res.ec != std::errc{} || res.ptr != end) return false;
  *out = v;
  return true;
}

std::string parse_string_literal(std::string_view text, int line) {
  if (text.size() < 2 || text.front() != '"' || text.back() != '"')
    toml_fail(line, "expected a double-quoted string");
  std::string out;
  for (std::size_t i = 1; i + 1 < text.size(); ++i) {
    char c = text[i];
    if (c == '\\') {
      if (i + 2 >= text.size()) toml_fail(line, "dangling escape in string");
      const char esc = text[++i];
      switch (esc) {
        case '"': c = '"'; break;
        case '\\': c = '\\'; break;
        case 'n': c = '\n'; break;
        case 't': c = '\t'; break;
        default: toml_fail(line, std::string("unsupported escape '\\") + esc + "'");
      }
    } else if (c == '"') {
      toml_fail(line, "unescaped '\"' inside string");
    }
    out.push_back(c);
  }
  return out;
}

TomlValue parse_value(std::string_view text, int line) {
  text = trim(text);
  TomlValue v;
  v.line = line;
  if (text.empty()) toml_fail(line, "missing value");
  if (text.front() == '"') {
    v.kind = TomlValue::Kind::String;
    v.string = parse_string_literal(text, line);
    return v;
  }
  if (text.front() == '[') {
    if (text.back() != ']') toml_fail(line, "unterminated array");
    v.kind = TomlValue::Kind::Array;
    std::string_view inner = trim(text.substr(1, text.size() - 2));
    while (!inner.empty()) {
      const std::size_t comma = inner.find(',');
      const std::string_view item =
          comma == std::string_view::npos ? inner : inner.substr(0, comma);
      double num = 0;
      if (!parse_number(item, &num)) toml_fail(line, "arrays may contain only numbers");
      v.array.push_back(num);
      if (comma == std::string_view::npos) break;
      inner = trim(inner.substr(comma + 1));
      if (inner.empty()) toml_fail(line, "trailing comma in array");
    }
    return v;
  }
  if (!parse_number(text, &v.number))
    toml_fail(line, "expected a string, number or array value");
  v.kind = TomlValue::Kind::Number;
  return v;
}

bool valid_key(std::string_view key) {
  if (key.empty()) return false;
  for (char c : key)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
  return true;
}

TomlDoc parse_toml(std::string_view text) {
  TomlDoc doc;
  std::string current_table;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    line = trim(strip_comment(line));
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') toml_fail(line_no, "unterminated table header");
      const std::string name(trim(line.substr(1, line.size() - 2)));
      if (!valid_key(name)) toml_fail(line_no, "invalid table name");
      if (doc.count(name)) toml_fail(line_no, "duplicate table [" + name + "]");
      doc[name];
      current_table = name;
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) toml_fail(line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    if (!valid_key(key)) toml_fail(line_no, "invalid key '" + key + "'");
    if (current_table.empty()) toml_fail(line_no, "key outside any [table]");
    TomlTable& table = doc[current_table];
    if (table.count(key))
      toml_fail(line_no, "duplicate key '" + key + "' in [" + current_table + "]");
    table[key] = parse_value(line.substr(eq + 1), line_no);
  }
  return doc;
}

// ---------------------------------------------------------------------------
// Schema layer with collected, key-path-tagged errors.

class SchemaReader {
 public:
  explicit SchemaReader(TomlDoc doc) : doc_(std::move(doc)) {}

  void error(const std::string& path, const std::string& detail) {
    errors_.push_back(path + ": " + detail);
  }

  bool has_table(const std::string& table) { return doc_.count(table) != 0; }

  void require_table(const std::string& table) {
    if (!has_table(table)) error("[" + table + "]", "missing required table");
  }

  const TomlValue* get(const std::string& table, const std::string& key) {
    consumed_.insert(table + "." + key);
    auto t = doc_.find(table);
    if (t == doc_.end()) return nullptr;
    auto k = t->second.find(key);
    if (k == t->second.end()) return nullptr;
    return &k->second;
  }

  std::optional<std::string> require_string(const std::string& table, const std::string& key) {
    const TomlValue* v = get(table, key);
    if (!v) {
      if (has_table(table)) error(path(table, key), "missing required key");
      return std::nullopt;
    }
    if (v->kind != TomlValue::Kind::String) {
      error(path(table, key), "expected a string");
      return std::nullopt;
    }
    return v->string;
  }

  std::optional<std::string> optional_string(const std::string& table, const std::string& key) {
    const TomlValue* v = get(table, key);
    if (!v) return std::nullopt;
    if (v->kind != TomlValue::Kind::String) {
      error(path(table, key), "expected a string");
      return std::nullopt;
    }
    return v->string;
  }

  std::optional<double> require_number(const std::string& table, const std::string& key) {
    const TomlValue* v = get(table, key);
    if (!v) {
      if (has_table(table)) error(path(table, key), "missing required key");
      return std::nullopt;
    }
    if (v->kind != TomlValue::Kind::Number) {
      error(path(table, key), "expected a number");
      return std::nullopt;
    }
    return v->number;
  }

  std::optional<double> optional_number(const std::string& table, const std::string& key) {
    const TomlValue* v = get(table, key);
    if (!v) return std::nullopt;
    if (v->kind != TomlValue::Kind::Number) {
      error(path(table, key), "expected a number");
      return std::nullopt;
    }
    return v->number;
  }

  std::optional<int> optional_count(const std::string& table, const std::string& key) {
    const std::optional<double> v = optional_number(table, key);
    if (!v) return std::nullopt;
    if (*v != std::floor(*v) || *v < 2 || *v > 1e7) {
      error(path(table, key), "expected an integer sample count >= 2");
      return std::nullopt;
    }
    return static_cast<int>(*v);
  }

  std::optional<std::pair<double, double>> require_interval(const std::string& table,
                                                            const std::string& key) {
    const TomlValue* v = get(table, key);
    if (!v) {
      if (has_table(table)) error(path(table, key), "missing required key");
      return std::nullopt;
    }
    if (v->kind != TomlValue::Kind::Array || v->array.size() != 2) {
      error(path(table, key), "expected an array [lo, hi] of two numbers");
      return std::nullopt;
    }
    return std::make_pair(v->array[0], v->array[1]);
  }

  std::optional<Expr> require_expr(const std::string& table, const std::string& key,
                                   VarSet allowed) {
    const std::optional<std::string> text = require_string(table, key);
    if (!text) return std::nullopt;
    try {
      return Expr::parse(*text, allowed);
    } catch (const UnknownIdentifier& e) {
      error(path(table, key), e.what());
    } catch (const SyntaxError& e) {
      error(path(table, key), e.what());
    }
    return std::nullopt;
  }

  // Call after consuming everything the schema knows about.
  void reject_unknown(const std::set<std::string>& known_tables) {
    for (const auto& [table, entries] : doc_) {
      if (!known_tables.count(table)) {
        error("[" + table + "]", "unknown table");
        continue;
      }
      for (const auto& [key, value] : entries) {
        if (!consumed_.count(table + "." + key)) error(path(table, key), "unknown key");
      }
    }
  }

  void throw_if_failed() const {
    if (errors_.empty()) return;
    std::string message = "scene validation failed";
    for (const std::string& e : errors_) message += "\n  " + e;
    const std::size_t colon = errors_.front().find(':');
    throw SchemaError(errors_.front().substr(0, colon), message);
  }

  bool ok() const { return errors_.empty(); }

  static std::string path(const std::string& table, const std::string& key) {
    return "[" + table + "]." + key;
  }

 private:
  TomlDoc doc_;
  std::vector<std::string> errors_;
  std::set<std::string> consumed_;
};

struct MarchingVarSets {
  VarSet s_side, cross_side;
};

MarchingVarSets var_sets_for(MarchingType type) {
  switch (type) {
    case MarchingType::TypeI: return {vars::only_s, vars::tq};
    case MarchingType::TypeII: return {vars::st, vars::only_q};
    case MarchingType::TypeIII: return {vars::sq, vars::only_t};
    default: return {vars::stq, vars::stq};
  }
}

}  // namespace

Scene load_scene(std::string_view text) {
  SchemaReader reader(parse_toml(text));

  reader.require_table("curve");
  reader.require_table("marching");
  reader.require_table("anchor");

  // [curve]
  std::array<std::optional<Expr>, 4> curve_components;
  const char* comp_keys[4] = {"x1", "x2", "x3", "x4"};
  for (int i = 0; i < 4; ++i)
    curve_components[static_cast<std::size_t>(i)] =
        reader.require_expr("curve", comp_keys[i], vars::only_s);
  auto s_range = reader.require_interval("curve", "s_range");
  if (s_range && !(s_range->first < s_range->second)) {
    reader.error("[curve].s_range", "L1 < L2 required");
    s_range.reset();
  }

  // [marching]
  std::optional<MarchingType> type;
  if (auto type_text = reader.require_string("marching", "type")) {
    if (*type_text == "general") type = MarchingType::General;
    else if (*type_text == "I") type = MarchingType::TypeI;
    else if (*type_text == "II") type = MarchingType::TypeII;
    else if (*type_text == "III") type = MarchingType::TypeIII;
    else reader.error("[marching].type", "expected \"general\", \"I\", \"II\" or \"III\"");
  }
  std::array<std::optional<Expr>, 4> direct, s_factor, cross_factor;
  if (type) {
    const MarchingVarSets sets = var_sets_for(*type);
    if (*type == MarchingType::General) {
      const char* keys[4] = {"u", "v", "w", "x"};
      for (int i = 0; i < 4; ++i)
        direct[static_cast<std::size_t>(i)] = reader.require_expr("marching", keys[i], vars::stq);
    } else {
      const char* s_keys[4] = {"l", "m", "n", "p"};
      const char* cross_keys[4] = {"U", "V", "W", "X"};
      for (int i = 0; i < 4; ++i) {
        s_factor[static_cast<std::size_t>(i)] =
            reader.require_expr("marching", s_keys[i], sets.s_side);
        cross_factor[static_cast<std::size_t>(i)] =
            reader.require_expr("marching", cross_keys[i], sets.cross_side);
      }
    }
  }

  // [anchor]
  const std::optional<double> t0 = reader.require_number("anchor", "t0");
  const std::optional<double> q0 = reader.require_number("anchor", "q0");
  auto t_range = reader.require_interval("anchor", "t_range");
  auto q_range = reader.require_interval("anchor", "q_range");
  if (t_range && !(t_range->first < t_range->second)) {
    reader.error("[anchor].t_range", "lo < hi required");
    t_range.reset();
  }
  if (q_range && !(q_range->first < q_range->second)) {
    reader.error("[anchor].q_range", "lo < hi required");
    q_range.reset();
  }
  if (t0 && t_range && (*t0 < t_range->first || *t0 > t_range->second))
    reader.error("[anchor].t0", "must lie inside t_range");
  if (q0 && q_range && (*q0 < q_range->first || *q0 > q_range->second))
    reader.error("[anchor].q0", "must lie inside q_range");

  // [grid] (optional)
  SceneGrid grid;
  grid.n_s = reader.optional_count("grid", "n_s");
  grid.n_t = reader.optional_count("grid", "n_t");
  grid.n_q = reader.optional_count("grid", "n_q");
  const std::optional<std::string> fix = reader.optional_string("grid", "fix");
  const std::optional<double> fix_value = reader.optional_number("grid", "fix_value");
  if (fix) {
    if (fix->size() != 1 || (*fix != "s" && *fix != "t" && *fix != "q"))
      reader.error("[grid].fix", "expected \"s\", \"t\" or \"q\"");
    else if (!fix_value)
      reader.error("[grid].fix_value", "required when fix is present");
    else
      grid.fixed = std::make_pair((*fix)[0], *fix_value);
  } else if (fix_value) {
    reader.error("[grid].fix_value", "meaningless without fix");
  }

  // [projection] (optional)
  Axis drop = Axis::W;
  if (auto drop_text = reader.optional_string("projection", "drop")) {
    if (drop_text->size() == 1 && std::string("xyzw").find((*drop_text)[0]) != std::string::npos)
      drop = axis_from_char((*drop_text)[0]);
    else
      reader.error("[projection].drop", "expected \"x\", \"y\", \"z\" or \"w\"");
  }

  // [output] (optional)
  const std::string out_obj = reader.optional_string("output", "obj").value_or("");
  const std::string out_csv = reader.optional_string("output", "csv").value_or("");
  const std::string out_report = reader.optional_string("output", "report").value_or("");

  reader.reject_unknown({"curve", "marching", "anchor", "grid", "projection", "output"});
  reader.throw_if_failed();

  // Everything validated; assemble. Construction errors (e.g. a fixed value
  // outside its range) still surface with a key path.
  std::array<Expr, 4> components;
  for (int i = 0; i < 4; ++i)
    components[static_cast<std::size_t>(i)] = std::move(*curve_components[static_cast<std::size_t>(i)]);
  Curve4 curve(std::move(components), s_range->first, s_range->second);

  MarchingScale scale;
  auto unwrap = [](std::array<std::optional<Expr>, 4>& in) {
    return std::array<Expr, 4>{std::move(*in[0]), std::move(*in[1]), std::move(*in[2]),
                               std::move(*in[3])};
  };
  switch (*type) {
    case MarchingType::General: scale = MarchingScale::make_general(unwrap(direct)); break;
    case MarchingType::TypeI:
      scale = MarchingScale::make_type1(unwrap(s_factor), unwrap(cross_factor));
      break;
    case MarchingType::TypeII:
      scale = MarchingScale::make_type2(unwrap(s_factor), unwrap(cross_factor));
      break;
    default: scale = MarchingScale::make_type3(unwrap(s_factor), unwrap(cross_factor)); break;
  }

  FamilyParams params;
  params.t0 = *t0;
  params.q0 = *q0;
  params.t_min = t_range->first;
  params.t_max = t_range->second;
  params.q_min = q_range->first;
  params.q_max = q_range->second;

  if (grid.fixed) {
    const auto [fp, fv] = *grid.fixed;
    if (fp == 's' && (fv < curve.s_min() || fv > curve.s_max()))
      throw SchemaError("[grid].fix_value", "outside the curve s_range");
    if (fp == 't' && (fv < params.t_min || fv > params.t_max))
      throw SchemaError("[grid].fix_value", "outside t_range");
    if (fp == 'q' && (fv < params.q_min || fv > params.q_max))
      throw SchemaError("[grid].fix_value", "outside q_range");
  }

  return Scene{HypersurfaceFamily(std::move(curve), std::move(scale), params), grid, drop,
               out_obj, out_csv, out_report};
}

Scene load_scene_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open scene file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("read of scene file '" + path + "' failed");
  return load_scene(buffer.str());
}

FamilyTemplate scene_template(const Scene& scene) {
  const HypersurfaceFamily family = scene.family;
  return FamilyTemplate{[family](double t0, double q0) {
    FamilyParams params = family.params();
    params.t0 = t0;
    params.q0 = q0;
    return HypersurfaceFamily(family.curve(), family.marching(), params);
  }};
}

}  // namespace isogeo4
