#include <algorithm>
#include <cctype>
#include <fstream>

#include "stiefel/cli.hpp"
#include "stiefel/parser.hpp"

namespace stiefel::cli {

using nlohmann::json;

namespace {

const json& field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw InputError(std::string("instance is missing \"") + key + "\"");
  return *it;
}

int positive_int(const json& doc, const char* key) {
  const json& v = field(doc, key);
  if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > 64)
    throw InputError(std::string("\"") + key + "\" must be a small positive integer");
  return v.get<int>();
}

Rational parse_r2(const json& v) {
  try {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
  } catch (const ParseError& e) {
    throw InputError(std::string("bad r2: ") + e.what());
  }
  throw InputError("\"r2\" must be an integer or a rational string such as \"7/2\"");
}

Polynomial parse_entry(const json& v, const Variables& vars, const std::string& where) {
  if (!v.is_string()) throw InputError(where + " must be a polynomial string");
  try {
    return parse_polynomial(v.get<std::string>(), vars);
  } catch (const ParseError& e) {
    throw InputError(where + " \"" + v.get<std::string>() + "\": " + e.what());
  }
}

}  // namespace

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 0xf];
  return out;
}

Instance parse_instance(const json& doc) {
  if (!doc.is_object()) throw InputError("instance must be a JSON object");
  Instance inst;
  std::string type;
  if (auto it = doc.find("type"); it != doc.end()) {
    if (!it->is_string()) throw InputError("\"type\" must be \"frame\" or \"map\"");
    type = it->get<std::string>();
  } else {
    type = doc.contains("components") ? "map" : "frame";
  }
  if (type != "frame" && type != "map") throw InputError("\"type\" must be \"frame\" or \"map\"");
  inst.kind = type == "frame" ? InstanceKind::frame : InstanceKind::map;

  const json& vars = field(doc, "vars");
  if (!vars.is_array()) throw InputError("\"vars\" must be an array of names");
  std::vector<std::string> names;
  for (const auto& v : vars) {
    if (!v.is_string()) throw InputError("\"vars\" must be an array of names");
    const std::string name = v.get<std::string>();
    bool ident = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_');
    for (char c : name) ident = ident && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    if (!ident) throw InputError("variable name \"" + name + "\" is not an identifier");
    if (std::find(names.begin(), names.end(), name) != names.end())
      throw InputError("variable \"" + name + "\" is listed twice");
    names.push_back(name);
  }
  try {
    inst.variables = make_variables(names);
  } catch (const Error& e) {
    throw InputError(std::string("bad variable list: ") + e.what());
  }
  inst.r2 = parse_r2(field(doc, "r2"));

  json canonical = {{"type", type}, {"vars", names}, {"r2", to_string(inst.r2)}};
  if (inst.kind == InstanceKind::frame) {
    inst.n = positive_int(doc, "n");
    inst.k = positive_int(doc, "k");
    const json& cols = field(doc, "columns");
    if (!cols.is_array() || cols.size() != static_cast<std::size_t>(inst.k))
      throw InputError("\"columns\" must hold k columns");
    std::vector<std::vector<Polynomial>> columns;
    json canon_cols = json::array();
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (!cols[j].is_array() || cols[j].size() != static_cast<std::size_t>(inst.n))
        throw InputError("column " + std::to_string(j + 1) + " must hold n entries");
      columns.emplace_back();
      json canon_col = json::array();
      for (std::size_t i = 0; i < cols[j].size(); ++i) {
        columns.back().push_back(parse_entry(
            cols[j][i], inst.variables, "column " + std::to_string(j + 1) + " entry " + std::to_string(i + 1)));
        canon_col.push_back(to_string(columns.back().back()));
      }
      canon_cols.push_back(std::move(canon_col));
    }
    inst.columns = PolyMatrix::from_columns(columns);
    canonical["n"] = inst.n;
    canonical["k"] = inst.k;
    canonical["columns"] = std::move(canon_cols);
  } else {
    inst.m = positive_int(doc, "m");
    const json& comps = field(doc, "components");
    if (!comps.is_array()) throw InputError("\"components\" must be an array of polynomial strings");
    json canon = json::array();
    for (std::size_t i = 0; i < comps.size(); ++i) {
      inst.components.push_back(parse_entry(comps[i], inst.variables, "component " + std::to_string(i + 1)));
      canon.push_back(to_string(inst.components.back()));
    }
    canonical["m"] = inst.m;
    canonical["components"] = std::move(canon);
  }
  inst.hash = fnv1a_hex(canonical.dump());
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("instance is not valid JSON: ") + e.what());
  }
  return parse_instance(doc);
}

FrameMapSpec frame_spec(const Instance& inst) {
  if (inst.kind == InstanceKind::map) return jacobian_frame(map_spec(inst));
  FrameMapSpec spec;
  spec.n = inst.n;
  spec.k = inst.k;
  spec.variables = inst.variables;
  spec.columns = inst.columns;
  spec.r2 = inst.r2;
  spec.validate();
  return spec;
}

SmoothMapSpec map_spec(const Instance& inst) {
  if (inst.kind != InstanceKind::map) throw InputError("this command needs a map instance (m, vars, components, r2)");
  SmoothMapSpec f{inst.m, inst.variables, inst.components, inst.r2};
  f.validate();
  return f;
}

PolyMatrix degeneracy_matrix(const Instance& inst) {
  if (inst.kind == InstanceKind::frame) {
    if (inst.variables->size() != static_cast<std::size_t>(inst.n - inst.k + 1) || inst.n <= inst.k)
      throw InvalidSpec("frame needs n > k and n - k + 1 variables");
    return inst.columns;
  }
  if (inst.variables->size() != static_cast<std::size_t>(inst.m) ||
      inst.components.size() != static_cast<std::size_t>(2 * inst.m - 1))
    throw InvalidSpec("map needs m variables and 2m - 1 components");
  std::vector<std::vector<Polynomial>> columns;
  for (std::size_t i = 0; i < inst.variables->size(); ++i) {
    columns.emplace_back();
    for (const auto& c : inst.components) columns.back().push_back(differentiate(c, i));
  }
  return PolyMatrix::from_columns(columns);
}

}  // namespace stiefel::cli
