#include "freelie/json_io.hpp"

#include <json.hpp>

namespace freelie {

using json = nlohmann::ordered_json;

namespace {

json must_parse(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    raise(ErrorCode::parse, std::string(what) + ": malformed JSON document");
  return j;
}

std::string get_string(const json& j, const char* key, const char* what) {
  if (!j.contains(key) || !j[key].is_string())
    raise(ErrorCode::parse, std::string(what) + ": missing string field '" + key + "'");
  return j[key].get<std::string>();
}

std::vector<std::string> get_vars(const json& j, const char* what) {
  std::vector<std::string> vars;
  if (!j.contains("variables") || !j["variables"].is_array())
    raise(ErrorCode::parse, std::string(what) + ": missing 'variables' array");
  for (const auto& v : j["variables"]) {
    if (!v.is_string()) raise(ErrorCode::parse, std::string(what) + ": variables must be strings");
    vars.push_back(v.get<std::string>());
  }
  return vars;
}

std::vector<std::pair<std::string, std::string>> get_equations(const json& j, const char* what) {
  std::vector<std::pair<std::string, std::string>> eqs;
  if (!j.contains("equations") || !j["equations"].is_array())
    raise(ErrorCode::parse, std::string(what) + ": missing 'equations' array");
  for (const auto& e : j["equations"])
    eqs.emplace_back(get_string(e, "lhs", what), get_string(e, "rhs", what));
  return eqs;
}

}  // namespace

SystemDoc system_doc_from_json(const std::string& text) {
  json j = must_parse(text, "lie-system");
  if (j.value("type", "") != "lie-system")
    raise(ErrorCode::parse, "lie-system: expected \"type\": \"lie-system\"");
  SystemDoc doc;
  doc.field = Field::parse(get_string(j, "field", "lie-system"));
  doc.rank = j.value("rank", 3);
  doc.degree_cap = j.value("degree_cap", Algebra::kDefaultDegreeCap);
  doc.vars = get_vars(j, "lie-system");
  doc.equations = get_equations(j, "lie-system");
  if (j.contains("mapping")) doc.mapping_json = j["mapping"].dump();
  return doc;
}

std::string system_doc_to_json(const SystemDoc& doc) {
  json j;
  j["type"] = "lie-system";
  j["field"] = doc.field.str();
  j["rank"] = doc.rank;
  j["degree_cap"] = doc.degree_cap;
  j["variables"] = doc.vars;
  j["equations"] = json::array();
  for (const auto& [l, r] : doc.equations) j["equations"].push_back(json{{"lhs", l}, {"rhs", r}});
  if (!doc.mapping_json.empty()) j["mapping"] = must_parse(doc.mapping_json, "mapping");
  return j.dump(2);
}

EquationSystem parse_system(Algebra& alg, const SystemDoc& doc) {
  EquationSystem sys;
  sys.vars = doc.vars;
  std::set<std::string> vars(doc.vars.begin(), doc.vars.end());
  for (const auto& [l, r] : doc.equations)
    sys.equations.push_back({parse_term(alg, l, &vars), parse_term(alg, r, &vars)});
  return sys;
}

SystemDoc system_to_doc(const Algebra& alg, const EquationSystem& sys) {
  SystemDoc doc;
  doc.rank = alg.rank();
  doc.field = alg.field();
  doc.degree_cap = alg.degree_cap();
  doc.vars = sys.vars;
  for (const Equation& eq : sys.equations)
    doc.equations.emplace_back(print_term(alg, eq.lhs), print_term(alg, eq.rhs));
  return doc;
}

PolySystemDoc poly_system_doc_from_json(const std::string& text) {
  json j = must_parse(text, "poly-system");
  if (j.value("type", "") != "poly-system")
    raise(ErrorCode::parse, "poly-system: expected \"type\": \"poly-system\"");
  PolySystemDoc doc;
  doc.field = Field::parse(get_string(j, "field", "poly-system"));
  doc.vars = get_vars(j, "poly-system");
  doc.equations = get_equations(j, "poly-system");
  return doc;
}

std::string poly_system_doc_to_json(const PolySystemDoc& doc) {
  json j;
  j["type"] = "poly-system";
  j["field"] = doc.field.str();
  j["variables"] = doc.vars;
  j["equations"] = json::array();
  for (const auto& [l, r] : doc.equations) j["equations"].push_back(json{{"lhs", l}, {"rhs", r}});
  return j.dump(2);
}

PolySystem parse_poly_system(const PolySystemDoc& doc) {
  PolySystem sys;
  sys.field = doc.field;
  sys.vars = doc.vars;
  std::set<std::string> vars(doc.vars.begin(), doc.vars.end());
  for (const auto& [l, r] : doc.equations)
    sys.equations.push_back({parse_poly_term(doc.field, l, vars), parse_poly_term(doc.field, r, vars)});
  return sys;
}

Assignment assignment_from_json(Algebra& alg, const std::string& text) {
  json j = must_parse(text, "assignment");
  if (j.value("type", "") != "assignment")
    raise(ErrorCode::parse, "assignment: expected \"type\": \"assignment\"");
  if (!j.contains("assign") || !j["assign"].is_object())
    raise(ErrorCode::parse, "assignment: missing 'assign' object");
  Assignment sigma;
  for (const auto& [k, v] : j["assign"].items()) {
    if (!v.is_string()) raise(ErrorCode::parse, "assignment: values must be term strings");
    sigma.emplace(k, parse_element(alg, v.get<std::string>()));
  }
  return sigma;
}

std::string assignment_to_json(const Algebra& alg, const Assignment& sigma) {
  json j;
  j["type"] = "assignment";
  j["assign"] = json::object();
  for (const auto& [k, v] : sigma) j["assign"][k] = alg.str(v);
  return j.dump(2);
}

std::string compiled_mapping_json(const CompiledSystem& compiled) {
  json j;
  j["poly_variables"] = json::object();
  for (const std::string& v : compiled.flat.vars) {
    const PolyVarScheme& sc = compiled.var_map.at(v);
    j["poly_variables"][v] =
        json{{"x", sc.x}, {"y", sc.y}, {"z", sc.z}, {"z1", sc.z1}, {"z2", sc.z2}};
  }
  j["mul_aux"] = compiled.mul_aux;
  return j.dump();
}

}  // namespace freelie
