#pragma once

#include <string>

#include "freelie/eqn.hpp"

namespace freelie {

// On-disk documents. Lie systems carry the algebra parameters; equations and
// assignments are term-grammar strings.
//
// lie-system:   { "type": "lie-system", "field": "q", "rank": 3,
//                 "degree_cap": 24, "variables": [...],
//                 "equations": [{"lhs": "...", "rhs": "..."}], "mapping": {...}? }
// poly-system:  { "type": "poly-system", "field": "q", "variables": [...],
//                 "equations": [{"lhs": "u*u", "rhs": "w"}] }
// assignment:   { "type": "assignment", "assign": {"x_u": "b", ...} }

struct SystemDoc {
  int rank = 3;
  Field field = Field::rationals();
  int degree_cap = Algebra::kDefaultDegreeCap;
  std::vector<std::string> vars;
  std::vector<std::pair<std::string, std::string>> equations;
  std::string mapping_json;  // raw JSON object or empty
};

SystemDoc system_doc_from_json(const std::string& text);
std::string system_doc_to_json(const SystemDoc& doc);
EquationSystem parse_system(Algebra& alg, const SystemDoc& doc);
SystemDoc system_to_doc(const Algebra& alg, const EquationSystem& sys);

struct PolySystemDoc {
  Field field = Field::rationals();
  std::vector<std::string> vars;
  std::vector<std::pair<std::string, std::string>> equations;
};

PolySystemDoc poly_system_doc_from_json(const std::string& text);
std::string poly_system_doc_to_json(const PolySystemDoc& doc);
PolySystem parse_poly_system(const PolySystemDoc& doc);

Assignment assignment_from_json(Algebra& alg, const std::string& text);
std::string assignment_to_json(const Algebra& alg, const Assignment& sigma);

// Mapping block for compiled systems: per poly variable its lie-variable
// scheme, plus the multiplication auxiliaries.
std::string compiled_mapping_json(const CompiledSystem& compiled);

}  // namespace freelie
