#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "freelie/algebra.hpp"

namespace freelie {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// AST over the grammar
//   expr := gen | var | '[' expr ',' expr ']' | expr '+' expr | scalar '*' expr
// extended with binary '-', parentheses and the zero literal "0".
struct Term {
  enum class Kind { generator, variable, constant, bracket, sum, scale };

  Kind kind;
  int gen = -1;                  // generator
  std::string var;               // variable
  LieElement constant;           // constant
  TermPtr lhs, rhs;              // bracket
  std::vector<TermPtr> summands; // sum
  Scalar coeff;                  // scale, child in lhs

  static TermPtr make_gen(int index);
  static TermPtr make_var(std::string name);
  static TermPtr make_const(LieElement e);
  static TermPtr make_bracket(TermPtr l, TermPtr r);
  static TermPtr make_sum(std::vector<TermPtr> parts);
  static TermPtr make_scale(Scalar c, TermPtr child);
};

using Assignment = std::map<std::string, LieElement>;

// Bare identifiers resolve to generators first, then to names in `vars`
// (when given); anything else is a parse error.
TermPtr parse_term(const Algebra& alg, const std::string& text, const std::set<std::string>* vars = nullptr);

std::string print_term(const Algebra& alg, const TermPtr& t);

// Structural evaluation through the algebra; throws on variables missing
// from sigma.
LieElement evaluate(Algebra& alg, const TermPtr& t, const Assignment& sigma);

// Normal form of a constant bracket expression (no variables allowed).
LieElement normal_form(Algebra& alg, const TermPtr& t);
LieElement parse_element(Algebra& alg, const std::string& text);

void collect_variables(const TermPtr& t, std::set<std::string>& out);

}  // namespace freelie
