#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "freelie/interp.hpp"
#include "freelie/term.hpp"

namespace freelie {

// --- Equation systems over L -------------------------------------------------

struct Equation {
  TermPtr lhs, rhs;
};

struct EquationSystem {
  std::vector<std::string> vars;
  std::vector<Equation> equations;
};

struct EquationReport {
  bool pass = false;
  LieElement residual;  // lhs - rhs in normal form
};

struct SystemReport {
  bool pass = false;
  std::vector<EquationReport> equations;
};

SystemReport check_system(Algebra& alg, const EquationSystem& sys, const Assignment& sigma);

// Replaces the given variables by constants; they disappear from the
// variable list.
EquationSystem substitute(Algebra& alg, const EquationSystem& sys, const Assignment& partial);

// --- Truncated exact solver --------------------------------------------------

// Exact basis of a solution subspace of a variable-linear system, every
// variable restricted to degree <= degree. Coordinates are indexed by
// (variable, basis monomial): index = var_index * coords.size() + mono_index.
struct SubspaceBasis {
  int degree = 0;
  std::vector<std::string> vars;
  std::vector<MonoId> coords;  // Hall basis monomials of degree <= degree, ascending
  std::vector<std::vector<Scalar>> vectors;

  int dimension() const { return static_cast<int>(vectors.size()); }
  int width() const { return static_cast<int>(vars.size() * coords.size()); }
  Assignment decode(const Algebra& alg, const std::vector<Scalar>& vec) const;
  std::vector<Scalar> encode(const Algebra& alg, const Assignment& sigma) const;
};

struct TruncatedSolution {
  bool feasible = false;
  std::vector<Scalar> particular;  // empty when the system is homogeneous
  SubspaceBasis kernel;
};

// Exact solutions with all variables of degree <= degree; the system must be
// linear in its variables (each additive term carries at most one variable
// occurrence). Constant-only terms make the system affine.
TruncatedSolution truncated_solve(Algebra& alg, const EquationSystem& sys, int degree);

// Same, but requires a homogeneous system and returns the kernel basis.
SubspaceBasis truncated_kernel(Algebra& alg, const EquationSystem& sys, int degree);

// Exact basis of the coordinate projection onto a subset of the variables.
SubspaceBasis project(const Algebra& alg, const SubspaceBasis& basis, const std::vector<std::string>& vars);

bool subspace_contains(const SubspaceBasis& basis, const std::vector<Scalar>& vec);

// --- Polynomial systems over K[t] and the compiler ---------------------------

struct PolyTerm;
using PolyTermPtr = std::shared_ptr<const PolyTerm>;

struct PolyTerm {
  enum class Kind { constant, variable, add, mul };
  Kind kind;
  Polynomial value;  // constant
  std::string var;   // variable
  PolyTermPtr lhs, rhs;

  static PolyTermPtr make_const(Polynomial k);
  static PolyTermPtr make_var(std::string name);
  static PolyTermPtr make_add(PolyTermPtr l, PolyTermPtr r);
  static PolyTermPtr make_mul(PolyTermPtr l, PolyTermPtr r);
};

struct PolyEquation {
  PolyTermPtr lhs, rhs;
};

struct PolySystem {
  Field field;
  std::vector<std::string> vars;
  std::vector<PolyEquation> equations;
};

// Grammar: var | polynomial literal | e + e | e * e | (e); 't' is the
// indeterminate and is reserved.
PolyTermPtr parse_poly_term(const Field& field, const std::string& text,
                            const std::set<std::string>& vars);
std::string print_poly_term(const PolyTerm& t);

Polynomial eval_poly_term(const PolyTermPtr& t, const std::map<std::string, Polynomial>& sigma);

// Atomized form: v = k, v = u + w, v = u * w.
struct FlatAtom {
  enum class Kind { pin, add, mul };
  Kind kind;
  std::string v;  // defined/constrained variable
  std::string u, w;
  Polynomial k;
};

struct FlatPolySystem {
  Field field;
  std::vector<std::string> vars;  // user variables followed by fresh ones
  std::vector<FlatAtom> atoms;
};

FlatPolySystem flatten(const PolySystem& sys);

// Lie variables attached to one polynomial variable: x is the interpreted
// value, y its partner, z/z1/z2 the phi existentials.
struct PolyVarScheme {
  std::string x, y, z, z1, z2;
};

struct CompiledSystem {
  EquationSystem system;
  FlatPolySystem flat;
  std::map<std::string, PolyVarScheme> var_map;   // poly var -> lie vars
  std::vector<std::string> mul_aux;               // per mul atom, in atom order
};

// Lemma-style reduction: membership equations phi(x_v, y_v, ...) per
// variable, [x_v - enc(k), a] = 0 per pin, [x_u + x_w - x_v, a] = 0 per
// addition, and [x_u, y_w] = [x_v, c] + [s, a] per multiplication.
CompiledSystem compile_poly_system(Algebra& alg, const PolySystem& sys);

struct MappedSolution {
  Assignment assignment;
  // Equations whose auxiliary could not be realized (the poly assignment
  // does not solve the corresponding atom); their auxiliaries are set to 0.
  std::vector<std::string> failures;
};

MappedSolution map_solution(Algebra& alg, const CompiledSystem& compiled,
                            const std::map<std::string, Polynomial>& sigma);

}  // namespace freelie
