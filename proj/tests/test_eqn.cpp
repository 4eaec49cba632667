#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "freelie/json_io.hpp"

using namespace freelie;

namespace {

std::set<std::string> to_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

EquationSystem make_system(const Algebra& alg, std::vector<std::string> vars,
                           std::vector<std::pair<std::string, std::string>> eqs) {
  EquationSystem sys;
  sys.vars = std::move(vars);
  std::set<std::string> vs = to_set(sys.vars);
  for (const auto& [l, r] : eqs)
    sys.equations.push_back({parse_term(alg, l, &vs), parse_term(alg, r, &vs)});
  return sys;
}

EquationSystem make_phi(const Algebra& alg) {
  return make_system(alg, {"x", "y", "z", "z1", "z2"},
                     {{"[x,c] + [y,b]", "[z,a]"}, {"[x,b]", "[z1,a]"}, {"[y,c]", "[z2,a]"}});
}

Scalar S(const Algebra& alg, long v) { return Scalar::from_long(alg.field(), v); }

}  // namespace

TEST_CASE("term evaluation over assignments") {
  Algebra alg(3, Field::rationals());
  std::set<std::string> vars{"x", "y"};
  Assignment sigma{{"x", alg.generator(1)}, {"y", alg.generator(2)}};
  CHECK(evaluate(alg, parse_term(alg, "[x,a]", &vars), sigma) == parse_element(alg, "[b,a]"));
  CHECK(evaluate(alg, parse_term(alg, "x + -1*x", &vars), sigma).is_zero());
  CHECK(evaluate(alg, parse_term(alg, "[x,c] + [y,b]", &vars), sigma).is_zero());
}

TEST_CASE("check_system reports per-equation residuals") {
  Algebra alg(3, Field::rationals());
  EquationSystem phi = make_phi(alg);
  Assignment zero;
  for (const auto& v : phi.vars) zero.emplace(v, alg.zero());
  SystemReport rep = check_system(alg, phi, zero);
  CHECK(rep.pass);
  REQUIRE(rep.equations.size() == 3);

  PhiWitness w = psi_witness(alg, Polynomial::parse(alg.field(), "t^2 + 2"), S(alg, 1), S(alg, -1));
  Assignment good{{"x", w.x}, {"y", w.y}, {"z", w.z}, {"z1", w.z1}, {"z2", w.z2}};
  CHECK(check_system(alg, phi, good).pass);

  EquationSystem xa = make_system(alg, {"x"}, {{"[x,a]", "0"}});
  Assignment bad{{"x", alg.generator(1)}};
  SystemReport r2 = check_system(alg, xa, bad);
  CHECK(!r2.pass);
  CHECK(r2.equations[0].residual == parse_element(alg, "[b,a]"));
  Assignment missing;
  CHECK_THROWS_AS(check_system(alg, xa, missing), Error);
}

TEST_CASE("kernel of [x,a] = 0 is the centralizer Ka") {
  Algebra alg(3, Field::rationals());
  EquationSystem sys = make_system(alg, {"x"}, {{"[x,a]", "0"}});
  SubspaceBasis k = truncated_kernel(alg, sys, 3);
  REQUIRE(k.dimension() == 1);
  Assignment sol = k.decode(alg, k.vectors[0]);
  CHECK(sol.at("x") == alg.generator(0));
}

TEST_CASE("kernel of the membership system A at degree 1") {
  for (int rank : {2, 3}) {
    Algebra alg(rank, Field::rationals());
    std::vector<std::string> vars;
    std::vector<std::pair<std::string, std::string>> eqs;
    for (int i = 0; i < rank; ++i) {
      vars.push_back("x" + std::to_string(i + 1));
      eqs.push_back({"[x" + std::to_string(i + 1) + "," + alg.pool().gen_name(i) + "]", "0"});
    }
    SubspaceBasis k = truncated_kernel(alg, make_system(alg, vars, eqs), 1);
    CHECK(k.dimension() == rank);
    for (int i = 0; i < rank; ++i) {
      Assignment sol = k.decode(alg, k.vectors[static_cast<size_t>(i)]);
      for (int j = 0; j < rank; ++j) {
        const LieElement& e = sol.at(vars[static_cast<size_t>(j)]);
        if (i == j)
          CHECK(e == alg.generator(j));
        else
          CHECK(e.is_zero());
      }
    }
  }
}

TEST_CASE("nonlinear systems are refused") {
  Algebra alg(3, Field::rationals());
  EquationSystem sys = make_system(alg, {"x", "y"}, {{"[x,y]", "0"}});
  CHECK_THROWS_AS(truncated_kernel(alg, sys, 2), Error);
  EquationSystem sys2 = make_system(alg, {"x", "y"}, {{"[x,[y,a]]", "0"}});
  CHECK_THROWS_AS(truncated_kernel(alg, sys2, 2), Error);
  try {
    truncated_kernel(alg, sys, 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::nonlinear);
  }
}

TEST_CASE("affine systems get a particular solution") {
  Algebra alg(3, Field::rationals());
  EquationSystem sys = make_system(alg, {"x"}, {{"[x,a]", "[b,a]"}});
  TruncatedSolution sol = truncated_solve(alg, sys, 2);
  CHECK(sol.feasible);
  REQUIRE(!sol.particular.empty());
  Assignment part = sol.kernel.decode(alg, sol.particular);
  CHECK(alg.bracket(part.at("x"), alg.generator(0)) == parse_element(alg, "[b,a]"));
  CHECK(sol.kernel.dimension() == 1);  // + the centralizer

  // [x,a] = b is impossible
  EquationSystem bad = make_system(alg, {"x"}, {{"[x,a]", "b"}});
  CHECK(!truncated_solve(alg, bad, 3).feasible);
  CHECK_THROWS_AS(truncated_kernel(alg, sys, 2), Error);  // affine, not homogeneous
}

TEST_CASE("kernel monotonicity in the truncation degree") {
  Algebra alg(3, Field::rationals());
  EquationSystem phi = make_phi(alg);
  SubspaceBasis k3 = truncated_kernel(alg, phi, 3);
  SubspaceBasis k4 = truncated_kernel(alg, phi, 4);
  // embed each degree-3 vector into the degree-4 coordinate space
  for (const auto& v : k3.vectors) {
    Assignment sol = k3.decode(alg, v);
    CHECK(subspace_contains(k4, k4.encode(alg, sol)));
  }
  CHECK(k3.dimension() <= k4.dimension());
}

TEST_CASE("projection keeps or drops coordinates") {
  Algebra alg(3, Field::rationals());
  EquationSystem sys = make_system(alg, {"x", "y"}, {{"[x,a]", "0"}});
  SubspaceBasis k = truncated_kernel(alg, sys, 2);
  // x in Ka (dim 1), y free at degrees <= 2 (dim 6)
  CHECK(k.dimension() == 7);
  SubspaceBasis all = project(alg, k, {"x", "y"});
  CHECK(all.dimension() == 7);
  SubspaceBasis px = project(alg, k, {"x"});
  CHECK(px.dimension() == 1);

  EquationSystem pin = make_system(alg, {"x", "y"}, {{"[x,a]", "0"}, {"[y,a]", "[y,a]"}});
  SubspaceBasis k2 = truncated_kernel(alg, pin, 2);
  SubspaceBasis py = project(alg, k2, {"y"});
  CHECK(py.dimension() == 6);
  CHECK_THROWS_AS(project(alg, k, {"nope"}), Error);

  // a 1-dim space projected onto an untouched variable collapses to 0
  EquationSystem ann = make_system(
      alg, {"x", "y"}, {{"[x,a]", "0"}, {"[y,a]", "0"}, {"[y,b]", "0"}, {"[y,c]", "0"}});
  SubspaceBasis k3 = truncated_kernel(alg, ann, 1);
  CHECK(k3.dimension() == 1);
  CHECK(project(alg, k3, {"y"}).dimension() == 0);
}

TEST_CASE("phi kernel projection equals the explicit S generators") {
  Algebra alg(3, Field::rationals());
  EquationSystem phi = make_phi(alg);
  for (int D : {3, 5}) {
    SubspaceBasis k = truncated_kernel(alg, phi, D);
    SubspaceBasis proj = project(alg, k, {"x", "y"});
    int expected = 2 + (D - 1) / 2 + 1;  // (a,0),(0,a) and ([b,a^(2n)],[c,a^(2n)]), 2n+1 <= D
    CHECK(proj.dimension() == expected);

    std::vector<std::vector<Scalar>> gens;
    gens.push_back(proj.encode(alg, {{"x", alg.generator(0)}, {"y", alg.zero()}}));
    gens.push_back(proj.encode(alg, {{"x", alg.zero()}, {"y", alg.generator(0)}}));
    for (int n = 0; 2 * n + 1 <= D; ++n)
      gens.push_back(proj.encode(alg, {{"x", alg.ad_power(alg.generator(1), 0, 2 * n)},
                                       {"y", alg.ad_power(alg.generator(2), 0, 2 * n)}}));
    REQUIRE(static_cast<int>(gens.size()) == expected);
    for (const auto& g : gens) CHECK(subspace_contains(proj, g));

    SubspaceBasis explicit_span = proj;  // same ambient
    explicit_span.vectors = gens;
    for (const auto& v : proj.vectors) CHECK(subspace_contains(explicit_span, v));
  }
}

TEST_CASE("substitute closes over part of the variables") {
  Algebra alg(3, Field::rationals());
  EquationSystem sys = make_system(alg, {"x", "s"}, {{"[x,b]", "[s,a]"}});
  EquationSystem sub = substitute(alg, sys, {{"x", alg.ad_power(alg.generator(1), 0, 2)}});
  CHECK(sub.vars == std::vector<std::string>{"s"});
  TruncatedSolution sol = truncated_solve(alg, sub, 3);
  CHECK(sol.feasible);  // [[b,a,a],b] = [s,a] solvable
  EquationSystem sub2 = substitute(alg, sys, {{"x", alg.ad_power(alg.generator(1), 0, 1)}});
  CHECK(!truncated_solve(alg, sub2, 3).feasible);  // [[b,a],b] = [s,a] is Lemma 4.2's obstruction
}

TEST_CASE("poly term parsing and evaluation") {
  Field q = Field::rationals();
  std::set<std::string> vars{"u", "w"};
  PolyTermPtr t = parse_poly_term(q, "u*u + (t+1)*w + 3", vars);
  std::map<std::string, Polynomial> sigma{{"u", Polynomial::t(q)}, {"w", Polynomial::one(q)}};
  CHECK(eval_poly_term(t, sigma) == Polynomial::parse(q, "t^2 + t + 4"));
  CHECK_THROWS_AS(parse_poly_term(q, "v", vars), Error);
  CHECK_THROWS_AS(parse_poly_term(q, "u +", vars), Error);
  CHECK_THROWS_AS(parse_poly_term(q, "t", {{"t"}}), Error);  // reserved
  PolyTermPtr r = parse_poly_term(q, print_poly_term(*t), vars);
  CHECK(eval_poly_term(r, sigma) == eval_poly_term(t, sigma));
}

TEST_CASE("flattening produces the three atom forms") {
  Field q = Field::rationals();
  PolySystem sys;
  sys.field = q;
  sys.vars = {"u", "w"};
  std::set<std::string> vars = to_set(sys.vars);
  sys.equations.push_back({parse_poly_term(q, "u*u", vars), parse_poly_term(q, "w", vars)});
  sys.equations.push_back({parse_poly_term(q, "w", vars), parse_poly_term(q, "t^2+1", vars)});
  FlatPolySystem flat = flatten(sys);
  REQUIRE(flat.atoms.size() == 2);
  CHECK(flat.atoms[0].kind == FlatAtom::Kind::mul);
  CHECK(flat.atoms[0].v == "w");
  CHECK(flat.atoms[0].u == "u");
  CHECK(flat.atoms[0].w == "u");
  CHECK(flat.atoms[1].kind == FlatAtom::Kind::pin);
  CHECK(flat.atoms[1].v == "w");
  CHECK(flat.atoms[1].k == Polynomial::parse(q, "t^2+1"));

  // compound = compound goes through fresh variables
  PolySystem sys2;
  sys2.field = q;
  sys2.vars = {"u"};
  std::set<std::string> vars2 = to_set(sys2.vars);
  sys2.equations.push_back({parse_poly_term(q, "u + 1", vars2), parse_poly_term(q, "u*u", vars2)});
  FlatPolySystem flat2 = flatten(sys2);
  CHECK(flat2.vars.size() > 1);
  std::map<std::string, Polynomial> sigma{{"u", Polynomial::parse(q, "t")}};
  // forward-derivable: _f1 = u+1's operand chain is definable
  bool has_add = false, has_mul = false, has_pin = false;
  for (const auto& a : flat2.atoms) {
    has_add = has_add || a.kind == FlatAtom::Kind::add;
    has_mul = has_mul || a.kind == FlatAtom::Kind::mul;
    has_pin = has_pin || a.kind == FlatAtom::Kind::pin;
  }
  CHECK(has_add);
  CHECK(has_mul);
  CHECK(has_pin);
}

TEST_CASE("empty system maps the empty assignment") {
  Algebra alg(3, Field::rationals());
  PolySystem P;
  P.field = alg.field();
  CompiledSystem compiled = compile_poly_system(alg, P);
  CHECK(compiled.system.equations.empty());
  MappedSolution m = map_solution(alg, compiled, {});
  CHECK(m.assignment.empty());
  CHECK(m.failures.empty());
  CHECK(check_system(alg, compiled.system, m.assignment).pass);
}

TEST_CASE("compile pins a variable to a constant") {
  Algebra alg(3, Field::rationals());
  Field q = alg.field();
  PolySystem P;
  P.field = q;
  P.vars = {"v"};
  P.equations.push_back({PolyTerm::make_var("v"), PolyTerm::make_const(Polynomial::t(q))});
  CompiledSystem compiled = compile_poly_system(alg, P);

  MappedSolution good = map_solution(alg, compiled, {{"v", Polynomial::t(q)}});
  CHECK(good.failures.empty());
  CHECK(check_system(alg, compiled.system, good.assignment).pass);

  // replace x_v by the encoding of t^2: the pin equation must fail
  Assignment perturbed = good.assignment;
  perturbed[compiled.var_map.at("v").x] = encode_poly(alg, Polynomial::parse(q, "t^2"), S(alg, 0)).element;
  CHECK(!check_system(alg, compiled.system, perturbed).pass);
}

TEST_CASE("compile round trip for u*u = w") {
  Algebra alg(3, Field::rationals());
  Field q = alg.field();
  PolySystem P;
  P.field = q;
  P.vars = {"u", "w"};
  std::set<std::string> vars = to_set(P.vars);
  P.equations.push_back({parse_poly_term(q, "u*u", vars), parse_poly_term(q, "w", vars)});
  CompiledSystem compiled = compile_poly_system(alg, P);

  MappedSolution good = map_solution(
      alg, compiled, {{"u", Polynomial::t(q)}, {"w", Polynomial::parse(q, "t^2")}});
  CHECK(good.failures.empty());
  CHECK(check_system(alg, compiled.system, good.assignment).pass);

  MappedSolution bad = map_solution(
      alg, compiled, {{"u", Polynomial::t(q)}, {"w", Polynomial::parse(q, "t^2+1")}});
  CHECK(!bad.failures.empty());
  CHECK(!check_system(alg, compiled.system, bad.assignment).pass);
}

TEST_CASE("compile round trip for u*v = w with a pinned factor") {
  Algebra alg(3, Field::rationals());
  Field q = alg.field();
  PolySystem P;
  P.field = q;
  P.vars = {"u", "v", "w"};
  std::set<std::string> vars = to_set(P.vars);
  P.equations.push_back({parse_poly_term(q, "u*v", vars), parse_poly_term(q, "w", vars)});
  P.equations.push_back({parse_poly_term(q, "v", vars), parse_poly_term(q, "t+1", vars)});
  CompiledSystem compiled = compile_poly_system(alg, P);

  std::map<std::string, Polynomial> sigma{{"u", Polynomial::t(q)},
                                          {"v", Polynomial::parse(q, "t+1")},
                                          {"w", Polynomial::parse(q, "t^2+t")}};
  MappedSolution good = map_solution(alg, compiled, sigma);
  CHECK(good.failures.empty());
  CHECK(check_system(alg, compiled.system, good.assignment).pass);

  sigma["w"] = Polynomial::parse(q, "t^2");
  MappedSolution bad = map_solution(alg, compiled, sigma);
  CHECK(!check_system(alg, compiled.system, bad.assignment).pass);
}

TEST_CASE("compiler soundness and refutation on a randomized suite") {
  Algebra alg(3, Field::rationals());
  Field q = alg.field();
  std::mt19937_64 rng(505);
  std::uniform_int_distribution<long> coef(-3, 3);
  std::uniform_int_distribution<int> degd(0, 2);
  auto rnd_poly_small = [&] {
    std::vector<Scalar> cs(static_cast<size_t>(degd(rng)) + 1, Scalar::zero(q));
    for (auto& c : cs) c = Scalar::from_long(q, coef(rng));
    return Polynomial::from_coeffs(q, cs);
  };

  for (int trial = 0; trial < 6; ++trial) {
    Polynomial fu = rnd_poly_small(), fv = rnd_poly_small();
    Polynomial fw = fu * fv, fs = fu + fv;
    PolySystem P;
    P.field = q;
    P.vars = {"u", "v", "w", "s"};
    std::set<std::string> vars = to_set(P.vars);
    P.equations.push_back({parse_poly_term(q, "u*v", vars), parse_poly_term(q, "w", vars)});
    P.equations.push_back({parse_poly_term(q, "u + v", vars), parse_poly_term(q, "s", vars)});
    P.equations.push_back({PolyTerm::make_var("u"), PolyTerm::make_const(fu)});
    CompiledSystem compiled = compile_poly_system(alg, P);

    std::map<std::string, Polynomial> sigma{{"u", fu}, {"v", fv}, {"w", fw}, {"s", fs}};
    MappedSolution good = map_solution(alg, compiled, sigma);
    CHECK(good.failures.empty());
    CHECK(check_system(alg, compiled.system, good.assignment).pass);

    // perturb one value; the mapped assignment must fail the system
    auto sigma_bad = sigma;
    sigma_bad["w"] = fw + Polynomial::one(q);
    CHECK(!check_system(alg, compiled.system, map_solution(alg, compiled, sigma_bad).assignment).pass);
    auto sigma_bad2 = sigma;
    sigma_bad2["s"] = fs + Polynomial::t(q);
    CHECK(!check_system(alg, compiled.system, map_solution(alg, compiled, sigma_bad2).assignment).pass);
  }
}

TEST_CASE("refutation via the empty affine solution set of the auxiliaries") {
  Algebra alg(3, Field::rationals());
  Field q = alg.field();
  PolySystem P;
  P.field = q;
  P.vars = {"u", "w"};
  std::set<std::string> vars = to_set(P.vars);
  P.equations.push_back({parse_poly_term(q, "u*u", vars), parse_poly_term(q, "w", vars)});
  CompiledSystem compiled = compile_poly_system(alg, P);

  // candidate u -> t, w -> t^2 + 1; fix everything except the congruence aux
  MappedSolution cand = map_solution(
      alg, compiled, {{"u", Polynomial::t(q)}, {"w", Polynomial::parse(q, "t^2+1")}});
  REQUIRE(compiled.mul_aux.size() == 1);
  Assignment partial = cand.assignment;
  partial.erase(compiled.mul_aux[0]);
  EquationSystem linear = substitute(alg, compiled.system, partial);
  CHECK(linear.vars == std::vector<std::string>{compiled.mul_aux[0]});
  TruncatedSolution sol = truncated_solve(alg, linear, 6);
  CHECK(!sol.feasible);

  // the true product leaves a feasible auxiliary system
  MappedSolution good = map_solution(
      alg, compiled, {{"u", Polynomial::t(q)}, {"w", Polynomial::parse(q, "t^2")}});
  Assignment partial2 = good.assignment;
  partial2.erase(compiled.mul_aux[0]);
  CHECK(truncated_solve(alg, substitute(alg, compiled.system, partial2), 6).feasible);
}

TEST_CASE("system and assignment JSON round trips") {
  Algebra alg(3, Field::rationals());
  EquationSystem phi = make_phi(alg);
  SystemDoc doc = system_to_doc(alg, phi);
  std::string text = system_doc_to_json(doc);
  SystemDoc back = system_doc_from_json(text);
  CHECK(back.rank == 3);
  CHECK(back.field == alg.field());
  CHECK(back.vars == phi.vars);
  Algebra alg2(back.rank, back.field, back.degree_cap);
  EquationSystem sys2 = parse_system(alg2, back);
  REQUIRE(sys2.equations.size() == phi.equations.size());

  Assignment sigma{{"x", parse_element(alg, "[b,a] + 2*c")}, {"y", alg.zero()}};
  Assignment sigma2 = assignment_from_json(alg, assignment_to_json(alg, sigma));
  CHECK(sigma2.at("x") == sigma.at("x"));
  CHECK(sigma2.at("y").is_zero());

  PolySystemDoc pd;
  pd.field = Field::rationals();
  pd.vars = {"u", "w"};
  pd.equations = {{"u*u", "w"}};
  PolySystemDoc pd2 = poly_system_doc_from_json(poly_system_doc_to_json(pd));
  CHECK(pd2.vars == pd.vars);
  PolySystem ps = parse_poly_system(pd2);
  CHECK(ps.equations.size() == 1);

  CHECK_THROWS_AS(system_doc_from_json("{"), Error);
  CHECK_THROWS_AS(system_doc_from_json("{}"), Error);
  CHECK_THROWS_AS(assignment_from_json(alg, "[1,2]"), Error);
}
