#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "freelie/term.hpp"

using namespace freelie;

TEST_CASE("normal form of [a,b] prints the pinned text") {
  Algebra alg(3, Field::rationals());
  CHECK(alg.str(parse_element(alg, "[a,b]")) == "-1*[b,a]");
}

TEST_CASE("grammar basics") {
  Algebra alg(3, Field::rationals());
  CHECK(parse_element(alg, "0").is_zero());
  CHECK(parse_element(alg, "b + a") == alg.add(alg.generator(1), alg.generator(0)));
  CHECK(parse_element(alg, "2*(b + a)") ==
        alg.scalar_mul(Scalar::from_long(alg.field(), 2), alg.add(alg.generator(1), alg.generator(0))));
  CHECK(parse_element(alg, "b - b").is_zero());
  CHECK(parse_element(alg, "-b") == alg.negate(alg.generator(1)));
  CHECK(parse_element(alg, "1/2*a + 1/2*a") == alg.generator(0));
  CHECK(parse_element(alg, "[[b,a],[c,a]]") ==
        parse_element(alg, "[ [ b , a ] , [ c , a ] ]"));
  CHECK(parse_element(alg, "0*[b,a]").is_zero());
}

TEST_CASE("parse errors") {
  Algebra alg(3, Field::rationals());
  CHECK_THROWS_AS(parse_element(alg, "q"), Error);       // unknown identifier
  CHECK_THROWS_AS(parse_element(alg, "[a"), Error);      // unbalanced
  CHECK_THROWS_AS(parse_element(alg, "[a b]"), Error);   // missing comma
  CHECK_THROWS_AS(parse_element(alg, "3"), Error);       // bare nonzero scalar
  CHECK_THROWS_AS(parse_element(alg, "a a"), Error);     // trailing input
  CHECK_THROWS_AS(parse_element(alg, ""), Error);
  CHECK_THROWS_AS(parse_element(alg, "x"), Error);       // variable without declaration
  Algebra alg2(2, Field::rationals());
  CHECK_THROWS_AS(parse_element(alg2, "c"), Error);      // no generator c at rank 2
}

TEST_CASE("variables need the allowed set and an assignment") {
  Algebra alg(3, Field::rationals());
  std::set<std::string> vars{"x", "y2"};
  TermPtr t = parse_term(alg, "[x,a] + 2*y2", &vars);
  Assignment sigma{{"x", alg.generator(1)}, {"y2", alg.zero()}};
  CHECK(evaluate(alg, t, sigma) == parse_element(alg, "[b,a]"));
  Assignment missing{{"x", alg.generator(1)}};
  CHECK_THROWS_AS(evaluate(alg, t, missing), Error);
  CHECK_THROWS_AS(normal_form(alg, t), Error);
}

TEST_CASE("printing round trips") {
  Algebra alg(3, Field::rationals());
  std::mt19937_64 rng(17);
  auto basis = alg.pool().basis_up_to(5);
  std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<long> coef(-7, 7);
  for (int i = 0; i < 100; ++i) {
    LieElement e = alg.zero();
    for (int j = 0; j < 3; ++j)
      e = alg.add(e, alg.monomial(basis[pick(rng)], Scalar::from_long(alg.field(), coef(rng))));
    CHECK(parse_element(alg, alg.str(e)) == e);
  }
}

TEST_CASE("printing round trips over a prime field") {
  Algebra alg(3, Field::prime(7));
  LieElement e = alg.add(alg.scalar_mul(Scalar::from_long(alg.field(), 3), alg.generator(2)),
                         parse_element(alg, "[c,b]"));
  CHECK(parse_element(alg, alg.str(e)) == e);
}

TEST_CASE("term printing keeps variables and parenthesizes scaled sums") {
  Algebra alg(3, Field::rationals());
  std::set<std::string> vars{"x", "y"};
  for (const char* s : {"[x,a]", "x + y", "3*(x + y)", "[x,[y,b]]", "-1*x"}) {
    TermPtr t = parse_term(alg, s, &vars);
    TermPtr back = parse_term(alg, print_term(alg, t), &vars);
    Assignment sigma{{"x", parse_element(alg, "[b,a]")}, {"y", alg.generator(2)}};
    CHECK(evaluate(alg, t, sigma) == evaluate(alg, back, sigma));
  }
}

TEST_CASE("collect_variables sees every occurrence") {
  Algebra alg(3, Field::rationals());
  std::set<std::string> vars{"x", "y", "z"};
  TermPtr t = parse_term(alg, "[x,a] + 2*[b,[y,c]]", &vars);
  std::set<std::string> seen;
  collect_variables(t, seen);
  CHECK(seen == std::set<std::string>{"x", "y"});
}
