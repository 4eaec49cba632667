#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "freelie/hall.hpp"
#include "freelie/poly.hpp"
#include "freelie/scalar.hpp"

namespace freelie {

class Algebra;

// Normal form of an algebra element: coefficients on Hall monomials, sorted
// ascending in the Hall order, zero coefficients never stored. Monomial ids
// are scoped to the Algebra that produced the element.
class LieElement {
 public:
  LieElement() : field_(Field::rationals()) {}
  explicit LieElement(Field f) : field_(std::move(f)) {}

  const Field& field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<std::pair<MonoId, Scalar>>& terms() const { return terms_; }
  // Coefficient of one monomial (zero if absent).
  Scalar coeff(MonoId m) const;

  bool operator==(const LieElement& o) const { return field_ == o.field_ && terms_ == o.terms_; }
  bool operator!=(const LieElement& o) const { return !(*this == o); }

 private:
  friend class Algebra;
  Field field_;
  std::vector<std::pair<MonoId, Scalar>> terms_;
};

// The free Lie algebra of a fixed rank over a fixed field, with Hall-basis
// normal forms. Owns the monomial pool and a memo table of monomial pair
// products, so brackets mutate the Algebra (pure-cache contract: results
// do not depend on the cache state). Not thread-safe; share elements, not
// in-flight Algebra mutation.
class Algebra {
 public:
  static constexpr int kDefaultDegreeCap = 24;

  Algebra(int rank, Field field, int degree_cap = kDefaultDegreeCap);

  int rank() const { return pool_.rank(); }
  const Field& field() const { return field_; }
  int degree_cap() const { return cap_; }
  MonomialPool& pool() { return pool_; }
  const MonomialPool& pool() const { return pool_; }

  LieElement zero() const { return LieElement(field_); }
  LieElement generator(int index);
  LieElement monomial(MonoId m, Scalar c) const;
  Scalar scalar_one() const { return Scalar::one(field_); }

  LieElement add(const LieElement& u, const LieElement& v) const;
  LieElement sub(const LieElement& u, const LieElement& v) const;
  LieElement scalar_mul(const Scalar& c, const LieElement& u) const;
  LieElement negate(const LieElement& u) const;

  // Bilinear bracket in normal form; refuses products past the degree cap.
  LieElement bracket(const LieElement& u, const LieElement& v);

  // [u, g^(n)]: n-fold right bracketing by the generator g.
  LieElement ad_power(const LieElement& u, int gen, int n);

  // [u, f(g)] = sum_i f_i [u, g^(i)].
  LieElement poly_action(const LieElement& u, const Polynomial& f, int gen);

  // Left-normed product ((z1 z2) z3) ... zk; requires at least one element.
  LieElement left_normed(std::span<const LieElement> zs);

  std::map<std::vector<std::int32_t>, LieElement> homogeneous_components(const LieElement& u) const;
  LieElement truncate(const LieElement& u, int max_degree) const;
  int max_degree(const LieElement& u) const;  // 0 for zero

  // Monomials printed in descending Hall order: "2*[[b,a],a] + b"; "0" for zero.
  std::string str(const LieElement& u) const;

  void check_element(const LieElement& u) const;  // field match

 private:
  struct MonoProduct {
    std::shared_ptr<const LieElement> elem;  // null means zero
    int sign = 0;
  };

  MonoProduct mono_bracket(MonoId e, MonoId f);
  std::shared_ptr<const LieElement> mono_bracket_canonical(MonoId e, MonoId f);  // requires e > f

  Field field_;
  int cap_;
  MonomialPool pool_;
  std::unordered_map<std::uint64_t, std::shared_ptr<const LieElement>> memo_;
};

}  // namespace freelie
