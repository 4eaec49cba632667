#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "freelie/scalar.hpp"

namespace freelie {

// Dense univariate polynomial over one field. Canonical form: no trailing
// zero coefficients; the zero polynomial has an empty coefficient vector.
class Polynomial {
 public:
  explicit Polynomial(Field f = Field::rationals()) : field_(f) {}

  static Polynomial zero(const Field& f) { return Polynomial(f); }
  static Polynomial one(const Field& f) { return constant(Scalar::one(f)); }
  static Polynomial t(const Field& f);  // the indeterminate
  static Polynomial constant(const Scalar& c);
  static Polynomial monomial(const Scalar& c, int power);
  static Polynomial from_coeffs(const Field& f, std::vector<Scalar> ascending);

  // Text form "3*t^2 + 1/2*t - 4"; rationals as p/q.
  static Polynomial parse(const Field& f, std::string_view text);
  std::string str() const;

  const Field& field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  Scalar coeff(int power) const;
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const { return field_ == o.field_ && coeffs_ == o.coeffs_; }

 private:
  void trim();
  Field field_;
  std::vector<Scalar> coeffs_;  // coeffs_[i] multiplies t^i
};

// f(t) -> f(t^2): all odd coefficients of the result are zero.
Polynomial even_expand(const Polynomial& f);

}  // namespace freelie
