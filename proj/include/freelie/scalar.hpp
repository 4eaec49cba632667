#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "freelie/error.hpp"

namespace freelie {

// Coefficient field: the rationals or a prime field F_p.
struct Field {
  enum class Kind : std::uint8_t { rationals, prime };

  Kind kind = Kind::rationals;
  std::uint32_t p = 0;  // modulus, meaningful only for Kind::prime

  static Field rationals() { return Field{Kind::rationals, 0}; }
  static Field prime(std::uint32_t p);  // throws unless p is prime

  bool operator==(const Field&) const = default;

  bool is_rationals() const { return kind == Kind::rationals; }
  std::string str() const;                      // "q" or "fp:<p>"
  static Field parse(std::string_view text);    // inverse of str()
};

// Exact field element. Rationals are kept fully reduced with positive
// denominator (mpq invariant); F_p values live in [0, p).
class Scalar {
 public:
  Scalar() : field_(Field::rationals()) {}  // zero over Q

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_long(const Field& f, long v);
  static Scalar from_mpq(mpq_class v);  // rationals
  // Accepts "n", "-n" and "n/d"; over F_p, n/d means n * d^{-1} mod p.
  static Scalar parse(const Field& f, std::string_view text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  // Sign over the rationals (-1, 0, 1); F_p values are never negative.
  int sign() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;  // throws on zero
  Scalar abs() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

  const mpq_class& rational() const;  // throws unless rationals
  std::uint64_t prime_value() const { return r_; }

 private:
  friend struct ScalarOps;
  Field field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

void check_same_field(const Field& a, const Field& b, const char* where);

}  // namespace freelie
