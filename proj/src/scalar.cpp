#include "freelie/scalar.hpp"

#include <cctype>

namespace freelie {

namespace {

bool is_prime_u32(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + b) % p; }

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + p - b) % p; }

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  while (e) {
    if (e & 1) acc = mul_mod(acc, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return acc;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime_u32(p)) raise(ErrorCode::invalid, "field modulus " + std::to_string(p) + " is not prime");
  return Field{Kind::prime, p};
}

std::string Field::str() const {
  return is_rationals() ? "q" : "fp:" + std::to_string(p);
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("fp:", 0) == 0) {
    std::uint64_t v = 0;
    for (char c : text.substr(3)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) raise(ErrorCode::parse, "bad field spec: " + std::string(text));
      v = v * 10 + (c - '0');
      if (v > 0x7fffffffULL) raise(ErrorCode::parse, "field modulus too large: " + std::string(text));
    }
    if (text.size() == 3) raise(ErrorCode::parse, "bad field spec: " + std::string(text));
    return prime(static_cast<std::uint32_t>(v));
  }
  raise(ErrorCode::parse, "bad field spec: " + std::string(text) + " (expected q or fp:<prime>)");
}

void check_same_field(const Field& a, const Field& b, const char* where) {
  if (!(a == b))
    raise(ErrorCode::field_mismatch,
          std::string(where) + ": field mismatch (" + a.str() + " vs " + b.str() + ")");
}

Scalar Scalar::zero(const Field& f) {
  Scalar s;
  s.field_ = f;
  return s;
}

Scalar Scalar::one(const Field& f) { return from_long(f, 1); }

Scalar Scalar::from_long(const Field& f, long v) {
  Scalar s;
  s.field_ = f;
  if (f.is_rationals()) {
    s.q_ = mpq_class(v);
  } else {
    long m = v % static_cast<long>(f.p);
    if (m < 0) m += f.p;
    s.r_ = static_cast<std::uint64_t>(m);
  }
  return s;
}

Scalar Scalar::from_mpq(mpq_class v) {
  Scalar s;
  s.field_ = Field::rationals();
  v.canonicalize();
  s.q_ = std::move(v);
  return s;
}

Scalar Scalar::parse(const Field& f, std::string_view text) {
  // strict: [+-]? digits ( '/' digits )?
  std::string_view t = text;
  bool neg = false;
  if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
    neg = t[0] == '-';
    t.remove_prefix(1);
  }
  auto take_digits = [&](std::string_view& sv) {
    std::string out;
    while (!sv.empty() && std::isdigit(static_cast<unsigned char>(sv[0]))) {
      out.push_back(sv[0]);
      sv.remove_prefix(1);
    }
    return out;
  };
  std::string num = take_digits(t);
  std::string den;
  if (!t.empty() && t[0] == '/') {
    t.remove_prefix(1);
    den = take_digits(t);
    if (den.empty()) raise(ErrorCode::parse, "bad scalar: " + std::string(text));
  }
  if (num.empty() || !t.empty()) raise(ErrorCode::parse, "bad scalar: " + std::string(text));

  if (f.is_rationals()) {
    mpq_class v(num + (den.empty() ? "" : "/" + den));
    if (den == "0") raise(ErrorCode::parse, "zero denominator in scalar: " + std::string(text));
    v.canonicalize();
    if (neg) v = -v;
    Scalar s;
    s.field_ = f;
    s.q_ = std::move(v);
    return s;
  }
  mpz_class n(num), d(den.empty() ? "1" : den);
  mpz_class pz(static_cast<unsigned long>(f.p));
  std::uint64_t nr = mpz_class(n % pz).get_ui();
  std::uint64_t dr = mpz_class(d % pz).get_ui();
  if (dr == 0) raise(ErrorCode::parse, "denominator not invertible mod " + std::to_string(f.p));
  std::uint64_t v = mul_mod(nr, pow_mod(dr, f.p - 2, f.p), f.p);
  if (neg) v = sub_mod(0, v, f.p);
  Scalar s;
  s.field_ = f;
  s.r_ = v;
  return s;
}

bool Scalar::is_zero() const { return field_.is_rationals() ? q_ == 0 : r_ == 0; }

bool Scalar::is_one() const { return field_.is_rationals() ? q_ == 1 : r_ == 1; }

int Scalar::sign() const { return field_.is_rationals() ? sgn(q_) : (r_ != 0 ? 1 : 0); }

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(field_, o.field_, "scalar +");
  Scalar s;
  s.field_ = field_;
  if (field_.is_rationals())
    s.q_ = q_ + o.q_;
  else
    s.r_ = add_mod(r_, o.r_, field_.p);
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(field_, o.field_, "scalar -");
  Scalar s;
  s.field_ = field_;
  if (field_.is_rationals())
    s.q_ = q_ - o.q_;
  else
    s.r_ = sub_mod(r_, o.r_, field_.p);
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(field_, o.field_, "scalar *");
  Scalar s;
  s.field_ = field_;
  if (field_.is_rationals())
    s.q_ = q_ * o.q_;
  else
    s.r_ = mul_mod(r_, o.r_, field_.p);
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s;
  s.field_ = field_;
  if (field_.is_rationals())
    s.q_ = -q_;
  else
    s.r_ = sub_mod(0, r_, field_.p);
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) raise(ErrorCode::domain, "inverse of zero");
  Scalar s;
  s.field_ = field_;
  if (field_.is_rationals())
    s.q_ = 1 / q_;
  else
    s.r_ = pow_mod(r_, field_.p - 2, field_.p);
  return s;
}

Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

bool Scalar::operator==(const Scalar& o) const {
  return field_ == o.field_ && (field_.is_rationals() ? q_ == o.q_ : r_ == o.r_);
}

std::string Scalar::str() const {
  return field_.is_rationals() ? q_.get_str() : std::to_string(r_);
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rationals()) raise(ErrorCode::invalid, "not a rational scalar");
  return q_;
}

}  // namespace freelie
