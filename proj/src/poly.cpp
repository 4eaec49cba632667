#include "freelie/poly.hpp"

#include <cctype>

namespace freelie {

Polynomial Polynomial::t(const Field& f) { return monomial(Scalar::one(f), 1); }

Polynomial Polynomial::constant(const Scalar& c) { return monomial(c, 0); }

Polynomial Polynomial::monomial(const Scalar& c, int power) {
  Polynomial p(c.field());
  if (!c.is_zero()) {
    p.coeffs_.assign(static_cast<size_t>(power) + 1, Scalar::zero(c.field()));
    p.coeffs_[static_cast<size_t>(power)] = c;
  }
  return p;
}

Polynomial Polynomial::from_coeffs(const Field& f, std::vector<Scalar> ascending) {
  Polynomial p(f);
  for (const Scalar& c : ascending) check_same_field(f, c.field(), "polynomial coefficients");
  p.coeffs_ = std::move(ascending);
  p.trim();
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Polynomial::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return Scalar::zero(field_);
  return coeffs_[static_cast<size_t>(power)];
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_field(field_, o.field_, "poly +");
  Polynomial r(field_);
  size_t n = std::max(coeffs_.size(), o.coeffs_.size());
  r.coeffs_.assign(n, Scalar::zero(field_));
  for (size_t i = 0; i < n; ++i) r.coeffs_[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  r.trim();
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  Polynomial r(field_);
  r.coeffs_.reserve(coeffs_.size());
  for (const Scalar& c : coeffs_) r.coeffs_.push_back(-c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_field(field_, o.field_, "poly *");
  Polynomial r(field_);
  if (is_zero() || o.is_zero()) return r;
  r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Scalar::zero(field_));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      r.coeffs_[i + j] = r.coeffs_[i + j] + coeffs_[i] * o.coeffs_[j];
  r.trim();  // can drop the lead over F_p
  return r;
}

Polynomial even_expand(const Polynomial& f) {
  Polynomial g(f.field());
  if (f.is_zero()) return g;
  std::vector<Scalar> cs(2 * f.coeffs().size() - 1, Scalar::zero(f.field()));
  for (size_t i = 0; i < f.coeffs().size(); ++i) cs[2 * i] = f.coeffs()[i];
  return Polynomial::from_coeffs(f.field(), std::move(cs));
}

namespace {

struct PolyLexer {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string number() {
    skip_ws();
    std::string out;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) out.push_back(s[pos++]);
    if (pos < s.size() && s[pos] == '/') {
      out.push_back(s[pos++]);
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) out.push_back(s[pos++]);
    }
    return out;
  }
  unsigned exponent() {
    skip_ws();
    std::string out;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) out.push_back(s[pos++]);
    if (out.empty()) raise(ErrorCode::parse, "expected exponent in polynomial at offset " + std::to_string(pos));
    unsigned long v = std::stoul(out);
    if (v > 4096) raise(ErrorCode::parse, "polynomial exponent too large");
    return static_cast<unsigned>(v);
  }
};

}  // namespace

Polynomial Polynomial::parse(const Field& f, std::string_view text) {
  PolyLexer lx{text};
  std::vector<Scalar> coeffs;
  auto bump = [&](unsigned power, const Scalar& c) {
    if (coeffs.size() <= power) coeffs.resize(power + 1, Scalar::zero(f));
    coeffs[power] = coeffs[power] + c;
  };

  bool first = true;
  while (!lx.eof()) {
    int sign = 1;
    if (lx.accept('+')) {
      if (first) raise(ErrorCode::parse, "polynomial cannot start with +");
    } else if (lx.accept('-')) {
      sign = -1;
    } else if (!first) {
      raise(ErrorCode::parse, "expected + or - in polynomial: " + std::string(text));
    }
    first = false;

    char c = lx.peek();
    Scalar coef = Scalar::one(f);
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coef = Scalar::parse(f, lx.number());
      have_coef = true;
    }
    unsigned power = 0;
    bool have_t = false;
    if (have_coef && lx.peek() == '*') {
      lx.accept('*');
      if (lx.peek() != 't') raise(ErrorCode::parse, "expected t after * in polynomial: " + std::string(text));
    }
    if (lx.peek() == 't') {
      lx.accept('t');
      have_t = true;
      power = lx.accept('^') ? lx.exponent() : 1;
    }
    if (!have_coef && !have_t)
      raise(ErrorCode::parse, "bad polynomial term in: " + std::string(text));
    if (sign < 0) coef = -coef;
    bump(power, coef);
  }
  if (first) raise(ErrorCode::parse, "empty polynomial");
  return from_coeffs(f, std::move(coeffs));
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    Scalar c = coeff(i);
    if (c.is_zero()) continue;
    bool neg = c.sign() < 0;
    Scalar a = c.abs();
    std::string piece;
    if (i == 0) {
      piece = a.str();
    } else {
      std::string tp = i == 1 ? "t" : "t^" + std::to_string(i);
      piece = a.is_one() ? tp : a.str() + "*" + tp;
    }
    if (out.empty())
      out = (neg ? "-" : "") + piece;
    else
      out += (neg ? " - " : " + ") + piece;
  }
  return out;
}

}  // namespace freelie
