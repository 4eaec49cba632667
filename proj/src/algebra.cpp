#include "freelie/algebra.hpp"

#include <algorithm>

namespace freelie {

namespace {

struct MonoLess {
  const MonomialPool* pool;
  bool operator()(MonoId a, MonoId b) const { return pool->compare(a, b) < 0; }
};

using Accum = std::map<MonoId, Scalar, MonoLess>;

}  // namespace

Scalar LieElement::coeff(MonoId m) const {
  for (const auto& [mono, c] : terms_)
    if (mono == m) return c;
  return Scalar::zero(field_);
}

Algebra::Algebra(int rank, Field field, int degree_cap)
    : field_(std::move(field)), cap_(degree_cap), pool_(rank) {
  if (rank < 2) raise(ErrorCode::rank, "free Lie algebra rank must be at least 2");
  if (cap_ < 2) raise(ErrorCode::invalid, "degree cap must be at least 2");
}

void Algebra::check_element(const LieElement& u) const {
  check_same_field(field_, u.field(), "lie element");
}

LieElement Algebra::generator(int index) { return monomial(pool_.generator(index), scalar_one()); }

LieElement Algebra::monomial(MonoId m, Scalar c) const {
  check_same_field(field_, c.field(), "monomial coefficient");
  LieElement out(field_);
  if (!c.is_zero()) out.terms_.emplace_back(m, std::move(c));
  return out;
}

LieElement Algebra::add(const LieElement& u, const LieElement& v) const {
  check_element(u);
  check_element(v);
  LieElement out(field_);
  out.terms_.reserve(u.terms_.size() + v.terms_.size());
  auto it = u.terms_.begin();
  auto jt = v.terms_.begin();
  while (it != u.terms_.end() || jt != v.terms_.end()) {
    int c;
    if (it == u.terms_.end())
      c = 1;
    else if (jt == v.terms_.end())
      c = -1;
    else
      c = pool_.compare(it->first, jt->first);
    if (c < 0) {
      out.terms_.push_back(*it++);
    } else if (c > 0) {
      out.terms_.push_back(*jt++);
    } else {
      Scalar s = it->second + jt->second;
      if (!s.is_zero()) out.terms_.emplace_back(it->first, std::move(s));
      ++it;
      ++jt;
    }
  }
  return out;
}

LieElement Algebra::sub(const LieElement& u, const LieElement& v) const { return add(u, negate(v)); }

LieElement Algebra::scalar_mul(const Scalar& c, const LieElement& u) const {
  check_element(u);
  check_same_field(field_, c.field(), "scalar_mul");
  LieElement out(field_);
  if (c.is_zero()) return out;
  out.terms_.reserve(u.terms_.size());
  for (const auto& [m, k] : u.terms_) out.terms_.emplace_back(m, c * k);
  return out;
}

LieElement Algebra::negate(const LieElement& u) const {
  check_element(u);
  LieElement out(field_);
  out.terms_.reserve(u.terms_.size());
  for (const auto& [m, k] : u.terms_) out.terms_.emplace_back(m, -k);
  return out;
}

int Algebra::max_degree(const LieElement& u) const {
  return u.terms_.empty() ? 0 : pool_.degree(u.terms_.back().first);
}

Algebra::MonoProduct Algebra::mono_bracket(MonoId e, MonoId f) {
  int c = pool_.compare(e, f);
  if (c == 0) return {nullptr, 0};
  if (c < 0) return {mono_bracket_canonical(f, e), -1};
  return {mono_bracket_canonical(e, f), 1};
}

std::shared_ptr<const LieElement> Algebra::mono_bracket_canonical(MonoId e, MonoId f) {
  std::uint64_t key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e)) << 32) |
                      static_cast<std::uint32_t>(f);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  LieElement result(field_);
  if (pool_.is_hall_pair(e, f)) {
    result = monomial(pool_.make_node(e, f), scalar_one());
  } else {
    // e = [e1, e2] with e2 > f; Jacobi: [[e1,e2],f] = [[e1,f],e2] + [e1,[e2,f]].
    MonoId e1 = pool_.left(e), e2 = pool_.right(e);
    LieElement one1 = monomial(e1, scalar_one());
    LieElement one2 = monomial(e2, scalar_one());
    auto p1 = mono_bracket(e1, f);
    auto p2 = mono_bracket(e2, f);
    LieElement t1 = p1.sign == 0 ? zero() : bracket(p1.sign < 0 ? negate(*p1.elem) : *p1.elem, one2);
    LieElement t2 = p2.sign == 0 ? zero() : bracket(one1, p2.sign < 0 ? negate(*p2.elem) : *p2.elem);
    result = add(t1, t2);
  }
  auto sp = std::make_shared<const LieElement>(std::move(result));
  memo_.emplace(key, sp);
  return sp;
}

LieElement Algebra::bracket(const LieElement& u, const LieElement& v) {
  check_element(u);
  check_element(v);
  if (u.is_zero() || v.is_zero()) return zero();
  int total = max_degree(u) + max_degree(v);
  if (total > cap_)
    raise(ErrorCode::degree_cap, "bracket would reach degree " + std::to_string(total) +
                                     " past the cap " + std::to_string(cap_));
  Accum acc{MonoLess{&pool_}};
  for (const auto& [mu, cu] : u.terms_) {
    for (const auto& [mv, cv] : v.terms_) {
      MonoProduct prod = mono_bracket(mu, mv);
      if (prod.sign == 0) continue;
      Scalar c = cu * cv;
      if (prod.sign < 0) c = -c;
      for (const auto& [m, k] : prod.elem->terms()) {
        auto [it, inserted] = acc.try_emplace(m, c * k);
        if (!inserted) it->second = it->second + c * k;
      }
    }
  }
  LieElement out(field_);
  for (const auto& [m, c] : acc)
    if (!c.is_zero()) out.terms_.emplace_back(m, c);
  return out;
}

LieElement Algebra::ad_power(const LieElement& u, int gen, int n) {
  if (n < 0) raise(ErrorCode::invalid, "ad_power needs n >= 0");
  LieElement g = generator(gen);
  LieElement acc = u;
  for (int i = 0; i < n; ++i) acc = bracket(acc, g);
  return acc;
}

LieElement Algebra::poly_action(const LieElement& u, const Polynomial& f, int gen) {
  check_element(u);
  check_same_field(field_, f.field(), "poly_action");
  LieElement result = zero();
  if (u.is_zero() || f.is_zero()) return result;
  LieElement g = generator(gen);
  LieElement cur = u;
  for (int i = 0;; ++i) {
    Scalar c = f.coeff(i);
    if (!c.is_zero()) result = add(result, scalar_mul(c, cur));
    if (i == f.degree()) break;
    cur = bracket(cur, g);
  }
  return result;
}

LieElement Algebra::left_normed(std::span<const LieElement> zs) {
  if (zs.empty()) raise(ErrorCode::invalid, "left_normed needs at least one element");
  LieElement acc = zs[0];
  for (size_t i = 1; i < zs.size(); ++i) acc = bracket(acc, zs[i]);
  return acc;
}

std::map<std::vector<std::int32_t>, LieElement> Algebra::homogeneous_components(const LieElement& u) const {
  check_element(u);
  std::map<std::vector<std::int32_t>, LieElement> out;
  for (const auto& [m, c] : u.terms_) {
    auto [it, inserted] = out.try_emplace(pool_.multidegree(m), LieElement(field_));
    it->second.terms_.emplace_back(m, c);
  }
  return out;
}

LieElement Algebra::truncate(const LieElement& u, int max_deg) const {
  check_element(u);
  LieElement out(field_);
  for (const auto& [m, c] : u.terms_)
    if (pool_.degree(m) <= max_deg) out.terms_.emplace_back(m, c);
  return out;
}

std::string Algebra::str(const LieElement& u) const {
  if (u.is_zero()) return "0";
  std::string out;
  for (auto it = u.terms_.rbegin(); it != u.terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    if (it->second.is_one())
      out += pool_.str(it->first);
    else
      out += it->second.str() + "*" + pool_.str(it->first);
  }
  return out;
}

}  // namespace freelie
