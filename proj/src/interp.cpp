#include "freelie/interp.hpp"

#include <algorithm>
#include <map>

#include "freelie/linalg.hpp"

namespace freelie {

namespace {

void require_rank(const Algebra& alg, int rank, const char* what) {
  if (alg.rank() < rank)
    raise(ErrorCode::rank, std::string(what) + " needs rank >= " + std::to_string(rank));
}

constexpr int kA = 0, kB = 1, kC = 2;

}  // namespace

FieldCode encode_field(Algebra& alg, const Scalar& alpha) {
  check_same_field(alg.field(), alpha.field(), "encode_field");
  require_rank(alg, 2, "field interpretation");
  FieldCode code;
  code.components.reserve(static_cast<size_t>(alg.rank()));
  for (int i = 0; i < alg.rank(); ++i)
    code.components.push_back(alg.monomial(alg.pool().generator(i), alpha));
  return code;
}

bool field_code_in_A(Algebra& alg, const FieldCode& code) {
  require_rank(alg, 2, "field interpretation");
  if (static_cast<int>(code.components.size()) != alg.rank()) return false;
  for (int i = 0; i < alg.rank(); ++i)
    if (!alg.bracket(code.components[static_cast<size_t>(i)], alg.generator(i)).is_zero()) return false;
  return true;
}

bool field_code_in_A0(Algebra& alg, const FieldCode& code) {
  if (!field_code_in_A(alg, code)) return false;
  for (int i = 0; i < alg.rank(); ++i)
    for (int j = 0; j < alg.rank(); ++j) {
      LieElement lhs = alg.bracket(code.components[static_cast<size_t>(i)], alg.generator(j));
      LieElement rhs = alg.bracket(alg.generator(i), code.components[static_cast<size_t>(j)]);
      if (lhs != rhs) return false;
    }
  return true;
}

namespace {

void require_member(Algebra& alg, const FieldCode& code, const char* what) {
  if (!field_code_in_A0(alg, code))
    raise(ErrorCode::domain, std::string(what) + ": tuple fails the A/A0 membership systems");
}

}  // namespace

Scalar decode_field(Algebra& alg, const FieldCode& code) {
  require_member(alg, code, "decode_field");
  const LieElement& y1 = code.components[0];
  Scalar alpha = y1.coeff(alg.pool().generator(0));
  for (int i = 0; i < alg.rank(); ++i) {
    if (code.components[static_cast<size_t>(i)] != alg.monomial(alg.pool().generator(i), alpha))
      raise(ErrorCode::internal_check, "decode_field: membership held but tuple is not alpha*(a_1,...,a_n)");
  }
  return alpha;
}

bool check_field_add(Algebra& alg, const FieldCode& x, const FieldCode& y, const FieldCode& z) {
  require_member(alg, x, "check_field_add");
  require_member(alg, y, "check_field_add");
  require_member(alg, z, "check_field_add");
  for (int i = 0; i < alg.rank(); ++i) {
    LieElement sum = alg.add(x.components[static_cast<size_t>(i)], y.components[static_cast<size_t>(i)]);
    if (sum != z.components[static_cast<size_t>(i)]) return false;
  }
  return true;
}

bool check_field_mul(Algebra& alg, const FieldCode& x, const FieldCode& y, const FieldCode& z) {
  require_member(alg, x, "check_field_mul");
  require_member(alg, y, "check_field_mul");
  require_member(alg, z, "check_field_mul");
  for (int i = 0; i < alg.rank(); ++i)
    for (int j = 0; j < alg.rank(); ++j) {
      LieElement lhs = alg.bracket(x.components[static_cast<size_t>(i)], y.components[static_cast<size_t>(j)]);
      LieElement rhs = alg.bracket(z.components[static_cast<size_t>(i)], alg.generator(j));
      if (lhs != rhs) return false;
    }
  return true;
}

bool check_scalar_action(Algebra& alg, const LieElement& x, const FieldCode& y, const LieElement& z) {
  require_member(alg, y, "check_scalar_action");
  alg.check_element(x);
  alg.check_element(z);
  for (int i = 0; i < alg.rank(); ++i) {
    LieElement lhs = alg.bracket(z, alg.generator(i));
    LieElement rhs = alg.bracket(x, y.components[static_cast<size_t>(i)]);
    if (lhs != rhs) return false;
  }
  return true;
}

PolyCode encode_poly(Algebra& alg, const Polynomial& f, const Scalar& alpha) {
  require_rank(alg, 3, "polynomial interpretation");
  check_same_field(alg.field(), f.field(), "encode_poly");
  check_same_field(alg.field(), alpha.field(), "encode_poly");
  LieElement e = alg.poly_action(alg.generator(kB), even_expand(f), kA);
  e = alg.add(e, alg.monomial(alg.pool().generator(kA), alpha));
  return PolyCode{std::move(e), f, alpha};
}

std::pair<Polynomial, Scalar> decode_poly(Algebra& alg, const LieElement& u) {
  require_rank(alg, 3, "polynomial interpretation");
  alg.check_element(u);
  const MonomialPool& pool = alg.pool();
  Scalar alpha = Scalar::zero(alg.field());
  std::vector<Scalar> coeffs;
  auto bump = [&](int power, const Scalar& c) {
    if (static_cast<int>(coeffs.size()) <= power)
      coeffs.resize(static_cast<size_t>(power) + 1, Scalar::zero(alg.field()));
    coeffs[static_cast<size_t>(power)] = c;
  };

  for (const auto& [m, c] : u.terms()) {
    if (pool.is_leaf(m)) {
      int g = pool.gen_index(m);
      if (g == kA) {
        alpha = c;
        continue;
      }
      if (g == kB) {
        bump(0, c);
        continue;
      }
      raise(ErrorCode::domain, "decode_poly: element has a term on " + pool.str(m));
    }
    // expect [b, a^(2k)]: a left spine of a's under a b leaf
    MonoId cur = m;
    int k = 0;
    while (!pool.is_leaf(cur)) {
      MonoId r = pool.right(cur);
      if (!pool.is_leaf(r) || pool.gen_index(r) != kA)
        raise(ErrorCode::domain, "decode_poly: element has a term on " + pool.str(m));
      ++k;
      cur = pool.left(cur);
    }
    if (pool.gen_index(cur) != kB || k % 2 != 0)
      raise(ErrorCode::domain, "decode_poly: element has a term on " + pool.str(m));
    bump(k / 2, c);
  }
  return {Polynomial::from_coeffs(alg.field(), std::move(coeffs)), alpha};
}

bool in_X(Algebra& alg, const LieElement& u) {
  try {
    decode_poly(alg, u);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::domain) return false;
    throw;
  }
}

bool equiv(Algebra& alg, const LieElement& u, const LieElement& v) {
  require_rank(alg, 3, "polynomial interpretation");
  return alg.bracket(alg.sub(u, v), alg.generator(kA)).is_zero();
}

namespace {

LieElement witness_s_impl(Algebra& alg, const LieElement& r, int m, int n, int partner) {
  if (n == 0) return alg.zero();
  // s = [[r,a^(m)],[g,a^(2n-1)]] - [[r,a^(m+1)],[g,a^(2n-2)]] + s1,
  // with s1 the witness for (m+2, n-1).
  LieElement g = alg.generator(partner);
  LieElement s = alg.bracket(alg.ad_power(r, kA, m), alg.ad_power(g, kA, 2 * n - 1));
  s = alg.sub(s, alg.bracket(alg.ad_power(r, kA, m + 1), alg.ad_power(g, kA, 2 * n - 2)));
  return alg.add(s, witness_s_impl(alg, r, m + 2, n - 1, partner));
}

}  // namespace

LieElement witness_s_for(Algebra& alg, const LieElement& r, int m, int n, int partner_gen) {
  require_rank(alg, 3, "witness_s");
  alg.check_element(r);
  if (m < 0 || n < 0) raise(ErrorCode::invalid, "witness_s needs m, n >= 0");
  LieElement s = witness_s_impl(alg, r, m, n, partner_gen);
  LieElement g = alg.generator(partner_gen);
  LieElement lhs = alg.bracket(alg.ad_power(r, kA, m), alg.ad_power(g, kA, 2 * n));
  LieElement rhs = alg.add(alg.bracket(alg.ad_power(r, kA, m + 2 * n), g),
                           alg.bracket(s, alg.generator(kA)));
  if (lhs != rhs) raise(ErrorCode::internal_check, "witness_s verification failed");
  return s;
}

LieElement witness_s(Algebra& alg, const LieElement& r, int m, int n) {
  return witness_s_for(alg, r, m, n, kB);
}

LieElement witness_t_for(Algebra& alg, const LieElement& r, int m, int n, int partner_gen) {
  require_rank(alg, 3, "witness_t");
  alg.check_element(r);
  if (m < 0 || n < 0) raise(ErrorCode::invalid, "witness_t needs m, n >= 0");
  // t = [[r,a^(m)],[g,a^(2n)]] - s', where s' witnesses the (m+1, n) even case.
  LieElement g = alg.generator(partner_gen);
  LieElement t = alg.bracket(alg.ad_power(r, kA, m), alg.ad_power(g, kA, 2 * n));
  t = alg.sub(t, witness_s_for(alg, r, m + 1, n, partner_gen));
  LieElement lhs = alg.bracket(alg.ad_power(r, kA, m), alg.ad_power(g, kA, 2 * n + 1));
  LieElement rhs = alg.add(alg.negate(alg.bracket(alg.ad_power(r, kA, m + 2 * n + 1), g)),
                           alg.bracket(t, alg.generator(kA)));
  if (lhs != rhs) raise(ErrorCode::internal_check, "witness_t verification failed");
  return t;
}

LieElement witness_t(Algebra& alg, const LieElement& r, int m, int n) {
  return witness_t_for(alg, r, m, n, kB);
}

bool check_phi(Algebra& alg, const LieElement& x, const LieElement& y, const LieElement& z,
               const LieElement& z1, const LieElement& z2) {
  require_rank(alg, 3, "check_phi");
  LieElement a = alg.generator(kA), b = alg.generator(kB), c = alg.generator(kC);
  if (alg.add(alg.bracket(x, c), alg.bracket(y, b)) != alg.bracket(z, a)) return false;
  if (alg.bracket(x, b) != alg.bracket(z1, a)) return false;
  if (alg.bracket(y, c) != alg.bracket(z2, a)) return false;
  return true;
}

PhiWitness psi_witness(Algebra& alg, const Polynomial& f, const Scalar& alpha, const Scalar& beta) {
  require_rank(alg, 3, "psi_witness");
  check_same_field(alg.field(), f.field(), "psi_witness");
  check_same_field(alg.field(), alpha.field(), "psi_witness");
  check_same_field(alg.field(), beta.field(), "psi_witness");

  LieElement b = alg.generator(kB), c = alg.generator(kC);
  PhiWitness w;
  w.x = encode_poly(alg, f, alpha).element;
  w.y = alg.add(alg.poly_action(c, even_expand(f), kA),
                alg.monomial(alg.pool().generator(kA), beta));
  w.z = alg.zero();
  w.z1 = alg.zero();
  w.z2 = alg.zero();

  // Monomial t^n contributes ([b,a^(2n)], [c,a^(2n)]); witnesses come from
  // the even/odd split of 0 = [[g,a^(n)],[g,a^(n)]] and from anticommuting
  // [b,a^(2n)] against c.
  for (int n = 0; n <= f.degree(); ++n) {
    Scalar fn = f.coeff(n);
    if (fn.is_zero()) continue;
    LieElement zn = alg.negate(witness_s_for(alg, c, 0, n, kB));
    LieElement z1n = n % 2 == 0 ? alg.negate(witness_s_for(alg, b, n, n / 2, kB))
                                : witness_t_for(alg, b, n, (n - 1) / 2, kB);
    LieElement z2n = n % 2 == 0 ? alg.negate(witness_s_for(alg, c, n, n / 2, kC))
                                : witness_t_for(alg, c, n, (n - 1) / 2, kC);
    w.z = alg.add(w.z, alg.scalar_mul(fn, zn));
    w.z1 = alg.add(w.z1, alg.scalar_mul(fn, z1n));
    w.z2 = alg.add(w.z2, alg.scalar_mul(fn, z2n));
  }
  // Scalar pair (alpha*a, beta*a) solves phi with (-alpha*c - beta*b, -alpha*b, -beta*c).
  w.z = alg.add(w.z, alg.add(alg.scalar_mul(-alpha, c), alg.scalar_mul(-beta, b)));
  w.z1 = alg.add(w.z1, alg.scalar_mul(-alpha, b));
  w.z2 = alg.add(w.z2, alg.scalar_mul(-beta, c));

  if (!check_phi(alg, w.x, w.y, w.z, w.z1, w.z2))
    raise(ErrorCode::internal_check, "psi_witness verification failed");
  return w;
}

PolyCode oplus(Algebra& alg, const PolyCode& u, const PolyCode& v) {
  PolyCode out;
  out.element = alg.add(u.element, v.element);
  out.f = u.f + v.f;
  out.alpha = u.alpha + v.alpha;
  return out;
}

bool check_oplus(Algebra& alg, const LieElement& u, const LieElement& v, const LieElement& w) {
  decode_poly(alg, u);  // membership
  decode_poly(alg, v);
  decode_poly(alg, w);
  return equiv(alg, w, alg.add(u, v));
}

bool otimes_check(Algebra& alg, const Polynomial& f, const Polynomial& g, const Polynomial& h) {
  require_rank(alg, 3, "otimes_check");
  LieElement bf = alg.poly_action(alg.generator(kB), even_expand(f), kA);
  LieElement cg = alg.poly_action(alg.generator(kC), even_expand(g), kA);
  LieElement bh = alg.poly_action(alg.generator(kB), even_expand(h), kA);
  LieElement diff = alg.sub(alg.bracket(bf, cg), alg.bracket(bh, alg.generator(kC)));
  return solve_ad_image(alg, diff, kA).has_value();
}

PolyCode otimes(Algebra& alg, const PolyCode& u, const PolyCode& v) {
  Polynomial h = u.f * v.f;
  if (!otimes_check(alg, u.f, v.f, h))
    raise(ErrorCode::internal_check, "otimes: product polynomial fails the congruence");
  return encode_poly(alg, h, Scalar::zero(alg.field()));
}

std::optional<LieElement> solve_ad_image(Algebra& alg, const LieElement& target, int gen) {
  alg.check_element(target);
  if (target.is_zero()) return alg.zero();
  LieElement g = alg.generator(gen);
  LieElement s = alg.zero();
  for (const auto& [mdeg, comp] : alg.homogeneous_components(target)) {
    if (mdeg[static_cast<size_t>(gen)] == 0) return std::nullopt;
    int deg = 0;
    for (int d : mdeg) deg += d;
    if (deg <= 1) return std::nullopt;  // brackets have degree >= 2
    std::vector<std::int32_t> want = mdeg;
    want[static_cast<size_t>(gen)] -= 1;
    const std::vector<MonoId>& cands = alg.pool().multidegree_slice(want);
    if (cands.empty()) return std::nullopt;

    // rows = support of the component plus of all candidate brackets
    std::vector<LieElement> images;
    images.reserve(cands.size());
    std::map<MonoId, int> row_of;
    auto touch = [&](const LieElement& e) {
      for (const auto& [m, c] : e.terms()) row_of.emplace(m, 0);
    };
    for (MonoId m : cands) {
      images.push_back(alg.bracket(alg.monomial(m, alg.scalar_one()), g));
      touch(images.back());
    }
    touch(comp);
    int nrows = 0;
    for (auto& [m, idx] : row_of) idx = nrows++;

    Matrix A(nrows, static_cast<int>(cands.size()), alg.field());
    for (size_t j = 0; j < cands.size(); ++j)
      for (const auto& [m, c] : images[j].terms()) A.at(row_of[m], static_cast<int>(j)) = c;
    std::vector<Scalar> rhs(static_cast<size_t>(nrows), Scalar::zero(alg.field()));
    for (const auto& [m, c] : comp.terms()) rhs[static_cast<size_t>(row_of[m])] = c;

    auto x = solve(A, rhs);
    if (!x) return std::nullopt;
    for (size_t j = 0; j < cands.size(); ++j)
      s = alg.add(s, alg.monomial(cands[j], (*x)[j]));
  }
  return s;
}

}  // namespace freelie
