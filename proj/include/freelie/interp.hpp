#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "freelie/algebra.hpp"

namespace freelie {

// --- Field interpretation (rank >= 2) ---------------------------------------
//
// A scalar alpha is represented by the tuple (alpha*a1, ..., alpha*an); the
// defining equation systems are
//   A:  [y_i, a_i] = 0              for all i
//   A0: [y_i, a_j] = [a_i, y_j]     for all i, j
// and field arithmetic / the scalar action are checked by evaluating the
// corresponding bracket systems in normal form.

struct FieldCode {
  std::vector<LieElement> components;  // size = rank
};

FieldCode encode_field(Algebra& alg, const Scalar& alpha);
Scalar decode_field(Algebra& alg, const FieldCode& code);  // throws domain on non-members

bool field_code_in_A(Algebra& alg, const FieldCode& code);
bool field_code_in_A0(Algebra& alg, const FieldCode& code);

bool check_field_add(Algebra& alg, const FieldCode& x, const FieldCode& y, const FieldCode& z);
bool check_field_mul(Algebra& alg, const FieldCode& x, const FieldCode& y, const FieldCode& z);
bool check_scalar_action(Algebra& alg, const LieElement& x, const FieldCode& y, const LieElement& z);

// --- Polynomial-ring interpretation (rank >= 3) ------------------------------
//
// X = { [b, f(a^2)] + alpha*a : f in K[t], alpha in K }. The class of an
// element of X under u ~ v <=> [u - v, a] = 0 determines f.

struct PolyCode {
  LieElement element;
  Polynomial f;
  Scalar alpha;
};

PolyCode encode_poly(Algebra& alg, const Polynomial& f, const Scalar& alpha);
// Reads (f, alpha) off the coordinates on a and [b, a^(2k)]; throws domain if
// the element has support outside that span.
std::pair<Polynomial, Scalar> decode_poly(Algebra& alg, const LieElement& u);
bool in_X(Algebra& alg, const LieElement& u);

// u ~ v  <=>  [u - v, a] = 0.
bool equiv(Algebra& alg, const LieElement& u, const LieElement& v);

// Witness s for  [[r,a^(m)],[b,a^(2n)]] = [[r,a^(m+2n)],b] + [s,a],
// built by the inductive reduction and re-verified exactly before returning.
LieElement witness_s(Algebra& alg, const LieElement& r, int m, int n);
// Witness t for  [[r,a^(m)],[b,a^(2n+1)]] = -[[r,a^(m+2n+1)],b] + [t,a].
LieElement witness_t(Algebra& alg, const LieElement& r, int m, int n);
// Same identities with an arbitrary generator in place of b.
LieElement witness_s_for(Algebra& alg, const LieElement& r, int m, int n, int partner_gen);
LieElement witness_t_for(Algebra& alg, const LieElement& r, int m, int n, int partner_gen);

// The linear system phi(x, y, z, z1, z2):
//   [x,c] + [y,b] = [z,a],  [x,b] = [z1,a],  [y,c] = [z2,a].
bool check_phi(Algebra& alg, const LieElement& x, const LieElement& y, const LieElement& z,
               const LieElement& z1, const LieElement& z2);

struct PhiWitness {
  LieElement x, y, z, z1, z2;
};

// Solution of phi with x = [b, f(a^2)] + alpha*a, y = [c, f(a^2)] + beta*a,
// assembled monomial-by-monomial from the witness recursions and verified by
// check_phi.
PhiWitness psi_witness(Algebra& alg, const Polynomial& f, const Scalar& alpha, const Scalar& beta);

// Addition on X/~.
PolyCode oplus(Algebra& alg, const PolyCode& u, const PolyCode& v);
bool check_oplus(Algebra& alg, const LieElement& u, const LieElement& v, const LieElement& w);

// Multiplication congruence:  [[b,f(a^2)],[c,g(a^2)]] - [[b,h(a^2)],c] must
// be a bracket with a, i.e. lie in the image of ad_a (checked exactly).
bool otimes_check(Algebra& alg, const Polynomial& f, const Polynomial& g, const Polynomial& h);
PolyCode otimes(Algebra& alg, const PolyCode& u, const PolyCode& v);

// Exact solve of [s, g] = target for s (per multidegree component); nullopt
// if target is not in the image of ad_g.
std::optional<LieElement> solve_ad_image(Algebra& alg, const LieElement& target, int gen);

}  // namespace freelie
