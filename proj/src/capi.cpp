#include "freelie.h"

#include <cstring>
#include <memory>
#include <string>

#include <json.hpp>

#include "freelie/json_io.hpp"

using namespace freelie;

struct fl_ctx {
  std::unique_ptr<Algebra> alg;
  std::string last_error;
};

struct fl_elem {
  LieElement value;
};

namespace {

thread_local std::string g_last_error;

int code_of(const Error& e) {
  switch (e.code()) {
    case ErrorCode::parse:
      return FL_ERR_PARSE;
    case ErrorCode::field_mismatch:
      return FL_ERR_FIELD_MISMATCH;
    case ErrorCode::domain:
      return FL_ERR_DOMAIN;
    case ErrorCode::rank:
      return FL_ERR_RANK;
    case ErrorCode::degree_cap:
      return FL_ERR_DEGREE_CAP;
    case ErrorCode::nonlinear:
      return FL_ERR_NONLINEAR;
    case ErrorCode::unbound_variable:
      return FL_ERR_UNBOUND_VARIABLE;
    case ErrorCode::internal_check:
      return FL_ERR_INTERNAL;
    case ErrorCode::invalid:
      return FL_ERR_INVALID;
  }
  return FL_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs fn, routing exceptions into status codes and the error slot.
template <typename Fn>
int guarded(std::string* error_slot, Fn&& fn) {
  try {
    fn();
    return FL_OK;
  } catch (const Error& e) {
    if (error_slot) *error_slot = e.what();
    return code_of(e);
  } catch (const std::exception& e) {
    if (error_slot) *error_slot = e.what();
    return FL_ERR_INTERNAL;
  }
}

template <typename Fn>
int ctx_guarded(fl_ctx* ctx, Fn&& fn) {
  if (!ctx) return FL_ERR_INVALID;
  return guarded(&ctx->last_error, std::forward<Fn>(fn));
}

int require(bool ok, fl_ctx* ctx, const char* msg) {
  if (ok) return FL_OK;
  if (ctx) ctx->last_error = msg;
  return FL_ERR_INVALID;
}

fl_elem* wrap(LieElement e) { return new fl_elem{std::move(e)}; }

int gen_index(fl_ctx* ctx, const char* name) {
  int g = ctx->alg->pool().gen_index_by_name(name ? name : "");
  if (g < 0) raise(ErrorCode::parse, "unknown generator '" + std::string(name ? name : "") + "'");
  return g;
}

}  // namespace

extern "C" {

int fl_ctx_new(int rank, const char* field, int degree_cap, fl_ctx** out) {
  if (!out) return FL_ERR_INVALID;
  *out = nullptr;
  return guarded(&g_last_error, [&] {
    Field f = Field::parse(field ? field : "q");
    int cap = degree_cap > 0 ? degree_cap : Algebra::kDefaultDegreeCap;
    auto ctx = std::make_unique<fl_ctx>();
    ctx->alg = std::make_unique<Algebra>(rank, f, cap);
    *out = ctx.release();
  });
}

void fl_ctx_free(fl_ctx* ctx) { delete ctx; }

int fl_ctx_rank(const fl_ctx* ctx) { return ctx ? ctx->alg->rank() : 0; }

const char* fl_ctx_field(const fl_ctx* ctx) {
  static thread_local std::string buf;
  if (!ctx) return "";
  buf = ctx->alg->field().str();
  return buf.c_str();
}

const char* fl_ctx_last_error(const fl_ctx* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

const char* fl_last_error(void) { return g_last_error.c_str(); }

const char* fl_strerror(int code) {
  switch (code) {
    case FL_OK:
      return "ok";
    case FL_ERR_PARSE:
      return "parse error";
    case FL_ERR_FIELD_MISMATCH:
      return "field mismatch";
    case FL_ERR_DOMAIN:
      return "input outside the operation's domain";
    case FL_ERR_RANK:
      return "rank too small";
    case FL_ERR_DEGREE_CAP:
      return "degree cap exceeded";
    case FL_ERR_NONLINEAR:
      return "system is not linear in its variables";
    case FL_ERR_UNBOUND_VARIABLE:
      return "unbound variable";
    case FL_ERR_INTERNAL:
      return "internal consistency check failed";
    case FL_ERR_INVALID:
      return "invalid argument";
    default:
      return "unknown error";
  }
}

void fl_elem_free(fl_elem* e) { delete e; }

void fl_string_free(char* s) { std::free(s); }

int fl_elem_parse(fl_ctx* ctx, const char* text, fl_elem** out) {
  if (int rc = require(out && text, ctx, "null argument")) return rc;
  return ctx_guarded(ctx, [&] { *out = wrap(parse_element(*ctx->alg, text)); });
}

int fl_elem_print(fl_ctx* ctx, const fl_elem* e, char** out) {
  if (int rc = require(out && e, ctx, "null argument")) return rc;
  return ctx_guarded(ctx, [&] { *out = dup_string(ctx->alg->str(e->value)); });
}

int fl_elem_zero(fl_ctx* ctx, fl_elem** out) {
  if (int rc = require(out != nullptr, ctx, "null argument")) return rc;
  return ctx_guarded(ctx, [&] { *out = wrap(ctx->alg->zero()); });
}

int fl_elem_add(fl_ctx* ctx, const fl_elem* u, const fl_elem* v, fl_elem** out) {
  if (int rc = require(out && u && v, ctx, "null argument")) return rc;
  return ctx_guarded(ctx, [&] { *out = wrap(ctx->alg->add(u->value, v->value)); });
}

int fl_elem_scalar_mul(fl_ctx* ctx, const char* scalar, const fl_elem* u, fl_elem** out) {
  if (int rc = require(out && scalar && u, ctx, "null argument")) return rc;
  return ctx_guarded(ctx, [&] {
    *out = wrap(ctx->alg->scalar_mul(Scalar::parse(ctx->alg->field(), scalar), u->value));
  });
}

int fl_elem_bracket(fl_ctx* ctx, const fl_elem* u, const fl_elem* v, fl_elem** out) {
  if (int rc = require(out && u && v, ctx, "null argument")) return rc;
  return ctx_guarded(ctx, [&] { *out = wrap(ctx->alg->bracket(u->value, v->value)); });
}

int fl_elem_equal(fl_ctx* ctx, const fl_elem* u, const fl_elem* v, int* out) {
  if (int rc = require(out && u && v, ctx, "null argument")) return rc;
  return ctx_guarded(ctx, [&] { *out = u->value == v->value ? 1 : 0; });
}

int fl_elem_is_zero(fl_ctx* ctx, const fl_elem* u, int* out) {
  if (int rc = require(out && u, ctx, "null argument")) return rc;
  return ctx_guarded(ctx, [&] { *out = u->value.is_zero() ? 1 : 0; });
}

int fl_elem_max_degree(fl_ctx* ctx, const fl_elem* u, int* out) {
  if (int rc = require(out && u, ctx, "null argument")) return rc;
  return ctx_guarded(ctx, [&] { *out = ctx->alg->max_degree(u->value); });
}

int fl_elem_truncate(fl_ctx* ctx, const fl_elem* u, int max_degree, fl_elem** out) {
  if (int rc = require(out && u, ctx, "null argument")) return rc;
  return ctx_guarded(ctx, [&] { *out = wrap(ctx->alg->truncate(u->value, max_degree)); });
}

int fl_elem_ad_power(fl_ctx* ctx, const fl_elem* u, const char* gen, int n, fl_elem** out) {
  if (int rc = require(out && u && gen, ctx, "null argument")) return rc;
  return ctx_guarded(ctx, [&] { *out = wrap(ctx->alg->ad_power(u->value, gen_index(ctx, gen), n)); });
}

int fl_elem_poly_action(fl_ctx* ctx, const fl_elem* u, const char* poly, const char* gen,
                        fl_elem** out) {
  if (int rc = require(out && u && poly && gen, ctx, "null argument")) return rc;
  return ctx_guarded(ctx, [&] {
    Polynomial f = Polynomial::parse(ctx->alg->field(), poly);
    *out = wrap(ctx->alg->poly_action(u->value, f, gen_index(ctx, gen)));
  });
}

int fl_hall_basis(fl_ctx* ctx, int max_degree, char** out) {
  if (int rc = require(out && max_degree >= 1, ctx, "need out and max_degree >= 1")) return rc;
  return ctx_guarded(ctx, [&] {
    if (max_degree > ctx->alg->degree_cap())
      raise(ErrorCode::degree_cap, "max degree " + std::to_string(max_degree) +
                                       " exceeds the cap " +
                                       std::to_string(ctx->alg->degree_cap()));
    std::string text;
    for (int n = 1; n <= max_degree; ++n)
      for (MonoId m : ctx->alg->pool().degree_slice(n)) text += ctx->alg->pool().str(m) + "\n";
    for (int n = 1; n <= max_degree; ++n)
      text += "# degree " + std::to_string(n) + ": " +
              std::to_string(ctx->alg->pool().degree_slice(n).size()) + "\n";
    *out = dup_string(text);
  });
}

int fl_witt_dimension(int rank, int degree, unsigned long long* out) {
  if (!out) return FL_ERR_INVALID;
  return guarded(&g_last_error, [&] { *out = witt_dimension(rank, degree); });
}

int fl_encode_poly(fl_ctx* ctx, const char* poly, const char* alpha, fl_elem** out) {
  if (int rc = require(out && poly, ctx, "null argument")) return rc;
  return ctx_guarded(ctx, [&] {
    Polynomial f = Polynomial::parse(ctx->alg->field(), poly);
    Scalar a = alpha && *alpha ? Scalar::parse(ctx->alg->field(), alpha)
                               : Scalar::zero(ctx->alg->field());
    *out = wrap(encode_poly(*ctx->alg, f, a).element);
  });
}

int fl_decode_poly(fl_ctx* ctx, const fl_elem* u, char** poly_out, char** alpha_out) {
  if (int rc = require(u && poly_out && alpha_out, ctx, "null argument")) return rc;
  return ctx_guarded(ctx, [&] {
    auto [f, a] = decode_poly(*ctx->alg, u->value);
    *poly_out = dup_string(f.str());
    *alpha_out = dup_string(a.str());
  });
}

int fl_equiv(fl_ctx* ctx, const fl_elem* u, const fl_elem* v, int* out) {
  if (int rc = require(out && u && v, ctx, "null argument")) return rc;
  return ctx_guarded(ctx, [&] { *out = equiv(*ctx->alg, u->value, v->value) ? 1 : 0; });
}

int fl_witness_s(fl_ctx* ctx, const fl_elem* r, int m, int n, fl_elem** out) {
  if (int rc = require(out && r, ctx, "null argument")) return rc;
  return ctx_guarded(ctx, [&] { *out = wrap(witness_s(*ctx->alg, r->value, m, n)); });
}

int fl_witness_t(fl_ctx* ctx, const fl_elem* r, int m, int n, fl_elem** out) {
  if (int rc = require(out && r, ctx, "null argument")) return rc;
  return ctx_guarded(ctx, [&] { *out = wrap(witness_t(*ctx->alg, r->value, m, n)); });
}

int fl_check_phi(fl_ctx* ctx, const fl_elem* x, const fl_elem* y, const fl_elem* z,
                 const fl_elem* z1, const fl_elem* z2, int* out) {
  if (int rc = require(out && x && y && z && z1 && z2, ctx, "null argument")) return rc;
  return ctx_guarded(ctx, [&] {
    *out = check_phi(*ctx->alg, x->value, y->value, z->value, z1->value, z2->value) ? 1 : 0;
  });
}

int fl_psi_witness(fl_ctx* ctx, const char* poly, const char* alpha, const char* beta,
                   fl_elem** x, fl_elem** y, fl_elem** z, fl_elem** z1, fl_elem** z2) {
  if (int rc = require(poly && x && y && z && z1 && z2, ctx, "null argument")) return rc;
  return ctx_guarded(ctx, [&] {
    const Field& f = ctx->alg->field();
    PhiWitness w = psi_witness(*ctx->alg, Polynomial::parse(f, poly),
                               alpha && *alpha ? Scalar::parse(f, alpha) : Scalar::zero(f),
                               beta && *beta ? Scalar::parse(f, beta) : Scalar::zero(f));
    *x = wrap(std::move(w.x));
    *y = wrap(std::move(w.y));
    *z = wrap(std::move(w.z));
    *z1 = wrap(std::move(w.z1));
    *z2 = wrap(std::move(w.z2));
  });
}

int fl_check_oplus(fl_ctx* ctx, const fl_elem* u, const fl_elem* v, const fl_elem* w, int* out) {
  if (int rc = require(out && u && v && w, ctx, "null argument")) return rc;
  return ctx_guarded(ctx, [&] { *out = check_oplus(*ctx->alg, u->value, v->value, w->value) ? 1 : 0; });
}

int fl_otimes_check(fl_ctx* ctx, const char* f, const char* g, const char* h, int* out) {
  if (int rc = require(out && f && g && h, ctx, "null argument")) return rc;
  return ctx_guarded(ctx, [&] {
    const Field& fd = ctx->alg->field();
    *out = otimes_check(*ctx->alg, Polynomial::parse(fd, f), Polynomial::parse(fd, g),
                        Polynomial::parse(fd, h))
               ? 1
               : 0;
  });
}

int fl_check_field_add(fl_ctx* ctx, const char* x, const char* y, const char* z, int* out) {
  if (int rc = require(out && x && y && z, ctx, "null argument")) return rc;
  return ctx_guarded(ctx, [&] {
    const Field& f = ctx->alg->field();
    *out = check_field_add(*ctx->alg, encode_field(*ctx->alg, Scalar::parse(f, x)),
                           encode_field(*ctx->alg, Scalar::parse(f, y)),
                           encode_field(*ctx->alg, Scalar::parse(f, z)))
               ? 1
               : 0;
  });
}

int fl_check_field_mul(fl_ctx* ctx, const char* x, const char* y, const char* z, int* out) {
  if (int rc = require(out && x && y && z, ctx, "null argument")) return rc;
  return ctx_guarded(ctx, [&] {
    const Field& f = ctx->alg->field();
    *out = check_field_mul(*ctx->alg, encode_field(*ctx->alg, Scalar::parse(f, x)),
                           encode_field(*ctx->alg, Scalar::parse(f, y)),
                           encode_field(*ctx->alg, Scalar::parse(f, z)))
               ? 1
               : 0;
  });
}

int fl_check_scalar_action(fl_ctx* ctx, const fl_elem* x, const char* alpha, const fl_elem* z,
                           int* out) {
  if (int rc = require(out && x && alpha && z, ctx, "null argument")) return rc;
  return ctx_guarded(ctx, [&] {
    *out = check_scalar_action(*ctx->alg, x->value,
                               encode_field(*ctx->alg, Scalar::parse(ctx->alg->field(), alpha)),
                               z->value)
               ? 1
               : 0;
  });
}

int fl_system_compile(const char* poly_system_json, char** out) {
  if (!poly_system_json || !out) return FL_ERR_INVALID;
  return guarded(&g_last_error, [&] {
    PolySystemDoc doc = poly_system_doc_from_json(poly_system_json);
    Algebra alg(3, doc.field);
    CompiledSystem compiled = compile_poly_system(alg, parse_poly_system(doc));
    SystemDoc sdoc = system_to_doc(alg, compiled.system);
    sdoc.mapping_json = compiled_mapping_json(compiled);
    *out = dup_string(system_doc_to_json(sdoc));
  });
}

int fl_system_solve_truncated(const char* system_json, int degree, char** report_out) {
  if (!system_json || !report_out) return FL_ERR_INVALID;
  return guarded(&g_last_error, [&] {
    SystemDoc doc = system_doc_from_json(system_json);
    Algebra alg(doc.rank, doc.field, doc.degree_cap);
    EquationSystem sys = parse_system(alg, doc);
    TruncatedSolution sol = truncated_solve(alg, sys, degree);

    nlohmann::ordered_json rep;
    rep["type"] = "solve-report";
    rep["degree"] = degree;
    rep["feasible"] = sol.feasible;
    rep["kernel_dimension"] = sol.kernel.dimension();
    if (!sol.particular.empty()) {
      nlohmann::ordered_json p = nlohmann::ordered_json::object();
      for (const auto& [v, e] : sol.kernel.decode(alg, sol.particular)) p[v] = alg.str(e);
      rep["particular"] = p;
    }
    rep["kernel"] = nlohmann::ordered_json::array();
    for (const auto& vec : sol.kernel.vectors) {
      nlohmann::ordered_json p = nlohmann::ordered_json::object();
      for (const auto& [v, e] : sol.kernel.decode(alg, vec)) p[v] = alg.str(e);
      rep["kernel"].push_back(p);
    }
    *report_out = dup_string(rep.dump(2));
  });
}

int fl_system_verify(const char* system_json, const char* assignment_json, char** report_out,
                     int* pass) {
  if (!system_json || !assignment_json || !report_out || !pass) return FL_ERR_INVALID;
  return guarded(&g_last_error, [&] {
    SystemDoc doc = system_doc_from_json(system_json);
    Algebra alg(doc.rank, doc.field, doc.degree_cap);
    EquationSystem sys = parse_system(alg, doc);
    Assignment sigma = assignment_from_json(alg, assignment_json);
    SystemReport report = check_system(alg, sys, sigma);

    nlohmann::ordered_json rep;
    rep["type"] = "verify-report";
    rep["pass"] = report.pass;
    rep["equations"] = nlohmann::ordered_json::array();
    for (size_t i = 0; i < report.equations.size(); ++i) {
      const EquationReport& er = report.equations[i];
      rep["equations"].push_back(nlohmann::ordered_json{
          {"lhs", doc.equations[i].first},
          {"rhs", doc.equations[i].second},
          {"pass", er.pass},
          {"residual", alg.str(er.residual)}});
    }
    *report_out = dup_string(rep.dump(2));
    *pass = report.pass ? 1 : 0;
  });
}

}  // extern "C"
