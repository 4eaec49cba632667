// Command-line frontend for the freelie kernel. Everything goes through the
// C API in freelie.h; exit codes: 0 pass/success, 1 failed boolean check,
// 2 error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "freelie.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct CtxOptions {
  int rank = 3;
  std::string field = "q";
  int degree_cap = 0;
};

struct CtxHandle {
  fl_ctx* ctx = nullptr;
  ~CtxHandle() { fl_ctx_free(ctx); }
};

struct ElemHandle {
  fl_elem* e = nullptr;
  ~ElemHandle() { fl_elem_free(e); }
};

int fail(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kExitError;
}

int fail_ctx(const fl_ctx* ctx, int rc) {
  std::string msg = ctx ? fl_ctx_last_error(ctx) : "";
  if (msg.empty()) msg = fl_last_error();
  if (msg.empty()) msg = fl_strerror(rc);
  return fail(msg);
}

bool open_ctx(const CtxOptions& opt, CtxHandle& h) {
  return fl_ctx_new(opt.rank, opt.field.c_str(), opt.degree_cap, &h.ctx) == FL_OK;
}

bool parse_elem(fl_ctx* ctx, const std::string& text, ElemHandle& out) {
  return fl_elem_parse(ctx, text.c_str(), &out.e) == FL_OK;
}

void print_owned(char* s) {
  std::string text(s);
  fl_string_free(s);
  std::cout << text;
  if (!text.empty() && text.back() != '\n') std::cout << "\n";
}

std::string print_elem_line(fl_ctx* ctx, const fl_elem* e) {
  char* s = nullptr;
  if (fl_elem_print(ctx, e, &s) != FL_OK) return "";
  std::string out(s);
  fl_string_free(s);
  return out;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out);
}

int bool_exit(int value) { return value ? kExitPass : kExitFail; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flie - exact free Lie algebra kernel"};
  app.require_subcommand(1);
  app.fallthrough();

  CtxOptions opt;
  app.add_option("--rank", opt.rank, "number of generators (default 3)");
  app.add_option("--field", opt.field, "coefficient field: q or fp:P (default q)");
  app.add_option("--degree-cap", opt.degree_cap, "max product degree (default 24)");

  int exit_code = kExitPass;

  // hall-basis
  int max_degree = 1;
  auto* cmd_hall = app.add_subcommand("hall-basis", "list Hall basis monomials up to a degree");
  cmd_hall->add_option("--max-degree", max_degree, "largest degree to list")->required();
  cmd_hall->callback([&] {
    CtxHandle h;
    if (!open_ctx(opt, h)) {
      exit_code = fail(fl_last_error());
      return;
    }
    char* text = nullptr;
    int rc = fl_hall_basis(h.ctx, max_degree, &text);
    if (rc != FL_OK) {
      exit_code = fail_ctx(h.ctx, rc);
      return;
    }
    print_owned(text);
  });

  // dims
  int dims_max_degree = 1;
  auto* cmd_dims = app.add_subcommand("dims", "per-degree dimensions (Witt formula)");
  cmd_dims->add_option("--max-degree", dims_max_degree, "largest degree")->required();
  cmd_dims->callback([&] {
    for (int n = 1; n <= dims_max_degree; ++n) {
      unsigned long long d = 0;
      int rc = fl_witt_dimension(opt.rank, n, &d);
      if (rc != FL_OK) {
        exit_code = fail(fl_last_error());
        return;
      }
      std::cout << n << " " << d << "\n";
    }
  });

  // nf
  std::string nf_term;
  auto* cmd_nf = app.add_subcommand("nf", "normal form of a bracket expression");
  cmd_nf->add_option("term", nf_term, "term text")->required();
  cmd_nf->callback([&] {
    CtxHandle h;
    if (!open_ctx(opt, h)) {
      exit_code = fail(fl_last_error());
      return;
    }
    ElemHandle e;
    if (!parse_elem(h.ctx, nf_term, e)) {
      exit_code = fail_ctx(h.ctx, FL_ERR_PARSE);
      return;
    }
    std::cout << print_elem_line(h.ctx, e.e) << "\n";
  });

  // bracket
  std::string br_u, br_v;
  auto* cmd_bracket = app.add_subcommand("bracket", "normal form of [u, v]");
  cmd_bracket->add_option("u", br_u)->required();
  cmd_bracket->add_option("v", br_v)->required();
  cmd_bracket->callback([&] {
    CtxHandle h;
    if (!open_ctx(opt, h)) {
      exit_code = fail(fl_last_error());
      return;
    }
    ElemHandle u, v, w;
    if (!parse_elem(h.ctx, br_u, u) || !parse_elem(h.ctx, br_v, v)) {
      exit_code = fail_ctx(h.ctx, FL_ERR_PARSE);
      return;
    }
    int rc = fl_elem_bracket(h.ctx, u.e, v.e, &w.e);
    if (rc != FL_OK) {
      exit_code = fail_ctx(h.ctx, rc);
      return;
    }
    std::cout << print_elem_line(h.ctx, w.e) << "\n";
  });

  // witness-s / witness-t
  std::string wit_r;
  int wit_m = 0, wit_n = 0;
  auto add_witness = [&](const char* name, const char* help, auto fn) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("--r", wit_r, "element r")->required();
    cmd->add_option("--m", wit_m, "exponent m")->required();
    cmd->add_option("--n", wit_n, "exponent n")->required();
    cmd->callback([&, fn] {
      CtxHandle h;
      if (!open_ctx(opt, h)) {
        exit_code = fail(fl_last_error());
        return;
      }
      ElemHandle r, s;
      if (!parse_elem(h.ctx, wit_r, r)) {
        exit_code = fail_ctx(h.ctx, FL_ERR_PARSE);
        return;
      }
      int rc = fn(h.ctx, r.e, wit_m, wit_n, &s.e);
      if (rc != FL_OK) {
        exit_code = fail_ctx(h.ctx, rc);
        return;
      }
      std::cout << print_elem_line(h.ctx, s.e) << "\n";
    });
  };
  add_witness("witness-s", "witness for [[r,a^(m)],[b,a^(2n)]] = [[r,a^(m+2n)],b] + [s,a]",
              fl_witness_s);
  add_witness("witness-t", "witness for [[r,a^(m)],[b,a^(2n+1)]] = -[[r,a^(m+2n+1)],b] + [t,a]",
              fl_witness_t);

  // encode
  std::string enc_poly, enc_alpha = "0";
  auto* cmd_encode = app.add_subcommand("encode", "encode (f, alpha) as [b,f(a^2)] + alpha*a");
  cmd_encode->add_option("--poly", enc_poly, "polynomial f")->required();
  cmd_encode->add_option("--alpha", enc_alpha, "scalar alpha (default 0)");
  cmd_encode->callback([&] {
    CtxHandle h;
    if (!open_ctx(opt, h)) {
      exit_code = fail(fl_last_error());
      return;
    }
    ElemHandle e;
    int rc = fl_encode_poly(h.ctx, enc_poly.c_str(), enc_alpha.c_str(), &e.e);
    if (rc != FL_OK) {
      exit_code = fail_ctx(h.ctx, rc);
      return;
    }
    std::cout << print_elem_line(h.ctx, e.e) << "\n";
  });

  // decode
  std::string dec_elem;
  auto* cmd_decode = app.add_subcommand("decode", "read (f, alpha) off an element of X");
  cmd_decode->add_option("element", dec_elem)->required();
  cmd_decode->callback([&] {
    CtxHandle h;
    if (!open_ctx(opt, h)) {
      exit_code = fail(fl_last_error());
      return;
    }
    ElemHandle e;
    if (!parse_elem(h.ctx, dec_elem, e)) {
      exit_code = fail_ctx(h.ctx, FL_ERR_PARSE);
      return;
    }
    char* f = nullptr;
    char* a = nullptr;
    int rc = fl_decode_poly(h.ctx, e.e, &f, &a);
    if (rc != FL_OK) {
      exit_code = fail_ctx(h.ctx, rc);
      return;
    }
    std::cout << "f = " << f << "\n";
    std::cout << "alpha = " << a << "\n";
    fl_string_free(f);
    fl_string_free(a);
  });

  // psi-witness
  std::string psi_poly, psi_alpha = "0", psi_beta = "0";
  auto* cmd_psiw = app.add_subcommand("psi-witness", "verified solution of phi for (f, alpha, beta)");
  cmd_psiw->add_option("--poly", psi_poly)->required();
  cmd_psiw->add_option("--alpha", psi_alpha);
  cmd_psiw->add_option("--beta", psi_beta);
  cmd_psiw->callback([&] {
    CtxHandle h;
    if (!open_ctx(opt, h)) {
      exit_code = fail(fl_last_error());
      return;
    }
    ElemHandle x, y, z, z1, z2;
    int rc = fl_psi_witness(h.ctx, psi_poly.c_str(), psi_alpha.c_str(), psi_beta.c_str(), &x.e,
                            &y.e, &z.e, &z1.e, &z2.e);
    if (rc != FL_OK) {
      exit_code = fail_ctx(h.ctx, rc);
      return;
    }
    std::cout << "x = " << print_elem_line(h.ctx, x.e) << "\n";
    std::cout << "y = " << print_elem_line(h.ctx, y.e) << "\n";
    std::cout << "z = " << print_elem_line(h.ctx, z.e) << "\n";
    std::cout << "z1 = " << print_elem_line(h.ctx, z1.e) << "\n";
    std::cout << "z2 = " << print_elem_line(h.ctx, z2.e) << "\n";
  });

  // psi-check
  std::string phi_x, phi_y, phi_z, phi_z1, phi_z2;
  auto* cmd_psic = app.add_subcommand("psi-check", "check phi(x, y, z, z1, z2)");
  cmd_psic->add_option("--x", phi_x)->required();
  cmd_psic->add_option("--y", phi_y)->required();
  cmd_psic->add_option("--z", phi_z)->required();
  cmd_psic->add_option("--z1", phi_z1)->required();
  cmd_psic->add_option("--z2", phi_z2)->required();
  cmd_psic->callback([&] {
    CtxHandle h;
    if (!open_ctx(opt, h)) {
      exit_code = fail(fl_last_error());
      return;
    }
    ElemHandle x, y, z, z1, z2;
    if (!parse_elem(h.ctx, phi_x, x) || !parse_elem(h.ctx, phi_y, y) ||
        !parse_elem(h.ctx, phi_z, z) || !parse_elem(h.ctx, phi_z1, z1) ||
        !parse_elem(h.ctx, phi_z2, z2)) {
      exit_code = fail_ctx(h.ctx, FL_ERR_PARSE);
      return;
    }
    int ok = 0;
    int rc = fl_check_phi(h.ctx, x.e, y.e, z.e, z1.e, z2.e, &ok);
    if (rc != FL_OK) {
      exit_code = fail_ctx(h.ctx, rc);
      return;
    }
    std::cout << (ok ? "true" : "false") << "\n";
    exit_code = bool_exit(ok);
  });

  // oplus-check
  std::string op_u, op_v, op_w;
  auto* cmd_oplus = app.add_subcommand("oplus-check", "check [u] + [v] = [w] on X/~");
  cmd_oplus->add_option("u", op_u)->required();
  cmd_oplus->add_option("v", op_v)->required();
  cmd_oplus->add_option("w", op_w)->required();
  cmd_oplus->callback([&] {
    CtxHandle h;
    if (!open_ctx(opt, h)) {
      exit_code = fail(fl_last_error());
      return;
    }
    ElemHandle u, v, w;
    if (!parse_elem(h.ctx, op_u, u) || !parse_elem(h.ctx, op_v, v) || !parse_elem(h.ctx, op_w, w)) {
      exit_code = fail_ctx(h.ctx, FL_ERR_PARSE);
      return;
    }
    int ok = 0;
    int rc = fl_check_oplus(h.ctx, u.e, v.e, w.e, &ok);
    if (rc != FL_OK) {
      exit_code = fail_ctx(h.ctx, rc);
      return;
    }
    std::cout << (ok ? "true" : "false") << "\n";
    exit_code = bool_exit(ok);
  });

  // otimes-check
  std::string ot_f, ot_g, ot_h;
  auto* cmd_otimes = app.add_subcommand("otimes-check", "check the multiplication congruence for (f, g, h)");
  cmd_otimes->set_help_flag("--help", "print help");  // frees -h / --h for the polynomial
  cmd_otimes->add_option("--f", ot_f)->required();
  cmd_otimes->add_option("--g", ot_g)->required();
  cmd_otimes->add_option("--h", ot_h)->required();
  cmd_otimes->callback([&] {
    CtxHandle h;
    if (!open_ctx(opt, h)) {
      exit_code = fail(fl_last_error());
      return;
    }
    int ok = 0;
    int rc = fl_otimes_check(h.ctx, ot_f.c_str(), ot_g.c_str(), ot_h.c_str(), &ok);
    if (rc != FL_OK) {
      exit_code = fail_ctx(h.ctx, rc);
      return;
    }
    std::cout << (ok ? "true" : "false") << "\n";
    exit_code = bool_exit(ok);
  });

  // field-check
  std::string fc_op, fc_x, fc_y, fc_z, fc_elem, fc_alpha, fc_result;
  auto* cmd_field = app.add_subcommand("field-check", "check field arithmetic through its equations");
  cmd_field->add_option("--op", fc_op, "add | mul | action")->required();
  cmd_field->add_option("--x", fc_x, "scalar x (add/mul)");
  cmd_field->add_option("--y", fc_y, "scalar y (add/mul)");
  cmd_field->add_option("--z", fc_z, "scalar z (add/mul)");
  cmd_field->add_option("--elem", fc_elem, "element x (action)");
  cmd_field->add_option("--alpha", fc_alpha, "scalar alpha (action)");
  cmd_field->add_option("--result", fc_result, "element z (action)");
  cmd_field->callback([&] {
    CtxHandle h;
    if (!open_ctx(opt, h)) {
      exit_code = fail(fl_last_error());
      return;
    }
    int ok = 0;
    int rc = FL_ERR_INVALID;
    if (fc_op == "add" || fc_op == "mul") {
      if (fc_x.empty() || fc_y.empty() || fc_z.empty()) {
        exit_code = fail("field-check add/mul needs --x --y --z");
        return;
      }
      rc = fc_op == "add" ? fl_check_field_add(h.ctx, fc_x.c_str(), fc_y.c_str(), fc_z.c_str(), &ok)
                          : fl_check_field_mul(h.ctx, fc_x.c_str(), fc_y.c_str(), fc_z.c_str(), &ok);
    } else if (fc_op == "action") {
      if (fc_elem.empty() || fc_alpha.empty() || fc_result.empty()) {
        exit_code = fail("field-check action needs --elem --alpha --result");
        return;
      }
      ElemHandle x, z;
      if (!parse_elem(h.ctx, fc_elem, x) || !parse_elem(h.ctx, fc_result, z)) {
        exit_code = fail_ctx(h.ctx, FL_ERR_PARSE);
        return;
      }
      rc = fl_check_scalar_action(h.ctx, x.e, fc_alpha.c_str(), z.e, &ok);
    } else {
      exit_code = fail("field-check: --op must be add, mul or action");
      return;
    }
    if (rc != FL_OK) {
      exit_code = fail_ctx(h.ctx, rc);
      return;
    }
    std::cout << (ok ? "true" : "false") << "\n";
    exit_code = bool_exit(ok);
  });

  // compile
  std::string comp_in, comp_out;
  auto* cmd_compile = app.add_subcommand("compile", "compile a poly-system into a lie-system");
  cmd_compile->add_option("--in", comp_in, "poly-system JSON path")->required();
  cmd_compile->add_option("--out", comp_out, "lie-system JSON path")->required();
  cmd_compile->callback([&] {
    std::string text;
    if (!read_file(comp_in, text)) {
      exit_code = fail("cannot read " + comp_in);
      return;
    }
    char* out = nullptr;
    int rc = fl_system_compile(text.c_str(), &out);
    if (rc != FL_OK) {
      exit_code = fail(fl_last_error());
      return;
    }
    bool ok = write_file(comp_out, std::string(out) + "\n");
    fl_string_free(out);
    if (!ok) exit_code = fail("cannot write " + comp_out);
  });

  // solve-truncated
  std::string solve_path;
  int solve_degree = 1;
  auto* cmd_solve = app.add_subcommand("solve-truncated", "exact solutions up to a degree bound");
  cmd_solve->add_option("--system", solve_path, "lie-system JSON path")->required();
  cmd_solve->add_option("--degree", solve_degree, "truncation degree")->required();
  cmd_solve->callback([&] {
    std::string text;
    if (!read_file(solve_path, text)) {
      exit_code = fail("cannot read " + solve_path);
      return;
    }
    char* out = nullptr;
    int rc = fl_system_solve_truncated(text.c_str(), solve_degree, &out);
    if (rc != FL_OK) {
      exit_code = fail(fl_last_error());
      return;
    }
    print_owned(out);
  });

  // verify
  std::string verify_system, verify_assignment;
  auto* cmd_verify = app.add_subcommand("verify", "check an assignment against a lie-system");
  cmd_verify->add_option("--system", verify_system, "lie-system JSON path")->required();
  cmd_verify->add_option("--assignment", verify_assignment, "assignment JSON path")->required();
  cmd_verify->callback([&] {
    std::string sys_text, asg_text;
    if (!read_file(verify_system, sys_text)) {
      exit_code = fail("cannot read " + verify_system);
      return;
    }
    if (!read_file(verify_assignment, asg_text)) {
      exit_code = fail("cannot read " + verify_assignment);
      return;
    }
    char* out = nullptr;
    int pass = 0;
    int rc = fl_system_verify(sys_text.c_str(), asg_text.c_str(), &out, &pass);
    if (rc != FL_OK) {
      exit_code = fail(fl_last_error());
      return;
    }
    print_owned(out);
    exit_code = bool_exit(pass);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitError;
  }
  return exit_code;
}
