#include "freelie/term.hpp"

#include <cctype>

namespace freelie {

TermPtr Term::make_gen(int index) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::generator;
  t->gen = index;
  return t;
}

TermPtr Term::make_var(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::variable;
  t->var = std::move(name);
  return t;
}

TermPtr Term::make_const(LieElement e) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::constant;
  t->constant = std::move(e);
  return t;
}

TermPtr Term::make_bracket(TermPtr l, TermPtr r) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::bracket;
  t->lhs = std::move(l);
  t->rhs = std::move(r);
  return t;
}

TermPtr Term::make_sum(std::vector<TermPtr> parts) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::sum;
  t->summands = std::move(parts);
  return t;
}

TermPtr Term::make_scale(Scalar c, TermPtr child) {
  auto t = std::make_shared<Term>();
  t->kind = Kind::scale;
  t->coeff = std::move(c);
  t->lhs = std::move(child);
  return t;
}

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
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
  void expect(char c) {
    if (!accept(c))
      raise(ErrorCode::parse, std::string("expected '") + c + "' at offset " + std::to_string(pos) + " in term");
  }
  std::string ident() {
    skip_ws();
    std::string out;
    if (pos < s.size() && std::islower(static_cast<unsigned char>(s[pos]))) {
      out.push_back(s[pos++]);
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        out.push_back(s[pos++]);
    }
    return out;
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
};

struct TermParser {
  const Algebra& alg;
  const std::set<std::string>* vars;
  Lexer lx;

  TermPtr parse_sum() {
    std::vector<TermPtr> parts;
    parts.push_back(parse_product());
    for (;;) {
      if (lx.accept('+')) {
        parts.push_back(parse_product());
      } else if (lx.accept('-')) {
        parts.push_back(Term::make_scale(-Scalar::one(alg.field()), parse_product()));
      } else {
        break;
      }
    }
    if (parts.size() == 1) return parts[0];
    return Term::make_sum(std::move(parts));
  }

  TermPtr parse_product() {
    char c = lx.peek();
    if (c == '-') {
      lx.accept('-');
      return Term::make_scale(-Scalar::one(alg.field()), parse_product());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = lx.number();
      Scalar k = Scalar::parse(alg.field(), num);
      if (lx.accept('*')) return Term::make_scale(std::move(k), parse_product());
      if (k.is_zero()) return Term::make_const(alg.zero());
      raise(ErrorCode::parse, "scalar '" + num + "' must multiply a term (only the literal 0 stands alone)");
    }
    return parse_atom();
  }

  TermPtr parse_atom() {
    if (lx.accept('[')) {
      TermPtr l = parse_sum();
      lx.expect(',');
      TermPtr r = parse_sum();
      lx.expect(']');
      return Term::make_bracket(std::move(l), std::move(r));
    }
    if (lx.accept('(')) {
      TermPtr t = parse_sum();
      lx.expect(')');
      return t;
    }
    std::string name = lx.ident();
    if (name.empty())
      raise(ErrorCode::parse, "unexpected character at offset " + std::to_string(lx.pos) + " in term");
    int g = alg.pool().gen_index_by_name(name);
    if (g >= 0) return Term::make_gen(g);
    if (vars && vars->count(name)) return Term::make_var(name);
    raise(ErrorCode::parse, "unknown identifier '" + name + "' in term");
  }
};

bool prints_as_sum(const Algebra& alg, const Term& t) {
  if (t.kind == Term::Kind::sum) return true;
  if (t.kind == Term::Kind::constant) return t.constant.terms().size() > 1;
  return false;
}

}  // namespace

TermPtr parse_term(const Algebra& alg, const std::string& text, const std::set<std::string>* vars) {
  TermParser p{alg, vars, Lexer{text}};
  TermPtr t = p.parse_sum();
  p.lx.skip_ws();
  if (p.lx.pos != text.size())
    raise(ErrorCode::parse, "trailing input at offset " + std::to_string(p.lx.pos) + " in term: " + text);
  return t;
}

std::string print_term(const Algebra& alg, const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::generator:
      return alg.pool().gen_name(t->gen);
    case Term::Kind::variable:
      return t->var;
    case Term::Kind::constant:
      return alg.str(t->constant);
    case Term::Kind::bracket:
      return "[" + print_term(alg, t->lhs) + "," + print_term(alg, t->rhs) + "]";
    case Term::Kind::sum: {
      std::string out;
      for (const auto& p : t->summands) {
        if (!out.empty()) out += " + ";
        out += print_term(alg, p);
      }
      return out.empty() ? "0" : out;
    }
    case Term::Kind::scale: {
      std::string child = print_term(alg, t->lhs);
      if (prints_as_sum(alg, *t->lhs)) child = "(" + child + ")";
      return t->coeff.str() + "*" + child;
    }
  }
  raise(ErrorCode::invalid, "corrupt term");
}

LieElement evaluate(Algebra& alg, const TermPtr& t, const Assignment& sigma) {
  switch (t->kind) {
    case Term::Kind::generator:
      return alg.generator(t->gen);
    case Term::Kind::variable: {
      auto it = sigma.find(t->var);
      if (it == sigma.end()) raise(ErrorCode::unbound_variable, "unbound variable '" + t->var + "'");
      alg.check_element(it->second);
      return it->second;
    }
    case Term::Kind::constant:
      alg.check_element(t->constant);
      return t->constant;
    case Term::Kind::bracket:
      return alg.bracket(evaluate(alg, t->lhs, sigma), evaluate(alg, t->rhs, sigma));
    case Term::Kind::sum: {
      LieElement acc = alg.zero();
      for (const auto& p : t->summands) acc = alg.add(acc, evaluate(alg, p, sigma));
      return acc;
    }
    case Term::Kind::scale:
      return alg.scalar_mul(t->coeff, evaluate(alg, t->lhs, sigma));
  }
  raise(ErrorCode::invalid, "corrupt term");
}

LieElement normal_form(Algebra& alg, const TermPtr& t) { return evaluate(alg, t, {}); }

LieElement parse_element(Algebra& alg, const std::string& text) {
  return normal_form(alg, parse_term(alg, text));
}

void collect_variables(const TermPtr& t, std::set<std::string>& out) {
  switch (t->kind) {
    case Term::Kind::variable:
      out.insert(t->var);
      return;
    case Term::Kind::bracket:
      collect_variables(t->lhs, out);
      collect_variables(t->rhs, out);
      return;
    case Term::Kind::sum:
      for (const auto& p : t->summands) collect_variables(p, out);
      return;
    case Term::Kind::scale:
      collect_variables(t->lhs, out);
      return;
    default:
      return;
  }
}

}  // namespace freelie
