#include "freelie/eqn.hpp"

#include <algorithm>
#include <cctype>

#include "freelie/linalg.hpp"

namespace freelie {

namespace {

constexpr int kA = 0, kB = 1, kC = 2;

void validate_vars(const EquationSystem& sys) {
  std::set<std::string> declared(sys.vars.begin(), sys.vars.end());
  for (const Equation& eq : sys.equations) {
    std::set<std::string> used;
    collect_variables(eq.lhs, used);
    collect_variables(eq.rhs, used);
    for (const std::string& v : used)
      if (!declared.count(v))
        raise(ErrorCode::unbound_variable, "equation uses undeclared variable '" + v + "'");
  }
}

// Returns whether t contains a variable; rejects brackets of two
// variable-bearing subterms.
bool check_linear(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::variable:
      return true;
    case Term::Kind::generator:
    case Term::Kind::constant:
      return false;
    case Term::Kind::bracket: {
      bool l = check_linear(t->lhs);
      bool r = check_linear(t->rhs);
      if (l && r)
        raise(ErrorCode::nonlinear, "nonlinear term: bracket of two variable-bearing subterms");
      return l || r;
    }
    case Term::Kind::sum: {
      bool any = false;
      for (const auto& p : t->summands) any = check_linear(p) || any;
      return any;
    }
    case Term::Kind::scale:
      return check_linear(t->lhs);
  }
  raise(ErrorCode::invalid, "corrupt term");
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  }
};

}  // namespace

SystemReport check_system(Algebra& alg, const EquationSystem& sys, const Assignment& sigma) {
  validate_vars(sys);
  SystemReport report;
  report.pass = true;
  for (const Equation& eq : sys.equations) {
    EquationReport er;
    er.residual = alg.sub(evaluate(alg, eq.lhs, sigma), evaluate(alg, eq.rhs, sigma));
    er.pass = er.residual.is_zero();
    report.pass = report.pass && er.pass;
    report.equations.push_back(std::move(er));
  }
  return report;
}

namespace {

TermPtr replace_vars(const TermPtr& t, const Assignment& partial) {
  switch (t->kind) {
    case Term::Kind::variable: {
      auto it = partial.find(t->var);
      return it == partial.end() ? t : Term::make_const(it->second);
    }
    case Term::Kind::bracket:
      return Term::make_bracket(replace_vars(t->lhs, partial), replace_vars(t->rhs, partial));
    case Term::Kind::sum: {
      std::vector<TermPtr> parts;
      parts.reserve(t->summands.size());
      for (const auto& p : t->summands) parts.push_back(replace_vars(p, partial));
      return Term::make_sum(std::move(parts));
    }
    case Term::Kind::scale:
      return Term::make_scale(t->coeff, replace_vars(t->lhs, partial));
    default:
      return t;
  }
}

}  // namespace

EquationSystem substitute(Algebra& alg, const EquationSystem& sys, const Assignment& partial) {
  for (const auto& [v, e] : partial) alg.check_element(e);
  EquationSystem out;
  for (const std::string& v : sys.vars)
    if (!partial.count(v)) out.vars.push_back(v);
  for (const Equation& eq : sys.equations)
    out.equations.push_back({replace_vars(eq.lhs, partial), replace_vars(eq.rhs, partial)});
  return out;
}

Assignment SubspaceBasis::decode(const Algebra& alg, const std::vector<Scalar>& vec) const {
  if (static_cast<int>(vec.size()) != width()) raise(ErrorCode::invalid, "decode: width mismatch");
  Assignment out;
  for (size_t vi = 0; vi < vars.size(); ++vi) {
    LieElement e = alg.zero();
    for (size_t mi = 0; mi < coords.size(); ++mi) {
      const Scalar& c = vec[vi * coords.size() + mi];
      if (!c.is_zero()) e = alg.add(e, alg.monomial(coords[mi], c));
    }
    out.emplace(vars[vi], std::move(e));
  }
  return out;
}

std::vector<Scalar> SubspaceBasis::encode(const Algebra& alg, const Assignment& sigma) const {
  std::vector<Scalar> vec(static_cast<size_t>(width()), Scalar::zero(alg.field()));
  for (size_t vi = 0; vi < vars.size(); ++vi) {
    auto it = sigma.find(vars[vi]);
    if (it == sigma.end()) continue;
    for (const auto& [m, c] : it->second.terms()) {
      auto pos = std::lower_bound(coords.begin(), coords.end(), m,
                                  [&](MonoId x, MonoId y) { return alg.pool().compare(x, y) < 0; });
      if (pos == coords.end() || *pos != m)
        raise(ErrorCode::invalid, "encode: element exceeds the truncation degree");
      vec[vi * coords.size() + static_cast<size_t>(pos - coords.begin())] = c;
    }
  }
  return vec;
}

TruncatedSolution truncated_solve(Algebra& alg, const EquationSystem& sys, int degree) {
  if (degree < 1) raise(ErrorCode::invalid, "truncation degree must be positive");
  if (degree > alg.degree_cap())
    raise(ErrorCode::degree_cap, "truncation degree " + std::to_string(degree) +
                                     " exceeds the cap " + std::to_string(alg.degree_cap()));
  validate_vars(sys);
  for (const Equation& eq : sys.equations) {
    check_linear(eq.lhs);
    check_linear(eq.rhs);
  }

  TruncatedSolution out;
  SubspaceBasis& kernel = out.kernel;
  kernel.degree = degree;
  kernel.vars = sys.vars;
  kernel.coords = alg.pool().basis_up_to(degree);
  const int ncoords = static_cast<int>(kernel.coords.size());
  const int width = kernel.width();
  const int neq = static_cast<int>(sys.equations.size());

  Assignment zeros;
  for (const std::string& v : sys.vars) zeros.emplace(v, alg.zero());

  // Constant residuals C_e; columns are residual(unit) - C_e.
  std::vector<LieElement> constant(static_cast<size_t>(neq), alg.zero());
  for (int e = 0; e < neq; ++e)
    constant[static_cast<size_t>(e)] =
        alg.sub(evaluate(alg, sys.equations[static_cast<size_t>(e)].lhs, zeros),
                evaluate(alg, sys.equations[static_cast<size_t>(e)].rhs, zeros));

  std::map<std::pair<int, MonoId>, int> row_ids;
  std::vector<std::vector<std::pair<int, Scalar>>> rows;  // (unknown, coeff)
  std::vector<Scalar> rhs;                                // = -C coordinate
  auto row_of = [&](int e, MonoId m) {
    auto [it, inserted] = row_ids.try_emplace({e, m}, static_cast<int>(rows.size()));
    if (inserted) {
      rows.emplace_back();
      rhs.push_back(Scalar::zero(alg.field()));
    }
    return it->second;
  };

  for (size_t vi = 0; vi < sys.vars.size(); ++vi) {
    Assignment sigma = zeros;
    for (int mi = 0; mi < ncoords; ++mi) {
      sigma[sys.vars[vi]] = alg.monomial(kernel.coords[static_cast<size_t>(mi)], alg.scalar_one());
      int unknown = static_cast<int>(vi) * ncoords + mi;
      for (int e = 0; e < neq; ++e) {
        LieElement col =
            alg.sub(alg.sub(evaluate(alg, sys.equations[static_cast<size_t>(e)].lhs, sigma),
                            evaluate(alg, sys.equations[static_cast<size_t>(e)].rhs, sigma)),
                    constant[static_cast<size_t>(e)]);
        for (const auto& [m, c] : col.terms()) rows[static_cast<size_t>(row_of(e, m))].emplace_back(unknown, c);
      }
    }
  }
  for (int e = 0; e < neq; ++e)
    for (const auto& [m, c] : constant[static_cast<size_t>(e)].terms())
      rhs[static_cast<size_t>(row_of(e, m))] = -c;

  // Split into independent blocks of coupled unknowns.
  out.feasible = true;
  UnionFind uf(width);
  std::vector<bool> touched(static_cast<size_t>(width), false);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) {
      if (!rhs[r].is_zero()) out.feasible = false;  // constant contradiction
      continue;
    }
    int first = rows[r][0].first;
    touched[static_cast<size_t>(first)] = true;
    for (const auto& [u, c] : rows[r]) {
      touched[static_cast<size_t>(u)] = true;
      uf.unite(first, u);
    }
  }

  struct Block {
    std::vector<int> cols;
    std::vector<int> rows;
  };
  std::map<int, Block> blocks;
  for (int u = 0; u < width; ++u)
    if (touched[static_cast<size_t>(u)]) blocks[uf.find(u)].cols.push_back(u);
  for (size_t r = 0; r < rows.size(); ++r)
    if (!rows[r].empty()) blocks[uf.find(rows[r][0].first)].rows.push_back(static_cast<int>(r));

  std::vector<Scalar> particular(static_cast<size_t>(width), Scalar::zero(alg.field()));
  bool homogeneous = true;
  for (const Scalar& s : rhs)
    if (!s.is_zero()) homogeneous = false;

  // Kernel vectors emitted in ascending order of their defining unknown:
  // free unknowns give unit vectors, block free-columns give lifted ones.
  std::vector<std::pair<int, std::vector<Scalar>>> keyed;
  for (int u = 0; u < width; ++u) {
    if (touched[static_cast<size_t>(u)]) continue;
    std::vector<Scalar> v(static_cast<size_t>(width), Scalar::zero(alg.field()));
    v[static_cast<size_t>(u)] = alg.scalar_one();
    keyed.emplace_back(u, std::move(v));
  }

  for (auto& [root, blk] : blocks) {
    std::map<int, int> col_pos;
    for (size_t j = 0; j < blk.cols.size(); ++j) col_pos[blk.cols[j]] = static_cast<int>(j);
    Matrix A(static_cast<int>(blk.rows.size()), static_cast<int>(blk.cols.size()), alg.field());
    std::vector<Scalar> b(blk.rows.size(), Scalar::zero(alg.field()));
    for (size_t i = 0; i < blk.rows.size(); ++i) {
      for (const auto& [u, c] : rows[static_cast<size_t>(blk.rows[i])])
        A.at(static_cast<int>(i), col_pos[u]) = A.at(static_cast<int>(i), col_pos[u]) + c;
      b[i] = rhs[static_cast<size_t>(blk.rows[i])];
    }
    auto part = solve(A, b);
    if (!part) {
      out.feasible = false;
    } else {
      for (size_t j = 0; j < blk.cols.size(); ++j)
        particular[static_cast<size_t>(blk.cols[j])] = (*part)[j];
    }
    for (auto& nv : nullspace(A)) {
      std::vector<Scalar> v(static_cast<size_t>(width), Scalar::zero(alg.field()));
      int key = width;
      for (size_t j = 0; j < blk.cols.size(); ++j) {
        if (nv[j].is_zero()) continue;
        v[static_cast<size_t>(blk.cols[j])] = nv[j];
        key = std::min(key, blk.cols[j]);
      }
      keyed.emplace_back(key, std::move(v));
    }
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [k, v] : keyed) kernel.vectors.push_back(std::move(v));

  if (!out.feasible) {
    out.particular.clear();
  } else if (!homogeneous) {
    out.particular = std::move(particular);
  }
  return out;
}

SubspaceBasis truncated_kernel(Algebra& alg, const EquationSystem& sys, int degree) {
  TruncatedSolution sol = truncated_solve(alg, sys, degree);
  if (!sol.feasible || !sol.particular.empty())
    raise(ErrorCode::invalid, "truncated_kernel requires a homogeneous system (use truncated_solve)");
  return std::move(sol.kernel);
}

SubspaceBasis project(const Algebra& alg, const SubspaceBasis& basis, const std::vector<std::string>& vars) {
  std::vector<size_t> take;
  for (const std::string& v : vars) {
    auto it = std::find(basis.vars.begin(), basis.vars.end(), v);
    if (it == basis.vars.end()) raise(ErrorCode::invalid, "project: unknown variable '" + v + "'");
    take.push_back(static_cast<size_t>(it - basis.vars.begin()));
  }
  const size_t nc = basis.coords.size();
  Matrix m(static_cast<int>(basis.vectors.size()), static_cast<int>(take.size() * nc), alg.field());
  for (size_t r = 0; r < basis.vectors.size(); ++r)
    for (size_t ti = 0; ti < take.size(); ++ti)
      for (size_t mi = 0; mi < nc; ++mi)
        m.at(static_cast<int>(r), static_cast<int>(ti * nc + mi)) = basis.vectors[r][take[ti] * nc + mi];
  std::vector<int> pivots = rref(m);

  SubspaceBasis out;
  out.degree = basis.degree;
  out.vars = vars;
  out.coords = basis.coords;
  for (size_t r = 0; r < pivots.size(); ++r) {
    std::vector<Scalar> v(static_cast<size_t>(m.cols), Scalar::zero(alg.field()));
    for (int c = 0; c < m.cols; ++c) v[static_cast<size_t>(c)] = m.at(static_cast<int>(r), c);
    out.vectors.push_back(std::move(v));
  }
  return out;
}

bool subspace_contains(const SubspaceBasis& basis, const std::vector<Scalar>& vec) {
  Field f = vec.empty() ? Field::rationals() : vec[0].field();
  Matrix m(static_cast<int>(basis.vectors.size()), static_cast<int>(vec.size()), f);
  for (size_t r = 0; r < basis.vectors.size(); ++r) {
    if (basis.vectors[r].size() != vec.size()) raise(ErrorCode::invalid, "subspace_contains: width mismatch");
    for (size_t c = 0; c < vec.size(); ++c) m.at(static_cast<int>(r), static_cast<int>(c)) = basis.vectors[r][c];
  }
  return RowSpace(std::move(m)).contains(vec);
}

// --- poly terms ---------------------------------------------------------------

PolyTermPtr PolyTerm::make_const(Polynomial k) {
  auto t = std::make_shared<PolyTerm>();
  t->kind = Kind::constant;
  t->value = std::move(k);
  return t;
}

PolyTermPtr PolyTerm::make_var(std::string name) {
  auto t = std::make_shared<PolyTerm>();
  t->kind = Kind::variable;
  t->var = std::move(name);
  return t;
}

PolyTermPtr PolyTerm::make_add(PolyTermPtr l, PolyTermPtr r) {
  auto t = std::make_shared<PolyTerm>();
  t->kind = Kind::add;
  t->lhs = std::move(l);
  t->rhs = std::move(r);
  return t;
}

PolyTermPtr PolyTerm::make_mul(PolyTermPtr l, PolyTermPtr r) {
  auto t = std::make_shared<PolyTerm>();
  t->kind = Kind::mul;
  t->lhs = std::move(l);
  t->rhs = std::move(r);
  return t;
}

namespace {

struct PolyTermParser {
  const Field& field;
  const std::set<std::string>& vars;
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

  PolyTermPtr parse_sum() {
    PolyTermPtr t = parse_prod();
    for (;;) {
      if (accept('+')) {
        t = PolyTerm::make_add(std::move(t), parse_prod());
      } else if (accept('-')) {
        PolyTermPtr rhsn = PolyTerm::make_mul(
            PolyTerm::make_const(Polynomial::constant(-Scalar::one(field))), parse_prod());
        t = PolyTerm::make_add(std::move(t), std::move(rhsn));
      } else {
        return t;
      }
    }
  }

  PolyTermPtr parse_prod() {
    if (accept('-'))
      return PolyTerm::make_mul(PolyTerm::make_const(Polynomial::constant(-Scalar::one(field))),
                                parse_prod());
    PolyTermPtr t = parse_atom();
    while (accept('*')) t = PolyTerm::make_mul(std::move(t), parse_atom());
    return t;
  }

  PolyTermPtr parse_atom() {
    char c = peek();
    if (c == '(') {
      accept('(');
      PolyTermPtr t = parse_sum();
      if (!accept(')')) raise(ErrorCode::parse, "expected ) in polynomial term");
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) num.push_back(s[pos++]);
      if (pos < s.size() && s[pos] == '/') {
        num.push_back(s[pos++]);
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) num.push_back(s[pos++]);
      }
      return PolyTerm::make_const(Polynomial::constant(Scalar::parse(field, num)));
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::string name;
      name.push_back(s[pos++]);
      while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        name.push_back(s[pos++]);
      if (name == "t") {
        int power = 1;
        if (accept('^')) {
          skip_ws();
          std::string e;
          while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) e.push_back(s[pos++]);
          if (e.empty()) raise(ErrorCode::parse, "expected exponent after ^");
          power = std::stoi(e);
          if (power > 4096) raise(ErrorCode::parse, "exponent too large");
        }
        return PolyTerm::make_const(Polynomial::monomial(Scalar::one(field), power));
      }
      if (vars.count(name)) return PolyTerm::make_var(name);
      raise(ErrorCode::parse, "unknown polynomial variable '" + name + "'");
    }
    raise(ErrorCode::parse, "unexpected character in polynomial term at offset " + std::to_string(pos));
  }
};

}  // namespace

namespace {

// Collapse variable-free subtrees, so literals like "t^2 + 1" become single
// constants and flattening does not spawn spurious atoms.
PolyTermPtr fold_constants(const PolyTermPtr& t) {
  switch (t->kind) {
    case PolyTerm::Kind::constant:
    case PolyTerm::Kind::variable:
      return t;
    case PolyTerm::Kind::add: {
      PolyTermPtr l = fold_constants(t->lhs), r = fold_constants(t->rhs);
      if (l->kind == PolyTerm::Kind::constant && r->kind == PolyTerm::Kind::constant)
        return PolyTerm::make_const(l->value + r->value);
      return PolyTerm::make_add(std::move(l), std::move(r));
    }
    case PolyTerm::Kind::mul: {
      PolyTermPtr l = fold_constants(t->lhs), r = fold_constants(t->rhs);
      if (l->kind == PolyTerm::Kind::constant && r->kind == PolyTerm::Kind::constant)
        return PolyTerm::make_const(l->value * r->value);
      return PolyTerm::make_mul(std::move(l), std::move(r));
    }
  }
  raise(ErrorCode::invalid, "corrupt polynomial term");
}

}  // namespace

PolyTermPtr parse_poly_term(const Field& field, const std::string& text,
                            const std::set<std::string>& vars) {
  if (vars.count("t")) raise(ErrorCode::invalid, "'t' is reserved for the indeterminate");
  PolyTermParser p{field, vars, text};
  PolyTermPtr t = p.parse_sum();
  p.skip_ws();
  if (p.pos != text.size())
    raise(ErrorCode::parse, "trailing input in polynomial term: " + text);
  return fold_constants(t);
}

std::string print_poly_term(const PolyTerm& t) {
  switch (t.kind) {
    case PolyTerm::Kind::constant: {
      std::string s = t.value.str();
      bool atomic = s.find(' ') == std::string::npos;
      return atomic ? s : "(" + s + ")";
    }
    case PolyTerm::Kind::variable:
      return t.var;
    case PolyTerm::Kind::add:
      return print_poly_term(*t.lhs) + " + " + print_poly_term(*t.rhs);
    case PolyTerm::Kind::mul: {
      auto wrap = [](const PolyTermPtr& p) {
        std::string s = print_poly_term(*p);
        return p->kind == PolyTerm::Kind::add ? "(" + s + ")" : s;
      };
      return wrap(t.lhs) + "*" + wrap(t.rhs);
    }
  }
  raise(ErrorCode::invalid, "corrupt polynomial term");
}

Polynomial eval_poly_term(const PolyTermPtr& t, const std::map<std::string, Polynomial>& sigma) {
  switch (t->kind) {
    case PolyTerm::Kind::constant:
      return t->value;
    case PolyTerm::Kind::variable: {
      auto it = sigma.find(t->var);
      if (it == sigma.end())
        raise(ErrorCode::unbound_variable, "unbound polynomial variable '" + t->var + "'");
      return it->second;
    }
    case PolyTerm::Kind::add:
      return eval_poly_term(t->lhs, sigma) + eval_poly_term(t->rhs, sigma);
    case PolyTerm::Kind::mul:
      return eval_poly_term(t->lhs, sigma) * eval_poly_term(t->rhs, sigma);
  }
  raise(ErrorCode::invalid, "corrupt polynomial term");
}

// --- flattening ---------------------------------------------------------------

namespace {

struct Flattener {
  const PolySystem& sys;
  FlatPolySystem out;
  int fresh = 0;

  std::string fresh_var() { return "_f" + std::to_string(++fresh); }

  std::string define_fresh(FlatAtom atom_template) {
    std::string v = fresh_var();
    out.vars.push_back(v);
    atom_template.v = v;
    out.atoms.push_back(std::move(atom_template));
    return v;
  }

  std::string flat_term(const PolyTermPtr& t) {
    switch (t->kind) {
      case PolyTerm::Kind::variable:
        return t->var;
      case PolyTerm::Kind::constant: {
        FlatAtom a;
        a.kind = FlatAtom::Kind::pin;
        a.k = t->value;
        return define_fresh(std::move(a));
      }
      case PolyTerm::Kind::add: {
        FlatAtom a;
        a.kind = FlatAtom::Kind::add;
        a.u = flat_term(t->lhs);
        a.w = flat_term(t->rhs);
        return define_fresh(std::move(a));
      }
      case PolyTerm::Kind::mul: {
        FlatAtom a;
        a.kind = FlatAtom::Kind::mul;
        a.u = flat_term(t->lhs);
        a.w = flat_term(t->rhs);
        return define_fresh(std::move(a));
      }
    }
    raise(ErrorCode::invalid, "corrupt polynomial term");
  }

  void constrain(const std::string& target, const PolyTermPtr& src) {
    FlatAtom a;
    a.v = target;
    switch (src->kind) {
      case PolyTerm::Kind::variable:
        alias(target, src->var);
        return;
      case PolyTerm::Kind::constant:
        a.kind = FlatAtom::Kind::pin;
        a.k = src->value;
        break;
      case PolyTerm::Kind::add:
        a.kind = FlatAtom::Kind::add;
        a.u = flat_term(src->lhs);
        a.w = flat_term(src->rhs);
        break;
      case PolyTerm::Kind::mul:
        a.kind = FlatAtom::Kind::mul;
        a.u = flat_term(src->lhs);
        a.w = flat_term(src->rhs);
        break;
    }
    out.atoms.push_back(std::move(a));
  }

  // target = other + (fresh pinned to 0)
  void alias(const std::string& target, const std::string& other) {
    FlatAtom pin;
    pin.kind = FlatAtom::Kind::pin;
    pin.k = Polynomial::zero(sys.field);
    std::string z = define_fresh(std::move(pin));
    FlatAtom a;
    a.kind = FlatAtom::Kind::add;
    a.v = target;
    a.u = other;
    a.w = z;
    out.atoms.push_back(std::move(a));
  }

  void run() {
    out.field = sys.field;
    out.vars = sys.vars;
    for (const PolyEquation& eq : sys.equations) {
      if (eq.rhs->kind == PolyTerm::Kind::variable) {
        constrain(eq.rhs->var, eq.lhs);
      } else if (eq.lhs->kind == PolyTerm::Kind::variable) {
        constrain(eq.lhs->var, eq.rhs);
      } else {
        std::string v1 = flat_term(eq.lhs);
        std::string v2 = flat_term(eq.rhs);
        alias(v1, v2);
      }
    }
  }
};

}  // namespace

FlatPolySystem flatten(const PolySystem& sys) {
  Flattener fl{sys};
  fl.run();
  return std::move(fl.out);
}

// --- compilation --------------------------------------------------------------

CompiledSystem compile_poly_system(Algebra& alg, const PolySystem& sys) {
  if (alg.rank() < 3) raise(ErrorCode::rank, "compilation needs rank >= 3");
  check_same_field(alg.field(), sys.field, "compile_poly_system");

  CompiledSystem out;
  out.flat = flatten(sys);
  EquationSystem& S = out.system;

  auto gen_a = Term::make_gen(kA);
  auto gen_b = Term::make_gen(kB);
  auto gen_c = Term::make_gen(kC);
  Scalar minus_one = -alg.scalar_one();
  auto zero_term = Term::make_const(alg.zero());

  for (const std::string& v : out.flat.vars) {
    PolyVarScheme sc{"x_" + v, "y_" + v, "z_" + v, "z1_" + v, "z2_" + v};
    for (const std::string* n : {&sc.x, &sc.y, &sc.z, &sc.z1, &sc.z2}) S.vars.push_back(*n);
    auto x = Term::make_var(sc.x), y = Term::make_var(sc.y), z = Term::make_var(sc.z);
    auto z1 = Term::make_var(sc.z1), z2 = Term::make_var(sc.z2);
    S.equations.push_back({Term::make_sum({Term::make_bracket(x, gen_c), Term::make_bracket(y, gen_b)}),
                           Term::make_bracket(z, gen_a)});
    S.equations.push_back({Term::make_bracket(x, gen_b), Term::make_bracket(z1, gen_a)});
    S.equations.push_back({Term::make_bracket(y, gen_c), Term::make_bracket(z2, gen_a)});
    out.var_map.emplace(v, std::move(sc));
  }

  int mul_count = 0;
  for (const FlatAtom& atom : out.flat.atoms) {
    const PolyVarScheme& sv = out.var_map.at(atom.v);
    switch (atom.kind) {
      case FlatAtom::Kind::pin: {
        LieElement enc = encode_poly(alg, atom.k, Scalar::zero(alg.field())).element;
        auto body = Term::make_sum(
            {Term::make_var(sv.x), Term::make_scale(minus_one, Term::make_const(std::move(enc)))});
        S.equations.push_back({Term::make_bracket(std::move(body), gen_a), zero_term});
        break;
      }
      case FlatAtom::Kind::add: {
        const PolyVarScheme& su = out.var_map.at(atom.u);
        const PolyVarScheme& sw = out.var_map.at(atom.w);
        auto body = Term::make_sum({Term::make_var(su.x), Term::make_var(sw.x),
                                    Term::make_scale(minus_one, Term::make_var(sv.x))});
        S.equations.push_back({Term::make_bracket(std::move(body), gen_a), zero_term});
        break;
      }
      case FlatAtom::Kind::mul: {
        const PolyVarScheme& su = out.var_map.at(atom.u);
        const PolyVarScheme& sw = out.var_map.at(atom.w);
        std::string aux = "s_mul" + std::to_string(mul_count++);
        S.vars.push_back(aux);
        out.mul_aux.push_back(aux);
        S.equations.push_back(
            {Term::make_bracket(Term::make_var(su.x), Term::make_var(sw.y)),
             Term::make_sum({Term::make_bracket(Term::make_var(sv.x), gen_c),
                             Term::make_bracket(Term::make_var(aux), gen_a)})});
        break;
      }
    }
  }
  return out;
}

MappedSolution map_solution(Algebra& alg, const CompiledSystem& compiled,
                            const std::map<std::string, Polynomial>& sigma_in) {
  std::map<std::string, Polynomial> sigma = sigma_in;
  // Derive values of fresh variables by running the atoms forward.
  for (const FlatAtom& atom : compiled.flat.atoms) {
    if (sigma.count(atom.v)) continue;
    switch (atom.kind) {
      case FlatAtom::Kind::pin:
        sigma.emplace(atom.v, atom.k);
        break;
      case FlatAtom::Kind::add:
        if (sigma.count(atom.u) && sigma.count(atom.w))
          sigma.emplace(atom.v, sigma.at(atom.u) + sigma.at(atom.w));
        break;
      case FlatAtom::Kind::mul:
        if (sigma.count(atom.u) && sigma.count(atom.w))
          sigma.emplace(atom.v, sigma.at(atom.u) * sigma.at(atom.w));
        break;
    }
  }
  for (const std::string& v : compiled.flat.vars)
    if (!sigma.count(v))
      raise(ErrorCode::unbound_variable, "map_solution: no value for poly variable '" + v + "'");

  MappedSolution out;
  Scalar zero = Scalar::zero(alg.field());
  for (const std::string& v : compiled.flat.vars) {
    const PolyVarScheme& sc = compiled.var_map.at(v);
    PhiWitness w = psi_witness(alg, sigma.at(v), zero, zero);
    out.assignment.emplace(sc.x, std::move(w.x));
    out.assignment.emplace(sc.y, std::move(w.y));
    out.assignment.emplace(sc.z, std::move(w.z));
    out.assignment.emplace(sc.z1, std::move(w.z1));
    out.assignment.emplace(sc.z2, std::move(w.z2));
  }

  int mul_idx = 0;
  LieElement gen_b = alg.generator(kB);
  LieElement gen_c = alg.generator(kC);
  for (const FlatAtom& atom : compiled.flat.atoms) {
    if (atom.kind != FlatAtom::Kind::mul) continue;
    const std::string& aux = compiled.mul_aux[static_cast<size_t>(mul_idx++)];
    const Polynomial& fu = sigma.at(atom.u);
    const Polynomial& fw = sigma.at(atom.w);
    const Polynomial& fv = sigma.at(atom.v);

    LieElement s = alg.zero();
    bool built = false;
    if (fu * fw == fv) {
      // Paper route: per monomial pair, [[b,a^(2m)],[c,a^(2n)]] = [[b,a^(2m+2n)],c] + [s_mn,a].
      for (int m = 0; m <= fu.degree(); ++m) {
        if (fu.coeff(m).is_zero()) continue;
        for (int n = 0; n <= fw.degree(); ++n) {
          if (fw.coeff(n).is_zero()) continue;
          LieElement smn = witness_s_for(alg, gen_b, 2 * m, n, kC);
          s = alg.add(s, alg.scalar_mul(fu.coeff(m) * fw.coeff(n), smn));
        }
      }
      built = true;
    }
    LieElement diff = alg.sub(
        alg.bracket(out.assignment.at(compiled.var_map.at(atom.u).x),
                    out.assignment.at(compiled.var_map.at(atom.w).y)),
        alg.bracket(out.assignment.at(compiled.var_map.at(atom.v).x), gen_c));
    if (!built || alg.bracket(s, alg.generator(kA)) != diff) {
      // Fall back to the exact image solve; empty solution set means the
      // constraint is unsatisfiable for this assignment.
      if (auto sol = solve_ad_image(alg, diff, kA)) {
        s = *sol;
      } else {
        s = alg.zero();
        out.failures.push_back(aux);
      }
    }
    out.assignment.emplace(aux, std::move(s));
  }
  return out;
}

}  // namespace freelie
