#include "bolalg/identity.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bolalg {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Identity parse() {
    Identity id;
    while (peek_word() == "sym") {
      read_word();
      do {
        const std::size_t at = pos();
        std::string name = expect_name();
        if (std::find(id.symbols.begin(), id.symbols.end(), name) != id.symbols.end())
          fail(at, "symbol '" + name + "' declared twice");
        id.symbols.push_back(std::move(name));
      } while (accept(','));
      expect(';');
      id.declared = true;
    }
    declared_ = id.declared;
    symbols_ = &id.symbols;
    id.lhs = expr();
    expect('=');
    id.rhs = expr();
    skip();
    if (i_ != s_.size()) fail(pos(), "expected end of input");
    return id;
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
  bool declared_ = false;
  std::vector<std::string>* symbols_ = nullptr;

  [[noreturn]] void fail(std::size_t at, const std::string& what) const {
    throw ParseError("identity: " + what + " at position " + std::to_string(at), 1, at);
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  std::size_t pos() {
    skip();
    return i_ + 1;
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(pos(), std::string("expected '") + c + "'");
  }

  static bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string_view peek_word() {
    skip();
    std::size_t j = i_;
    if (j >= s_.size() || !name_start(s_[j])) return {};
    while (j < s_.size() && name_char(s_[j])) ++j;
    return s_.substr(i_, j - i_);
  }
  std::string read_word() {
    std::string w(peek_word());
    i_ += w.size();
    return w;
  }
  std::string expect_name() {
    if (peek_word().empty()) fail(pos(), "expected a symbol name");
    return read_word();
  }

  Side expr() {
    Side side;
    // A lone "0" is the empty sum.
    if (peek() == '0') {
      std::size_t j = i_ + 1;
      while (j < s_.size() && std::isspace(static_cast<unsigned char>(s_[j]))) ++j;
      const char next = j < s_.size() ? s_[j] : '\0';
      if (next == '=' || next == '\0') {
        ++i_;
        return side;
      }
    }
    side.push_back(term(Scalar(1)));
    while (true) {
      if (accept('+')) side.push_back(term(Scalar(1)));
      else if (accept('-')) side.push_back(term(Scalar(-1)));
      else return side;
    }
  }

  Term term(const Scalar& sign) {
    Term t;
    t.coefficient = sign;
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
      const std::size_t at = pos();
      std::size_t j = i_;
      if (s_[j] == '-' || s_[j] == '+') ++j;
      while (j < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[j])) || s_[j] == '/'))
        ++j;
      Scalar q;
      if (!try_parse_rational(s_.substr(i_, j - i_), q)) fail(at, "malformed rational");
      i_ = j;
      expect('*');
      t.coefficient *= q;
    }
    t.chain.push_back(atom());
    while (accept('.')) t.chain.push_back(atom());
    return t;
  }

  Atom atom() {
    const std::size_t at = pos();
    const std::string word(peek_word());
    Atom a;
    if (word == "id") {
      read_word();
      a.kind = Atom::Kind::id;
      return a;
    }
    std::size_t arity = 0;
    if (word == "L") a.kind = Atom::Kind::L, arity = 1;
    else if (word == "R") a.kind = Atom::Kind::R, arity = 1;
    else if (word == "r") a.kind = Atom::Kind::r, arity = 2;
    else if (word == "c") a.kind = Atom::Kind::c, arity = 2;
    else if (word == "m") a.kind = Atom::Kind::m, arity = 2;
    else fail(at, "expected one of L( R( r( c( m( id");
    read_word();
    expect('(');
    a.args.push_back(arg());
    if (arity == 2) {
      expect(',');
      a.args.push_back(arg());
    }
    expect(')');
    return a;
  }

  Arg arg() {
    const std::size_t at = pos();
    if (accept('(')) {
      Arg a;
      a.args.push_back(arg());
      if (accept(';')) {
        a.kind = Arg::Kind::triple;
        a.args.push_back(arg());
        expect(',');
        a.args.push_back(arg());
      } else if (accept('*')) {
        a.kind = Arg::Kind::product;
        a.args.push_back(arg());
      } else {
        fail(pos(), "expected ';' or '*'");
      }
      expect(')');
      return a;
    }
    if (peek_word().empty()) fail(at, "expected a symbol name or '('");
    Arg a;
    a.name = read_word();
    auto& syms = *symbols_;
    if (std::find(syms.begin(), syms.end(), a.name) == syms.end()) {
      if (declared_) fail(at, "undeclared symbol '" + a.name + "'");
      syms.push_back(a.name);
    }
    return a;
  }
};

void print_arg(std::ostream& os, const Arg& a) {
  switch (a.kind) {
    case Arg::Kind::symbol:
      os << a.name;
      break;
    case Arg::Kind::triple:
      os << '(';
      print_arg(os, a.args[0]);
      os << ';';
      print_arg(os, a.args[1]);
      os << ',';
      print_arg(os, a.args[2]);
      os << ')';
      break;
    case Arg::Kind::product:
      os << '(';
      print_arg(os, a.args[0]);
      os << '*';
      print_arg(os, a.args[1]);
      os << ')';
      break;
  }
}

void print_atom(std::ostream& os, const Atom& a) {
  static const char* names[] = {"L", "R", "r", "c", "m", "id"};
  os << names[static_cast<int>(a.kind)];
  if (a.kind == Atom::Kind::id) return;
  os << '(';
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) os << ',';
    print_arg(os, a.args[i]);
  }
  os << ')';
}

void print_side(std::ostream& os, const Side& side) {
  if (side.empty()) {
    os << '0';
    return;
  }
  for (std::size_t t = 0; t < side.size(); ++t) {
    const Term& term = side[t];
    Scalar coef = term.coefficient;
    if (t == 0) {
      if (coef != 1) os << to_string(coef) << '*';
    } else {
      os << (coef < 0 ? " - " : " + ");
      if (coef < 0) coef = -coef;
      if (coef != 1) os << to_string(coef) << '*';
    }
    for (std::size_t k = 0; k < term.chain.size(); ++k) {
      if (k) os << '.';
      print_atom(os, term.chain[k]);
    }
  }
}

void count_symbols(const Arg& a, std::map<std::string, int>& deg) {
  if (a.kind == Arg::Kind::symbol) ++deg[a.name];
  for (const auto& sub : a.args) count_symbols(sub, deg);
}

Vector eval_arg(const BolAlgebra& alg, const Arg& a, const Environment& env) {
  switch (a.kind) {
    case Arg::Kind::symbol: {
      auto it = env.find(a.name);
      if (it == env.end()) throw PreconditionError("identity: symbol '" + a.name + "' is unbound");
      if (it->second.size() != alg.dim())
        throw DimensionError("identity: binding of '" + a.name + "' has the wrong dimension");
      return it->second;
    }
    case Arg::Kind::triple:
      return alg.triple(eval_arg(alg, a.args[0], env), eval_arg(alg, a.args[1], env),
                        eval_arg(alg, a.args[2], env));
    case Arg::Kind::product:
      return alg.product(eval_arg(alg, a.args[0], env), eval_arg(alg, a.args[1], env));
  }
  return {};
}

Matrix eval_atom(const BolAlgebra& alg, const BolModule& mod, const Atom& a,
                 const Environment& env) {
  switch (a.kind) {
    case Atom::Kind::id: return Matrix::identity(mod.mod_dim());
    case Atom::Kind::L: return mod.L(eval_arg(alg, a.args[0], env));
    case Atom::Kind::R: return mod.R(eval_arg(alg, a.args[0], env));
    case Atom::Kind::r:
      return mod.r(eval_arg(alg, a.args[0], env), eval_arg(alg, a.args[1], env));
    case Atom::Kind::c:
      return mod.c(eval_arg(alg, a.args[0], env), eval_arg(alg, a.args[1], env));
    case Atom::Kind::m:
      return mod.m(eval_arg(alg, a.args[0], env), eval_arg(alg, a.args[1], env));
  }
  return {};
}

}  // namespace

Identity parse_identity(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Identity& identity) {
  std::ostringstream os;
  if (identity.declared) {
    os << "sym ";
    for (std::size_t i = 0; i < identity.symbols.size(); ++i)
      os << (i ? ", " : "") << identity.symbols[i];
    os << "; ";
  }
  print_side(os, identity.lhs);
  os << " = ";
  print_side(os, identity.rhs);
  return os.str();
}

Identity dualize_identity(const Identity& identity) {
  auto dual_side = [](Side side) {
    for (auto& term : side) {
      std::reverse(term.chain.begin(), term.chain.end());
      for (auto& atom : term.chain) {
        switch (atom.kind) {
          case Atom::Kind::L: atom.kind = Atom::Kind::R; break;
          case Atom::Kind::R: atom.kind = Atom::Kind::L; break;
          case Atom::Kind::r:
          case Atom::Kind::c:
          case Atom::Kind::m: std::swap(atom.args[0], atom.args[1]); break;
          case Atom::Kind::id: break;
        }
      }
    }
    return side;
  };
  Identity out = identity;
  out.lhs = dual_side(identity.lhs);
  out.rhs = dual_side(identity.rhs);
  return out;
}

bool plain_symbols(const Identity& identity) {
  for (const Side* side : {&identity.lhs, &identity.rhs})
    for (const auto& term : *side)
      for (const auto& atom : term.chain)
        for (const auto& arg : atom.args)
          if (arg.kind != Arg::Kind::symbol) return false;
  return true;
}

bool multilinear(const Identity& identity) {
  for (const Side* side : {&identity.lhs, &identity.rhs})
    for (const auto& term : *side) {
      std::map<std::string, int> deg;
      for (const auto& atom : term.chain)
        for (const auto& arg : atom.args) count_symbols(arg, deg);
      for (const auto& s : identity.symbols) {
        auto it = deg.find(s);
        if (it == deg.end() || it->second != 1) return false;
      }
    }
  return true;
}

Matrix evaluate_side(const BolAlgebra& algebra, const BolModule& module, const Side& side,
                     const Environment& env, OperatorOrder order) {
  if (algebra.dim() != module.alg_dim())
    throw DimensionError("identity: module and algebra dimensions disagree");
  const std::size_t m = module.mod_dim();
  Matrix total(m, m);
  for (const auto& term : side) {
    Matrix prod = Matrix::identity(m);
    for (const auto& atom : term.chain) {
      const Matrix a = eval_atom(algebra, module, atom, env);
      prod = order == OperatorOrder::standard ? prod * a : a * prod;
    }
    total.add_scaled(term.coefficient, prod);
  }
  return total;
}

IdentityResult check_identity(const BolAlgebra& algebra, const BolModule& module,
                              const Identity& identity, const Environment& env,
                              OperatorOrder order) {
  IdentityResult res;
  res.bindings = 1;
  res.complete = identity.symbols.empty();
  const Matrix diff = evaluate_side(algebra, module, identity.lhs, env, order) -
                      evaluate_side(algebra, module, identity.rhs, env, order);
  if (!diff.is_zero()) {
    res.holds = false;
    res.witness = Witness{{}, flatten(diff), "identity fails for the given binding"};
  }
  return res;
}

IdentityResult check_identity(const BolAlgebra& algebra, const BolModule& module,
                              const Identity& identity, OperatorOrder order) {
  const std::size_t n = algebra.dim();
  const std::size_t k = identity.symbols.size();
  IdentityResult res;
  res.complete = multilinear(identity);
  if (n == 0 && k > 0) return res;

  std::vector<std::size_t> idx(k, 0);
  Environment env;
  while (true) {
    for (std::size_t s = 0; s < k; ++s) env[identity.symbols[s]] = Vector::unit(n, idx[s]);
    ++res.bindings;
    const Matrix diff = evaluate_side(algebra, module, identity.lhs, env, order) -
                        evaluate_side(algebra, module, identity.rhs, env, order);
    if (!diff.is_zero()) {
      res.holds = false;
      Witness w;
      std::ostringstream detail;
      for (std::size_t s = 0; s < k; ++s) {
        w.indices.push_back(idx[s] + 1);
        detail << (s ? ", " : "") << identity.symbols[s] << "=e" << idx[s] + 1;
      }
      w.residual = flatten(diff);
      w.detail = detail.str();
      res.witness = std::move(w);
      return res;
    }
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < n) break;
      idx[pos] = 0;
      if (pos == 0) return res;
    }
    if (k == 0) return res;
  }
}

std::string builtin_identity_text(std::string_view name, AxiomForm form) {
  const bool printed = form == AxiomForm::printed;
  if (name == "p1") return "sym t; R(t) = -1*L(t)";
  if (name == "p2") return "sym a, b; m(a,b) + r(a,b) = 0";
  if (name == "p3")
    return printed ? "sym a, b; m(a,b) + c(a,b) + r(a,b) = 0"
                   : "sym a, b; m(a,b) + c(b,a) + r(a,b) = 0";
  if (name == "p4")
    return std::string("sym a, b, g, t; ") + (printed ? "c((g;a,b),t)" : "c((a;b,g),t)") +
           " = m(a,b).c(g,t) + c(a,g).c(b,t) + r(b,g).c(a,t)";
  if (name == "p5")
    return printed
               ? "sym a, b, t; m(a,b).L(t) = L((t;a,b)) + L(t).r(a,b) + m((b*a),t) + L((b*a)).L(t)"
               : "sym a, b, t; r(a,b).L(t) = L((t;a,b)) + L(t).r(a,b) + m((a*b),t) + R((a*b)).L(t)";
  throw PreconditionError("unknown built-in identity '" + std::string(name) + "'");
}

Identity builtin_identity(std::string_view name, AxiomForm form) {
  return parse_identity(builtin_identity_text(name, form));
}

}  // namespace bolalg
