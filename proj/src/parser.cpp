#include "cfint/parser.hpp"

#include <cctype>

namespace cfint {

namespace {

constexpr int kMaxDepth = 200;
constexpr unsigned long kMaxExponent = 4096;

class Parser {
 public:
  Parser(std::string_view text, const std::set<Var>& allowed) : text_(text), allowed_(allowed) {}

  Expr run() {
    Expr e = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }

  [[noreturn]] static void fail_at(std::size_t pos, const std::string& what) {
    throw Error(ErrorKind::SyntaxError, what + " at position " + std::to_string(pos));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : p_(p) {
      if (++p_.depth_ > kMaxDepth) p_.fail("expression nested too deeply");
    }
    ~DepthGuard() { --p_.depth_; }
    DepthGuard(const DepthGuard&) = delete;
    DepthGuard& operator=(const DepthGuard&) = delete;
    Parser& p_;
  };

  static Expr binary(Expr::Kind kind, std::size_t pos, Expr lhs, Expr rhs) {
    Expr e;
    e.kind = kind;
    e.position = pos;
    e.args.push_back(std::move(lhs));
    e.args.push_back(std::move(rhs));
    return e;
  }

  Expr expr() {
    DepthGuard guard(*this);
    Expr lhs = term();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('+')) {
        lhs = binary(Expr::Kind::Add, at, std::move(lhs), term());
      } else if (accept('-')) {
        lhs = binary(Expr::Kind::Sub, at, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = unary();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('*')) {
        lhs = binary(Expr::Kind::Mul, at, std::move(lhs), unary());
      } else if (accept('/')) {
        lhs = binary(Expr::Kind::Div, at, std::move(lhs), unary());
      } else {
        return lhs;
      }
    }
  }

  Expr unary() {
    DepthGuard guard(*this);
    skip_space();
    const std::size_t at = pos_;
    if (accept('-')) {
      Expr e;
      e.kind = Expr::Kind::Neg;
      e.position = at;
      e.args.push_back(unary());
      return e;
    }
    return power();
  }

  Expr power() {
    Expr base = primary();
    skip_space();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    Expr e;
    e.kind = Expr::Kind::Pow;
    e.position = at;
    e.exponent = exponent();
    e.args.push_back(std::move(base));
    return e;
  }

  unsigned exponent() {
    skip_space();
    const std::size_t at = pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("exponent must be a nonnegative integer literal");
    const mpz_class base = integer();
    mpz_class value = base;
    skip_space();
    if (accept('^')) {
      const unsigned inner = exponent();
      if (inner > 0 && base > kMaxExponent) fail_at(at, "exponent too large");
      mpz_pow_ui(value.get_mpz_t(), base.get_mpz_t(), inner);
    }
    if (value > kMaxExponent) fail_at(at, "exponent too large");
    return static_cast<unsigned>(value.get_ui());
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Expr primary() {
    skip_space();
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Expr e;
      e.kind = Expr::Kind::Integer;
      e.position = at;
      e.value = integer();
      if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '('))
        fail("implicit multiplication is not allowed");
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(at, pos_ - at));
      Var v = Var::x;
      const bool known = name == "x" || name == "t" || name == "n";
      if (known) v = name == "x" ? Var::x : (name == "t" ? Var::t : Var::n);
      if (!known || allowed_.count(v) == 0)
        throw Error(ErrorKind::UnknownVariable, name + " at position " + std::to_string(at));
      Expr e;
      e.kind = Expr::Kind::Variable;
      e.position = at;
      e.var = v;
      return e;
    }
    if (accept('(')) {
      Expr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::set<Var>& allowed_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

void collect_vars(const Expr& e, std::set<Var>& out) {
  if (e.kind == Expr::Kind::Variable) out.insert(e.var);
  for (const auto& a : e.args) collect_vars(a, out);
}

BRatFunc lower_rec(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Integer:
      return BRatFunc(BPoly(UPoly(Rational(e.value))));
    case Expr::Kind::Variable:
      return e.var == Var::t ? BRatFunc(BPoly::variable()) : BRatFunc(BPoly(UPoly::variable()));
    case Expr::Kind::Neg:
      return -lower_rec(e.args[0]);
    case Expr::Kind::Add:
      return lower_rec(e.args[0]) + lower_rec(e.args[1]);
    case Expr::Kind::Sub:
      return lower_rec(e.args[0]) - lower_rec(e.args[1]);
    case Expr::Kind::Mul:
      return lower_rec(e.args[0]) * lower_rec(e.args[1]);
    case Expr::Kind::Div: {
      const BRatFunc den = lower_rec(e.args[1]);
      if (den.is_zero())
        throw Error(ErrorKind::DivisionByZeroExpr, "division by zero at position " + std::to_string(e.position));
      return lower_rec(e.args[0]) / den;
    }
    case Expr::Kind::Pow:
      return pow(lower_rec(e.args[0]), e.exponent);
  }
  throw Error(ErrorKind::InvalidInput, "unknown expression node");
}

}  // namespace

Expr parse(std::string_view text, const std::set<Var>& allowed) { return Parser(text, allowed).run(); }

BRatFunc lower(const Expr& e) {
  std::set<Var> vars;
  collect_vars(e, vars);
  if (vars.count(Var::n) != 0 && vars.size() > 1)
    throw Error(ErrorKind::InvalidInput, "n cannot be combined with x or t in one expression");
  return lower_rec(e);
}

BRatFunc parse_bivariate(std::string_view text) { return lower(parse(text, {Var::x, Var::t})); }

URatFunc parse_univariate(std::string_view text, Var v) {
  const BRatFunc f = lower(parse(text, {v}));
  const auto project = [&](const BPoly& p) -> UPoly {
    if (v == Var::t) return p.map([](const UPoly& c) { return c.coeff(0); });
    return p.coeff(0);
  };
  return URatFunc(project(f.num()), project(f.den()));
}

UPoly parse_upoly(std::string_view text, Var v) {
  const URatFunc f = parse_univariate(text, v);
  if (!f.is_polynomial()) throw Error(ErrorKind::InvalidInput, "expected a polynomial: '" + std::string(text) + "'");
  return f.num();
}

}  // namespace cfint
