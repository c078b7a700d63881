#include "core/expr.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace isogeo4 {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

bool bit_equal(double a, double b) {
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

const char* fn_name(int f) {
  static const char* names[] = {"sin", "cos", "tan", "exp", "log", "sqrt"};
  return names[f];
}

// ---------------------------------------------------------------------------
// Number systems the generic evaluator runs over.

struct ScalarOps {
  using V = double;

  static V constant(double c) { return c; }
  static V variable(Var v, double s, double t, double q) {
    switch (v) {
      case Var::S: return s;
      case Var::T: return t;
      default: return q;
    }
  }
  static V neg(V a) { return -a; }
  static V add(V a, V b) { return a + b; }
  static V sub(V a, V b) { return a - b; }
  static V mul(V a, V b) { return a * b; }
  static V div(V a, V b) {
    if (b == 0.0) throw DomainError("division by zero");
    return a / b;
  }
  static V pow(V a, V b) {
    const double r = std::pow(a, b);
    if (!std::isfinite(r)) throw DomainError("power is not finite (base " + format_double(a) + ", exponent " + format_double(b) + ")");
    return r;
  }
  static V call(int f, V a) {
    switch (f) {
      case 0: return std::sin(a);
      case 1: return std::cos(a);
      case 2: return std::tan(a);
      case 3: return std::exp(a);
      case 4:
        if (a <= 0.0) throw DomainError("log of a non-positive value");
        return std::log(a);
      default:
        if (a < 0.0) throw DomainError("sqrt of a negative value");
        return std::sqrt(a);
    }
  }
};

// Derivative table F[k] = f^(k)(u0) for the elementary functions; shared by
// the jet and gradient systems.
void fn_derivatives(int f, double u, int order, double F[5]) {
  switch (f) {
    case 0: {  // sin
      const double sn = std::sin(u), cs = std::cos(u);
      const double tab[5] = {sn, cs, -sn, -cs, sn};
      for (int k = 0; k <= order; ++k) F[k] = tab[k];
      return;
    }
    case 1: {  // cos
      const double sn = std::sin(u), cs = std::cos(u);
      const double tab[5] = {cs, -sn, -cs, sn, cs};
      for (int k = 0; k <= order; ++k) F[k] = tab[k];
      return;
    }
    case 2: {  // tan
      const double tn = std::tan(u);
      if (!std::isfinite(tn)) throw DomainError("tan at a pole");
      const double t2 = tn * tn;
      F[0] = tn;
      if (order >= 1) F[1] = 1 + t2;
      if (order >= 2) F[2] = 2 * tn * (1 + t2);
      if (order >= 3) F[3] = (1 + t2) * (2 + 6 * t2);
      if (order >= 4) F[4] = (1 + t2) * (16 * tn + 24 * tn * t2);
      return;
    }
    case 3: {  // exp
      const double e = std::exp(u);
      for (int k = 0; k <= order; ++k) F[k] = e;
      return;
    }
    case 4: {  // log
      if (u <= 0.0) throw DomainError("log of a non-positive value");
      F[0] = std::log(u);
      if (order >= 1) F[1] = 1 / u;
      if (order >= 2) F[2] = -F[1] / u;
      if (order >= 3) F[3] = -2 * F[2] / u;
      if (order >= 4) F[4] = -3 * F[3] / u;
      return;
    }
    default: {  // sqrt
      if (u < 0.0) throw DomainError("sqrt of a negative value");
      if (order >= 1 && u == 0.0) throw DomainError("derivative of sqrt at zero");
      F[0] = std::sqrt(u);
      if (order >= 1) F[1] = 0.5 / F[0];
      if (order >= 2) F[2] = -0.5 * F[1] / u;
      if (order >= 3) F[3] = -1.5 * F[2] / u;
      if (order >= 4) F[4] = -2.5 * F[3] / u;
      return;
    }
  }
}

// F[k] = d^k/du^k of u^c for constant exponent c. The falling-factorial
// coefficient is checked before the power so that integer exponents never
// touch a negative power of zero.
void pow_derivatives(double u, double c, int order, double F[5]) {
  double coeff = 1.0;
  for (int k = 0; k <= order; ++k) {
    if (coeff == 0.0) {
      F[k] = 0.0;
    } else {
      F[k] = coeff * std::pow(u, c - k);
      if (!std::isfinite(F[k]))
        throw DomainError("power is not finite (base " + format_double(u) + ", exponent " + format_double(c) + ")");
    }
    coeff *= (c - k);
  }
}

struct JetOps {
  using V = Jet4;

  static V constant(double c) { return {c, 0, 0, 0, 0}; }
  static V variable(Var v, double s, double t, double q) {
    switch (v) {
      case Var::S: return {s, 1, 0, 0, 0};
      case Var::T: return {t, 0, 0, 0, 0};
      default: return {q, 0, 0, 0, 0};
    }
  }
  static V neg(const V& a) { return {-a.v, -a.d1, -a.d2, -a.d3, -a.d4}; }
  static V add(const V& a, const V& b) {
    return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2, a.d3 + b.d3, a.d4 + b.d4};
  }
  static V sub(const V& a, const V& b) {
    return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2, a.d3 - b.d3, a.d4 - b.d4};
  }
  static V mul(const V& a, const V& b) {
    // Leibniz with binomial weights on raw derivative values.
    V r;
    r.v = a.v * b.v;
    r.d1 = a.d1 * b.v + a.v * b.d1;
    r.d2 = a.d2 * b.v + 2 * a.d1 * b.d1 + a.v * b.d2;
    r.d3 = a.d3 * b.v + 3 * a.d2 * b.d1 + 3 * a.d1 * b.d2 + a.v * b.d3;
    r.d4 = a.d4 * b.v + 4 * a.d3 * b.d1 + 6 * a.d2 * b.d2 + 4 * a.d1 * b.d3 + a.v * b.d4;
    return r;
  }
  static V div(const V& a, const V& b) {
    if (b.v == 0.0) throw DomainError("division by zero");
    V r;
    r.v = a.v / b.v;
    r.d1 = (a.d1 - r.v * b.d1) / b.v;
    r.d2 = (a.d2 - 2 * r.d1 * b.d1 - r.v * b.d2) / b.v;
    r.d3 = (a.d3 - 3 * r.d2 * b.d1 - 3 * r.d1 * b.d2 - r.v * b.d3) / b.v;
    r.d4 = (a.d4 - 4 * r.d3 * b.d1 - 6 * r.d2 * b.d2 - 4 * r.d1 * b.d3 - r.v * b.d4) / b.v;
    return r;
  }
  // Faa di Bruno up to order four.
  static V compose(const double F[5], const V& u) {
    V r;
    const double u1 = u.d1, u2 = u.d2, u3 = u.d3, u4 = u.d4;
    r.v = F[0];
    r.d1 = F[1] * u1;
    r.d2 = F[2] * u1 * u1 + F[1] * u2;
    r.d3 = F[3] * u1 * u1 * u1 + 3 * F[2] * u1 * u2 + F[1] * u3;
    r.d4 = F[4] * u1 * u1 * u1 * u1 + 6 * F[3] * u1 * u1 * u2 +
           F[2] * (3 * u2 * u2 + 4 * u1 * u3) + F[1] * u4;
    return r;
  }
  static V call(int f, const V& u) {
    double F[5] = {};
    fn_derivatives(f, u.v, 4, F);
    return compose(F, u);
  }
  static V pow(const V& a, const V& b) {
    const bool const_exponent = b.d1 == 0 && b.d2 == 0 && b.d3 == 0 && b.d4 == 0;
    if (const_exponent) {
      double F[5] = {};
      pow_derivatives(a.v, b.v, 4, F);
      return compose(F, a);
    }
    if (a.v <= 0.0) throw DomainError("variable exponent requires a positive base");
    double L[5] = {};
    fn_derivatives(4, a.v, 4, L);
    const V ln_a = compose(L, a);
    const V prod = mul(b, ln_a);
    double E[5] = {};
    fn_derivatives(3, prod.v, 4, E);
    return compose(E, prod);
  }
};

struct GradOps {
  using V = Grad3;

  static V constant(double c) { return {c, 0, 0, 0}; }
  static V variable(Var v, double s, double t, double q) {
    switch (v) {
      case Var::S: return {s, 1, 0, 0};
      case Var::T: return {t, 0, 1, 0};
      default: return {q, 0, 0, 1};
    }
  }
  static V neg(const V& a) { return {-a.v, -a.ds, -a.dt, -a.dq}; }
  static V add(const V& a, const V& b) {
    return {a.v + b.v, a.ds + b.ds, a.dt + b.dt, a.dq + b.dq};
  }
  static V sub(const V& a, const V& b) {
    return {a.v - b.v, a.ds - b.ds, a.dt - b.dt, a.dq - b.dq};
  }
  static V mul(const V& a, const V& b) {
    return {a.v * b.v, a.ds * b.v + a.v * b.ds, a.dt * b.v + a.v * b.dt,
            a.dq * b.v + a.v * b.dq};
  }
  static V div(const V& a, const V& b) {
    if (b.v == 0.0) throw DomainError("division by zero");
    const double v = a.v / b.v;
    return {v, (a.ds - v * b.ds) / b.v, (a.dt - v * b.dt) / b.v,
            (a.dq - v * b.dq) / b.v};
  }
  static V chain(double f0, double f1, const V& u) {
    return {f0, f1 * u.ds, f1 * u.dt, f1 * u.dq};
  }
  static V call(int f, const V& u) {
    double F[5] = {};
    fn_derivatives(f, u.v, 1, F);
    return chain(F[0], F[1], u);
  }
  static V pow(const V& a, const V& b) {
    const bool const_exponent = b.ds == 0 && b.dt == 0 && b.dq == 0;
    if (const_exponent) {
      double F[5] = {};
      pow_derivatives(a.v, b.v, 1, F);
      return chain(F[0], F[1], a);
    }
    if (a.v <= 0.0) throw DomainError("variable exponent requires a positive base");
    double L[5] = {};
    fn_derivatives(4, a.v, 1, L);
    const V ln_a = chain(L[0], L[1], a);
    const V prod = mul(b, ln_a);
    double E[5] = {};
    fn_derivatives(3, prod.v, 1, E);
    return chain(E[0], E[1], prod);
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// Generic evaluator.

struct ExprEval {
  template <class Ops>
  static typename Ops::V run(const Expr& e, std::int32_t i, double s, double t, double q) {
    const auto& n = e.nodes_[static_cast<std::size_t>(i)];
    using K = Expr::Kind;
    switch (n.kind) {
      case K::Const: return Ops::constant(n.value);
      case K::Variable: return Ops::variable(n.var, s, t, q);
      case K::Neg: return Ops::neg(run<Ops>(e, n.a, s, t, q));
      case K::Add: return Ops::add(run<Ops>(e, n.a, s, t, q), run<Ops>(e, n.b, s, t, q));
      case K::Sub: return Ops::sub(run<Ops>(e, n.a, s, t, q), run<Ops>(e, n.b, s, t, q));
      case K::Mul: return Ops::mul(run<Ops>(e, n.a, s, t, q), run<Ops>(e, n.b, s, t, q));
      case K::Div: return Ops::div(run<Ops>(e, n.a, s, t, q), run<Ops>(e, n.b, s, t, q));
      case K::Pow: return Ops::pow(run<Ops>(e, n.a, s, t, q), run<Ops>(e, n.b, s, t, q));
      case K::Call:
      default: return Ops::call(static_cast<int>(n.fn), run<Ops>(e, n.a, s, t, q));
    }
  }
};

// ---------------------------------------------------------------------------
// Recursive-descent parser over a hand-written token stream.

namespace {

struct Token {
  enum Type { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Type type = End;
  double number = 0;
  std::string_view text;
  std::size_t offset = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    current_ = Token{};
    current_.offset = pos_;
    if (pos_ >= text_.size()) {
      current_.type = Token::End;
      return;
    }
    const char c = text_[pos_];
    switch (c) {
      case '+': current_.type = Token::Plus; ++pos_; return;
      case '-': current_.type = Token::Minus; ++pos_; return;
      case '*': current_.type = Token::Star; ++pos_; return;
      case '/': current_.type = Token::Slash; ++pos_; return;
      case '^': current_.type = Token::Caret; ++pos_; return;
      case '(': current_.type = Token::LParen; ++pos_; return;
      case ')': current_.type = Token::RParen; ++pos_; return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      lex_number();
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
        ++end;
      current_.type = Token::Ident;
      current_.text = text_.substr(pos_, end - pos_);
      pos_ = end;
      return;
    }
    throw SyntaxError("syntax error at offset " + std::to_string(pos_) +
                          ": unexpected character '" + std::string(1, c) + "'",
                      pos_, "token");
  }

  void lex_number() {
    std::size_t end = pos_;
    bool any_digit = false;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) {
      ++end;
      any_digit = true;
    }
    if (end < text_.size() && text_[end] == '.') {
      ++end;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) {
        ++end;
        any_digit = true;
      }
    }
    if (!any_digit)
      throw SyntaxError("syntax error at offset " + std::to_string(pos_) + ": malformed number",
                        pos_, "number");
    if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
      std::size_t exp_end = end + 1;
      if (exp_end < text_.size() && (text_[exp_end] == '+' || text_[exp_end] == '-')) ++exp_end;
      std::size_t digits = exp_end;
      while (digits < text_.size() && std::isdigit(static_cast<unsigned char>(text_[digits])))
        ++digits;
      if (digits > exp_end) end = digits;  // exponent only if it has digits
    }
    double value = 0;
    const auto res = std::from_chars(text_.data() + pos_, text_.data() + end, value);
    if (res.ec != std::errc{})
      throw SyntaxError("syntax error at offset " + std::to_string(pos_) + ": malformed number",
                        pos_, "number");
    current_.type = Token::Number;
    current_.number = value;
    current_.text = text_.substr(pos_, end - pos_);
    pos_ = end;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_;
};

}  // namespace

class ExprParser {
 public:
  ExprParser(std::string_view text, VarSet allowed) : lexer_(text), allowed_(allowed) {}

  Expr run() {
    Expr e;
    e.nodes_.clear();
    nodes_ = &e.nodes_;
    e.root_ = parse_expr();
    const Token& t = lexer_.peek();
    if (t.type != Token::End)
      throw SyntaxError("syntax error at offset " + std::to_string(t.offset) +
                            ": expected end of input",
                        t.offset, "end of input");
    return e;
  }

 private:
  using Kind = Expr::Kind;
  using Fn = Expr::Fn;

  std::int32_t push(Expr::Node n) {
    nodes_->push_back(n);
    return static_cast<std::int32_t>(nodes_->size() - 1);
  }

  std::int32_t parse_expr() {
    std::int32_t lhs = parse_term();
    for (;;) {
      const Token::Type t = lexer_.peek().type;
      if (t != Token::Plus && t != Token::Minus) return lhs;
      lexer_.take();
      const std::int32_t rhs = parse_term();
      Expr::Node n;
      n.kind = (t == Token::Plus) ? Kind::Add : Kind::Sub;
      n.a = lhs;
      n.b = rhs;
      lhs = push(n);
    }
  }

  std::int32_t parse_term() {
    std::int32_t lhs = parse_factor();
    for (;;) {
      const Token::Type t = lexer_.peek().type;
      if (t != Token::Star && t != Token::Slash) return lhs;
      lexer_.take();
      const std::int32_t rhs = parse_factor();
      Expr::Node n;
      n.kind = (t == Token::Star) ? Kind::Mul : Kind::Div;
      n.a = lhs;
      n.b = rhs;
      lhs = push(n);
    }
  }

  std::int32_t parse_factor() {
    if (lexer_.peek().type == Token::Minus) {
      lexer_.take();
      const std::int32_t child = parse_factor();
      Expr::Node& c = (*nodes_)[static_cast<std::size_t>(child)];
      if (c.kind == Kind::Const) {  // fold so "-0.5" is a single literal
        c.value = -c.value;
        return child;
      }
      Expr::Node n;
      n.kind = Kind::Neg;
      n.a = child;
      return push(n);
    }
    return parse_power();
  }

  std::int32_t parse_power() {
    const std::int32_t base = parse_atom();
    if (lexer_.peek().type != Token::Caret) return base;
    lexer_.take();
    const std::int32_t exponent = parse_factor();
    Expr::Node n;
    n.kind = Kind::Pow;
    n.a = base;
    n.b = exponent;
    return push(n);
  }

  std::int32_t parse_atom() {
    const Token t = lexer_.peek();
    switch (t.type) {
      case Token::Number: {
        lexer_.take();
        Expr::Node n;
        n.kind = Kind::Const;
        n.value = t.number;
        return push(n);
      }
      case Token::LParen: {
        lexer_.take();
        const std::int32_t inner = parse_expr();
        expect(Token::RParen, ")");
        return inner;
      }
      case Token::Ident:
        return parse_ident();
      default:
        throw SyntaxError("syntax error at offset " + std::to_string(t.offset) +
                              ": expected number, 'pi', variable, function or '('",
                          t.offset, "number, 'pi', variable, function or '('");
    }
  }

  std::int32_t parse_ident() {
    const Token t = lexer_.take();
    const std::string_view name = t.text;
    if (name == "pi") {
      Expr::Node n;
      n.kind = Kind::Const;
      n.value = kPi;
      return push(n);
    }
    static constexpr std::string_view fn_names[] = {"sin", "cos", "tan", "exp", "log", "sqrt"};
    for (int f = 0; f < 6; ++f) {
      if (name == fn_names[f]) {
        expect(Token::LParen, "(");
        const std::int32_t arg = parse_expr();
        expect(Token::RParen, ")");
        Expr::Node n;
        n.kind = Kind::Call;
        n.fn = static_cast<Fn>(f);
        n.a = arg;
        return push(n);
      }
    }
    Var v{};
    if (name == "s") v = Var::S;
    else if (name == "t") v = Var::T;
    else if (name == "q") v = Var::Q;
    else
      throw UnknownIdentifier("unknown identifier '" + std::string(name) + "' at offset " +
                                  std::to_string(t.offset),
                              t.offset, std::string(name));
    if (!allowed_.contains(v))
      throw UnknownIdentifier("variable '" + std::string(name) + "' not allowed here (offset " +
                                  std::to_string(t.offset) + ")",
                              t.offset, std::string(name));
    Expr::Node n;
    n.kind = Kind::Variable;
    n.var = v;
    return push(n);
  }

  void expect(Token::Type type, const char* what) {
    const Token& t = lexer_.peek();
    if (t.type != type)
      throw SyntaxError("syntax error at offset " + std::to_string(t.offset) + ": expected '" +
                            what + "'",
                        t.offset, what);
    lexer_.take();
  }

  Lexer lexer_;
  VarSet allowed_;
  std::vector<Expr::Node>* nodes_ = nullptr;
};

// ---------------------------------------------------------------------------
// Expr members.

Expr::Expr() {
  Node n;
  n.kind = Kind::Const;
  n.value = 0.0;
  nodes_.push_back(n);
  root_ = 0;
}

Expr Expr::parse(std::string_view text, VarSet allowed) {
  return ExprParser(text, allowed).run();
}

Expr Expr::constant(double c) {
  Expr e;
  e.nodes_[0].value = c;
  return e;
}

double Expr::eval(double s, double t, double q) const {
  return ExprEval::run<ScalarOps>(*this, root_, s, t, q);
}

Jet4 Expr::eval_jet_s(double s, double t, double q) const {
  return ExprEval::run<JetOps>(*this, root_, s, t, q);
}

Grad3 Expr::eval_grad3(double s, double t, double q) const {
  return ExprEval::run<GradOps>(*this, root_, s, t, q);
}

bool Expr::uses(Var v) const {
  for (const Node& n : nodes_)
    if (n.kind == Kind::Variable && n.var == v) return true;
  return false;
}

// Precedence for printing: Add/Sub 1, Mul/Div 2, Neg 3, Pow 4, atoms 5.
// Negative literals print with a leading '-', so they parenthesize like Neg.
int Expr::effective_precedence(std::int32_t i) const {
  const Node& n = nodes_[static_cast<std::size_t>(i)];
  switch (n.kind) {
    case Kind::Add:
    case Kind::Sub: return 1;
    case Kind::Mul:
    case Kind::Div: return 2;
    case Kind::Neg: return 3;
    case Kind::Pow: return 4;
    case Kind::Const: return std::signbit(n.value) ? 3 : 5;
    default: return 5;
  }
}

std::string Expr::print_node(std::int32_t i) const {
  const Node& n = nodes_[static_cast<std::size_t>(i)];
  auto wrap = [&](std::int32_t child, bool parens) {
    const std::string text = print_node(child);
    return parens ? "(" + text + ")" : text;
  };
  switch (n.kind) {
    case Kind::Const: return format_double(n.value);
    case Kind::Variable:
      switch (n.var) {
        case Var::S: return "s";
        case Var::T: return "t";
        default: return "q";
      }
    case Kind::Neg: return "-" + wrap(n.a, effective_precedence(n.a) < 3);
    case Kind::Add:
      return wrap(n.a, effective_precedence(n.a) < 1) + " + " +
             wrap(n.b, effective_precedence(n.b) <= 1);
    case Kind::Sub:
      return wrap(n.a, effective_precedence(n.a) < 1) + " - " +
             wrap(n.b, effective_precedence(n.b) <= 1);
    case Kind::Mul:
      return wrap(n.a, effective_precedence(n.a) < 2) + "*" +
             wrap(n.b, effective_precedence(n.b) <= 2);
    case Kind::Div:
      return wrap(n.a, effective_precedence(n.a) < 2) + "/" +
             wrap(n.b, effective_precedence(n.b) <= 2);
    case Kind::Pow:
      return wrap(n.a, effective_precedence(n.a) <= 4) + "^" +
             wrap(n.b, effective_precedence(n.b) < 3);
    case Kind::Call:
    default:
      return std::string(fn_name(static_cast<int>(n.fn))) + "(" + print_node(n.a) + ")";
  }
}

std::string Expr::print() const { return print_node(root_); }

bool Expr::equals(const Expr& rhs) const {
  // Structural comparison; constants compare bit for bit.
  struct Cmp {
    const std::vector<Node>& a;
    const std::vector<Node>& b;
    bool eq(std::int32_t i, std::int32_t j) const {
      const Node& x = a[static_cast<std::size_t>(i)];
      const Node& y = b[static_cast<std::size_t>(j)];
      if (x.kind != y.kind) return false;
      switch (x.kind) {
        case Kind::Const: return bit_equal(x.value, y.value);
        case Kind::Variable: return x.var == y.var;
        case Kind::Neg: return eq(x.a, y.a);
        case Kind::Call: return x.fn == y.fn && eq(x.a, y.a);
        default: return eq(x.a, y.a) && eq(x.b, y.b);
      }
    }
  };
  return Cmp{nodes_, rhs.nodes_}.eq(root_, rhs.root_);
}

}  // namespace isogeo4
