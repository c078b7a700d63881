#pragma once
// Scalar expression DSL over the variables s, t, q.
//
// Grammar (EBNF):
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | power
//   power  := atom ('^' factor)?
//   atom   := number | 'pi' | var | func '(' expr ')' | '(' expr ')'
//   func   := 'sin' | 'cos' | 'tan' | 'exp' | 'log' | 'sqrt'
//   var    := 's' | 't' | 'q'
//
// '+', '-', '*', '/' associate left, '^' associates right and binds tighter
// than unary minus. Whitespace is insignificant. Undeclared identifiers are
// rejected at parse time.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "core/errors.hpp"

namespace isogeo4 {

// Value with the first four derivatives in s, stored as raw derivative
// values f, f', f'', f''', f'''' (not Taylor coefficients).
struct Jet4 {
  double v = 0, d1 = 0, d2 = 0, d3 = 0, d4 = 0;
};

// Value with first partials in all three variables.
struct Grad3 {
  double v = 0, ds = 0, dt = 0, dq = 0;
};

enum class Var : std::uint8_t { S, T, Q };

struct VarSet {
  bool s = false, t = false, q = false;

  constexpr bool contains(Var v) const {
    switch (v) {
      case Var::S: return s;
      case Var::T: return t;
      case Var::Q: return q;
    }
    return false;
  }
};

namespace vars {
inline constexpr VarSet none{};
inline constexpr VarSet only_s{true, false, false};
inline constexpr VarSet only_t{false, true, false};
inline constexpr VarSet only_q{false, false, true};
inline constexpr VarSet st{true, true, false};
inline constexpr VarSet sq{true, false, true};
inline constexpr VarSet tq{false, true, true};
inline constexpr VarSet stq{true, true, true};
}  // namespace vars

// Immutable expression tree. Evaluation in any form is pure and safe to run
// concurrently on a shared instance.
class Expr {
 public:
  Expr();  // the constant 0

  static Expr parse(std::string_view text, VarSet allowed = vars::stq);
  static Expr constant(double c);

  double eval(double s, double t, double q) const;

  // Value and s-derivatives up to fourth order; t and q held constant.
  Jet4 eval_jet_s(double s, double t, double q) const;

  // Value and exact first partials in s, t, q (forward mode).
  Grad3 eval_grad3(double s, double t, double q) const;

  // Canonical text form; re-parsing it yields a structurally identical tree.
  std::string print() const;

  bool uses(Var v) const;
  bool equals(const Expr& rhs) const;

 private:
  enum class Kind : std::uint8_t { Const, Variable, Neg, Add, Sub, Mul, Div, Pow, Call };
  enum class Fn : std::uint8_t { Sin, Cos, Tan, Exp, Log, Sqrt };

  struct Node {
    Kind kind{};
    Fn fn{};
    Var var{};
    double value = 0;
    std::int32_t a = -1, b = -1;
  };

  std::vector<Node> nodes_;
  std::int32_t root_ = -1;

  friend class ExprParser;
  friend struct ExprEval;

  std::string print_node(std::int32_t i) const;
  int effective_precedence(std::int32_t i) const;
};

}  // namespace isogeo4
