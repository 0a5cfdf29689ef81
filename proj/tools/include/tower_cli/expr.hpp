#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tower/dyadic.hpp"
#include "tower/real.hpp"

namespace tower::cli {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Literal, Var, Let, Add, Sub, Mul, Div, Pow, Neg, Abs, Inv, Sup, Between };

  Kind kind = Kind::Literal;
  Dyadic value;      // Literal
  std::string name;  // Var, Let
  std::vector<ExprPtr> args;

  /// Constructor-style rendering, e.g. `Add(1/2, 1/2)` or `Pow(Sup[1/4, 3/4], 2)`.
  std::string to_string() const;
};

/// Recursive descent over
///   expr    := 'let' ident '=' expr 'in' expr | sum
///   sum     := product (('+' | '-') product)*
///   product := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' unary)?
///   primary := number | ident | fn '(' args ')' | '(' expr ')'
/// with fn one of abs, inv, sup, between. Division by a power-of-two literal,
/// powers of literals, and negated literals fold into a single literal, so
/// `3/2^4` reads as the dyadic 3/16. Throws SyntaxError naming the column.
ExprPtr parse(std::string_view text);

/// Either an exact dyadic or a real known through its interval oracle.
using Value = std::variant<Dyadic, Real>;

struct EvalOptions {
  unsigned precision = 30;
  /// Precisions probed for a sign witness before dividing; 0 means precision + 64.
  unsigned inverse_probe = 0;
};

/// Exact when every step stays inside the dyadics. Throws DivisionNearZero
/// when no positivity witness is found for a divisor.
Value evaluate(const Expr& e, const EvalOptions& options = {});

/// Exact values print as `m/2^u`, reals as `[lo, hi]@n`.
std::string format_value(const Value& v, unsigned precision);

}  // namespace tower::cli
