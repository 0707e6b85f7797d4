#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gbx/errors.hpp"
#include "gbx/real50.hpp"

namespace gbx {

// Variable bindings for expression evaluation.  Names are case-sensitive
// identifiers; values are 50-digit reals.
using ExprEnv = std::map<std::string, real50>;

namespace detail {
struct ExprNode;
}

// A parsed arithmetic expression over real50.
//
// Grammar (usual precedence, '^' binds tightest and associates right):
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := '-' factor | power
//   power   := atom ('^' factor)?
//   atom    := NUMBER | IDENT | IDENT '(' expr (',' expr)* ')' | '(' expr ')'
//
// NUMBER is a decimal literal with optional fraction and exponent, parsed at
// full 50-digit precision.  IDENT resolves against, in order: the builtin
// constants pi and e, then the evaluation environment.  Builtin functions:
// log, loglog, sqrt, exp, abs, min, max (min and max take two arguments,
// the rest one).
//
// parse throws format_error with a character position on malformed input.
// eval throws domain_error for unbound variables or arguments outside a
// function's domain (log of a nonpositive value, sqrt of a negative value).
class Expr {
  public:
    static Expr parse(const std::string& text);

    real50 eval(const ExprEnv& env) const;

    // Unbound identifiers the expression needs, sorted, builtins excluded.
    std::vector<std::string> variables() const;

    const std::string& text() const { return text_; }

  private:
    std::shared_ptr<const detail::ExprNode> root_;
    std::string text_;
};

} // namespace gbx
